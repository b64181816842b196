#pragma once

// Command-line front end of qudit-geom: run configuration parsing, tabular
// CSV/JSON output and the command runner.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qudit::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kSuccess = 0,
  kConfigError = 2,
  kIoError = 3,
  kNumericalError = 4,
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Comma-separated items, each `0`, `inf`, a number, `log:lo:hi:count` or
/// `lin:lo:hi:count`. The result is sorted ascending with duplicates removed.
std::vector<double> parse_beta_grid(std::string_view spec);

/// `lo:hi:count` (inclusive, evenly spaced) or a single number.
std::vector<double> parse_range(std::string_view spec);

/// Comma-separated numbers.
std::vector<double> parse_list(std::string_view spec);

double parse_number(std::string_view token);

/// Shortest decimal that reads back to the same double; `nan`, `inf`, `-inf`
/// for non-finite values.
std::string format_double(double value);

enum class Format { Csv, Json };

/// Numeric table with named columns; every dataset the tool writes is one.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add(std::vector<double> row);
  int column(std::string_view name) const;  // -1 when absent
};

void write_csv(std::ostream& os, const Table& table);
/// Array of objects keyed by column name; non-finite values become null.
void write_json(std::ostream& os, const Table& table);

Table read_csv(std::istream& is);
Table read_json(std::istream& is);

struct ValidationReport {
  std::size_t rows = 0;
  std::size_t physical_rows = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

/// Re-checks every physical row: sum p = 1, p_j >= -1e-12, and any lambda
/// (l*) and invariant (t*) columns against values recomputed from p.
ValidationReport validate_table(const Table& table);

/// Entry point behind main(); returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qudit::cli
