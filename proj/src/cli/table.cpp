#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qudit/cli.hpp"
#include "qudit/config.hpp"
#include "qudit/representations.hpp"

namespace qudit::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

// Columns named prefix + integer, in table order.
std::vector<int> indexed_columns(const Table& table, char prefix) {
  std::vector<int> idx;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    const auto& name = table.columns[c];
    if (name.size() < 2 || name[0] != prefix) continue;
    if (name.find_first_not_of("0123456789", 1) != std::string::npos) continue;
    idx.push_back(static_cast<int>(c));
  }
  return idx;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double read_cell(const std::string& cell) {
  if (cell == "nan") return std::nan("");
  return parse_number(cell);
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // folds -0 into 0
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

void Table::add(std::vector<double> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("row width " + std::to_string(row.size()) + " != " +
                           std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

int Table::column(std::string_view name) const {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] == name) return static_cast<int>(c);
  }
  return -1;
}

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    os << (c ? "," : "") << table.columns[c];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? "," : "") << format_double(row[c]);
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& table) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (std::isfinite(row[c])) {
        obj[table.columns[c]] = row[c];
      } else {
        obj[table.columns[c]] = nullptr;
      }
    }
    rows.push_back(std::move(obj));
  }
  ordered_json doc = {{"columns", table.columns}, {"rows", std::move(rows)}};
  os << doc.dump(1) << '\n';
}

Table read_csv(std::istream& is) {
  Table table;
  std::string line;
  if (!std::getline(is, line)) throw IoError("empty CSV file");
  table.columns = split_line(line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split_line(line);
    if (cells.size() != table.columns.size()) {
      throw IoError("CSV row " + std::to_string(table.rows.size() + 1) + " has " +
                    std::to_string(cells.size()) + " cells, expected " +
                    std::to_string(table.columns.size()));
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& cell : cells) row.push_back(read_cell(cell));
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table read_json(std::istream& is) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(is);
  } catch (const ordered_json::exception& e) {
    throw IoError(std::string("malformed JSON: ") + e.what());
  }
  Table table;
  table.columns = doc.at("columns").get<std::vector<std::string>>();
  for (const auto& obj : doc.at("rows")) {
    std::vector<double> row;
    row.reserve(table.columns.size());
    for (const auto& name : table.columns) {
      const auto& v = obj.at(name);
      row.push_back(v.is_null() ? std::nan("") : v.get<double>());
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

ValidationReport validate_table(const Table& table) {
  ValidationReport report;
  report.rows = table.rows.size();
  const int physical = table.column("physical");
  const auto p_cols = indexed_columns(table, 'p');
  const auto l_cols = indexed_columns(table, 'l');
  const auto t_cols = indexed_columns(table, 't');

  auto fail = [&](std::size_t row, const std::string& what) {
    if (report.failures++ == 0) {
      report.first_failure = "row " + std::to_string(row + 1) + ": " + what;
    }
  };

  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (physical >= 0 && row[static_cast<std::size_t>(physical)] != 1.0) continue;
    ++report.physical_rows;
    if (p_cols.empty()) {
      for (double v : row) {
        if (!std::isfinite(v)) {
          fail(r, "non-finite value in a physical row");
          break;
        }
      }
      continue;
    }
    Vector p(static_cast<Eigen::Index>(p_cols.size()));
    for (std::size_t j = 0; j < p_cols.size(); ++j) {
      p[static_cast<Eigen::Index>(j)] = row[static_cast<std::size_t>(p_cols[j])];
    }
    if (!on_simplex(p)) {
      fail(r, "p is not on the simplex");
      continue;
    }
    if (!l_cols.empty()) {
      const Vector lambda = p_to_lambda(p);
      if (static_cast<std::size_t>(lambda.size()) != l_cols.size()) {
        fail(r, "lambda column count does not match p");
        continue;
      }
      for (std::size_t k = 0; k < l_cols.size(); ++k) {
        if (!(std::abs(lambda[static_cast<Eigen::Index>(k)] -
                       row[static_cast<std::size_t>(l_cols[k])]) <= 1e-9)) {
          fail(r, "lambda mismatch in " + table.columns[static_cast<std::size_t>(l_cols[k])]);
          break;
        }
      }
    }
    if (!t_cols.empty()) {
      const Vector t = invariants(p);
      if (static_cast<std::size_t>(t.size()) != t_cols.size()) {
        fail(r, "invariant column count does not match p");
        continue;
      }
      for (std::size_t k = 0; k < t_cols.size(); ++k) {
        if (!(std::abs(t[static_cast<Eigen::Index>(k)] -
                       row[static_cast<std::size_t>(t_cols[k])]) <= 1e-9)) {
          fail(r, "invariant mismatch in " + table.columns[static_cast<std::size_t>(t_cols[k])]);
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace qudit::cli
