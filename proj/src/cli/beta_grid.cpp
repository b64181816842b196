#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "qudit/cli.hpp"
#include "qudit/thermal.hpp"

namespace qudit::cli {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_count(std::string_view token) {
  token = trim(token);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 1) {
    throw ConfigError("invalid sample count '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

double parse_number(std::string_view token) {
  token = trim(token);
  if (token == "inf" || token == "+inf") return std::numeric_limits<double>::infinity();
  if (token == "-inf") return -std::numeric_limits<double>::infinity();
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() ||
      std::isnan(value)) {
    throw ConfigError("invalid number '" + std::string(token) + "'");
  }
  return value;
}

std::vector<double> parse_list(std::string_view spec) {
  std::vector<double> values;
  for (auto item : split(spec, ',')) values.push_back(parse_number(item));
  return values;
}

std::vector<double> parse_range(std::string_view spec) {
  const auto parts = split(spec, ':');
  if (parts.size() == 1) return {parse_number(parts[0])};
  if (parts.size() != 3) {
    throw ConfigError("range '" + std::string(spec) + "' must be lo:hi:count");
  }
  const double lo = parse_number(parts[0]);
  const double hi = parse_number(parts[1]);
  const int count = parse_count(parts[2]);
  if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo) {
    throw ConfigError("range '" + std::string(spec) + "' needs finite lo <= hi");
  }
  return lin_grid(lo, hi, count);
}

std::vector<double> parse_beta_grid(std::string_view spec) {
  std::vector<double> grid;
  for (auto item : split(spec, ',')) {
    item = trim(item);
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      const double b = parse_number(item);
      if (b < 0.0) throw ConfigError("beta values must be >= 0");
      grid.push_back(b);
      continue;
    }
    if (parts.size() != 4 || (parts[0] != "log" && parts[0] != "lin")) {
      throw ConfigError("beta grid item '" + std::string(item) +
                        "' must be log:lo:hi:count or lin:lo:hi:count");
    }
    const double lo = parse_number(parts[1]);
    const double hi = parse_number(parts[2]);
    const int count = parse_count(parts[3]);
    if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo || lo < 0.0) {
      throw ConfigError("beta grid item '" + std::string(item) + "' needs finite 0 <= lo <= hi");
    }
    if (parts[0] == "log" && lo <= 0.0) {
      throw ConfigError("log grid '" + std::string(item) + "' needs lo > 0");
    }
    const auto block = parts[0] == "log" ? log_grid(lo, hi, count) : lin_grid(lo, hi, count);
    grid.insert(grid.end(), block.begin(), block.end());
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace qudit::cli
