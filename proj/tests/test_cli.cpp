#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qudit/cli.hpp"
#include "qudit/representations.hpp"
#include "qudit/thermal.hpp"

using namespace qudit::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qudit-geom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "qudit_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

Table parse_csv(const std::string& text) {
  std::istringstream is(text);
  return read_csv(is);
}

}  // namespace

TEST_CASE("beta grid parsing") {
  const auto g = parse_beta_grid("0,log:1e-3:1e3:200");
  REQUIRE(g.size() == 201);
  CHECK(g == qudit::default_beta_grid());
  CHECK(parse_beta_grid("2,1,1,inf") == std::vector<double>{1, 2, std::numeric_limits<double>::infinity()});
  CHECK(parse_beta_grid("lin:0:1:3") == std::vector<double>{0, 0.5, 1});
  CHECK_THROWS_AS(parse_beta_grid("log:0:1:3"), ConfigError);
  CHECK_THROWS_AS(parse_beta_grid("-1"), ConfigError);
  CHECK_THROWS_AS(parse_beta_grid("foo"), ConfigError);
  CHECK_THROWS_AS(parse_beta_grid(""), ConfigError);
  CHECK(parse_range("-6:6:3") == std::vector<double>{-6, 0, 6});
  CHECK(parse_range("1.5") == std::vector<double>{1.5});
  CHECK(parse_list("0.5,0.25,0.25") == std::vector<double>{0.5, 0.25, 0.25});
  CHECK(std::isinf(parse_number("inf")));
  CHECK_THROWS_AS(parse_number("1x"), ConfigError);
}

TEST_CASE("format_double round-trips") {
  std::mt19937_64 rng(81);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int k = 0; k < 10000; ++k) {
    const double x = u(rng) * std::pow(10.0, (k % 40) - 20);
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(1.0 / 3) == "0.3333333333333333");
  CHECK(format_double(std::nan("")) == "nan");
  CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("CSV and JSON tables round-trip") {
  Table t;
  t.columns = {"a", "b"};
  t.add({1.0 / 3, -2.5});
  t.add({1e-300, 7});
  CHECK(t.column("b") == 1);
  CHECK(t.column("c") == -1);
  CHECK_THROWS(t.add({1.0}));

  std::stringstream csv;
  write_csv(csv, t);
  const auto back = read_csv(csv);
  CHECK(back.columns == t.columns);
  CHECK(back.rows == t.rows);

  std::stringstream js;
  write_json(js, t);
  const auto back_json = read_json(js);
  CHECK(back_json.columns == t.columns);
  CHECK(back_json.rows == t.rows);
}

TEST_CASE("validate_table catches corrupted rows") {
  Table t;
  t.columns = {"p1", "p2", "p3", "l7", "l8", "t2", "t3", "physical"};
  const qudit::Vector p = (qudit::Vector(3) << 0.5, 0.3, 0.2).finished();
  const qudit::Vector l = qudit::p_to_lambda(p);
  const qudit::Vector inv = qudit::invariants(p);
  t.add({p[0], p[1], p[2], l[0], l[1], inv[0], inv[1], 1});
  CHECK(validate_table(t).failures == 0);
  CHECK(validate_table(t).physical_rows == 1);
  t.rows[0][5] += 1e-6;
  const auto report = validate_table(t);
  CHECK(report.failures == 1);
  CHECK_FALSE(report.first_failure.empty());
  // masked rows are not checked
  t.rows[0][7] = 0;
  CHECK(validate_table(t).failures == 0);
}

TEST_CASE("thermal command: columns and endpoints") {
  const auto r = invoke({"thermal", "--model", "linear", "--J", "1", "--omega", "1",
                         "--beta-grid", "0,log:1e-3:1e3:200"});
  REQUIRE(r.code == kSuccess);
  const auto t = parse_csv(r.out);
  CHECK(t.columns == std::vector<std::string>{"beta", "p1", "p2", "p3", "l7", "l8", "t2", "t3",
                                              "physical"});
  REQUIRE(t.rows.size() == 201);
  CHECK(t.rows.front()[1] == doctest::Approx(1.0 / 3));
  CHECK(t.rows.front()[6] == doctest::Approx(1.0 / 3));
  CHECK(t.rows.back()[0] == 1000.0);
  CHECK(t.rows.back()[1] == 1.0);
  CHECK(t.rows.back()[6] == 1.0);
  CHECK(t.rows.back()[7] == 1.0);
  CHECK(validate_table(t).failures == 0);
}

TEST_CASE("locus command example validates") {
  const auto path = scratch("locus.csv");
  const auto r = invoke({"locus", "--n", "3", "--t3", "0.25", "--samples", "512", "--out",
                         path.string(), "--validate"});
  REQUIRE(r.code == kSuccess);
  CHECK(r.err.find("\"validated\"") != std::string::npos);
  const auto t = parse_csv(slurp(path));
  CHECK(t.rows.size() == 512);
  const int t3 = t.column("t3");
  REQUIRE(t3 >= 0);
  for (const auto& row : t.rows) CHECK(std::abs(row[static_cast<std::size_t>(t3)] - 0.25) < 1e-10);
  CHECK(fs::exists(path.string() + ".meta.json"));
  CHECK(slurp(path.string() + ".meta.json").find("\"counts\"") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::vector<std::string>> commands{
      {"thermal", "--model", "lmg", "--J", "1.5", "--gminus", "0.5", "--gplus", "-3"},
      {"locus", "--n", "4", "--t3", "0.175", "--theta-samples", "16", "--phi-samples", "24"},
      {"phase-diagram", "--J", "1", "--gminus", "-2:2:9", "--gplus", "-6:6:9", "--beta", "inf"},
      {"boundary", "--samples", "32", "--format", "json"},
      {"flower", "--J", "1", "--beta-grid", "lin:0:5:11"},
      {"frame", "--n", "4", "--format", "json"},
  };
  for (const auto& args : commands) {
    const auto a = invoke(args);
    const auto b = invoke(args);
    CHECK_MESSAGE(a.code == kSuccess, args.front() << ": " << a.err);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("map command") {
  const auto r = invoke({"map", "--n", "3", "--p", "0.5,0.25,0.25"});
  REQUIRE(r.code == kSuccess);
  const auto t = parse_csv(r.out);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][static_cast<std::size_t>(t.column("t2"))] == doctest::Approx(0.375));
  const auto back = invoke({"map", "--n", "3", "--lambda", "0,0"});
  REQUIRE(back.code == kSuccess);
  CHECK(parse_csv(back.out).rows[0][0] == doctest::Approx(1.0 / 3));
}

TEST_CASE("configuration errors exit with 2 and a JSON message") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"locus", "--n", "3", "--t2", "5"},
           {"locus", "--n", "7", "--t2", "0.5"},
           {"thermal", "--model", "lmg", "--J", "1.25"},
           {"thermal", "--beta-grid", "log:0:1:5"},
           {"thermal", "--omega", "-1"},
           {"map", "--n", "3", "--p", "0.5,0.5"},
           {"bogus"},
           {},
           {"frame", "--validate"},
       }) {
    const auto r = invoke(args);
    CHECK(r.code == kConfigError);
    CHECK(r.err.rfind("{\"error\":", 0) == 0);
    CHECK(r.out.empty());
  }
}

TEST_CASE("unwritable output exits with 3") {
  const auto r = invoke({"frame", "--out", "/nonexistent-dir/x/y.csv"});
  CHECK(r.code == kIoError);
  CHECK(r.err.find("\"io\"") != std::string::npos);
}

TEST_CASE("JSON output round-trips and matches CSV") {
  const auto path = scratch("flower.json");
  const auto r = invoke({"flower", "--J", "1", "--beta-grid", "lin:0:3:7", "--format", "json",
                         "--out", path.string(), "--validate"});
  REQUIRE(r.code == kSuccess);
  std::ifstream is(path);
  const auto from_json = read_json(is);
  const auto csv = invoke({"flower", "--J", "1", "--beta-grid", "lin:0:3:7"});
  const auto from_csv = parse_csv(csv.out);
  CHECK(from_json.columns == from_csv.columns);
  CHECK(from_json.rows == from_csv.rows);
  CHECK(from_json.rows.size() == 6 * 7);
}

TEST_CASE("help and version exit cleanly") {
  CHECK(invoke({"--version"}).code == 0);
  CHECK(invoke({"--help"}).code == 0);
}
