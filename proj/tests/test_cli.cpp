#include <doctest.h>

#include <chrono>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "fjb/cli.hpp"

using json = nlohmann::json;
using fjb::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(FJB_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Numbers match to 1e-12 relative; values below 1e-12 in magnitude are quadrature noise.
bool same(const json& a, const json& b, const std::string& path, std::string& why) {
  if (a.is_number() && b.is_number()) {
    const double x = a.get<double>(), y = b.get<double>();
    if (std::abs(x - y) <= 1e-12 * std::max({std::abs(x), std::abs(y), 1.0})) return true;
    why = path + ": " + a.dump() + " vs " + b.dump();
    return false;
  }
  if (a.type() != b.type()) {
    why = path + ": type mismatch";
    return false;
  }
  if (a.is_object()) {
    if (a.size() != b.size()) {
      why = path + ": key count";
      return false;
    }
    for (auto it = a.begin(); it != a.end(); ++it) {
      if (!b.contains(it.key())) {
        why = path + ": missing " + it.key();
        return false;
      }
      if (!same(it.value(), b[it.key()], path + "." + it.key(), why)) return false;
    }
    return true;
  }
  if (a.is_array()) {
    if (a.size() != b.size()) {
      why = path + ": length";
      return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!same(a[i], b[i], path + "[" + std::to_string(i) + "]", why)) return false;
    return true;
  }
  if (a != b) why = path + ": " + a.dump() + " vs " + b.dump();
  return a == b;
}

void check_golden(const std::vector<std::string>& args, const std::string& golden) {
  const auto r = call(args);
  REQUIRE(r.code == 0);
  std::string why;
  CHECK_MESSAGE(same(json::parse(r.out), json::parse(slurp(golden)), "$", why), why);
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("fj golden") {
  check_golden({"fj", "--p", "4", "--q", "4", "--lambda-x2", "4"}, "fj_4_4_4.json");
  const auto j = json::parse(call({"fj", "--p", "4", "--q", "4", "--lambda-x2", "4"}).out);
  CHECK(j["a"] == 1);
  CHECK(j["inf_char_x2"] == json::array({12, 6, 4, 2}));
}

TEST_CASE("period golden") {
  check_golden({"period", "--p", "4", "--q", "4", "--lambda-x2", "4", "--target-x2", "3", "--subgroup", "g2"},
               "period_4_4_4_3_g2.json");
  const auto j =
      json::parse(call({"period", "--p", "4", "--q", "4", "--lambda-x2", "4", "--target-x2", "3", "--subgroup", "g2"}).out);
  const double oracle = 2 * M_PI * M_PI * (8 * M_PI / 3) / 12.0;
  CHECK(std::abs(j["value"].get<double>() - oracle) <= 1e-9 * oracle);
}

TEST_CASE("packet golden") {
  check_golden({"packet", "--p", "4", "--q", "4", "--lambda-x2", "4"}, "packet_4_4.json");
  check_golden({"packet", "--p", "3", "--q", "3", "--inner-forms-only"}, "packet_3_3_inner.json");
  const auto j = json::parse(call({"packet", "--p", "4", "--q", "4"}).out);
  CHECK(j["size"] == 2);
}

TEST_CASE("branch tables") {
  const auto r = call({"branch", "--p", "4", "--q", "4", "--lambda-x2", "4", "--subgroup", "g2", "--max-target-x2", "7",
                       "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  const auto golden = csv_rows(slurp("branch_4_4_4_g2.csv"));
  REQUIRE(rows.size() == golden.size());
  CHECK(rows[0] == golden[0]);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == golden[i].size());
    for (std::size_t c = 0; c < rows[i].size(); ++c) {
      if (golden[0][c] == "value" || golden[0][c] == "err") {
        const double x = std::stod(rows[i][c]), y = std::stod(golden[i][c]);
        CHECK(std::abs(x - y) <= 1e-12 * std::max({std::abs(x), std::abs(y), 1.0}));
      } else {
        CHECK(rows[i][c] == golden[i][c]);
      }
    }
  }

  const auto g1 = call({"branch", "--p", "4", "--q", "4", "--lambda-x2", "4", "--subgroup", "g1", "--max-target-x2", "9",
                        "--format", "csv"});
  REQUIRE(g1.code == 0);
  const auto g1rows = csv_rows(g1.out);
  int nonzero = 0;
  for (std::size_t i = 1; i < g1rows.size(); ++i)
    if (g1rows[i][6] == "true") {
      ++nonzero;
      CHECK(g1rows[i][4] == "5");
    }
  CHECK(nonzero == 1);

  const auto empty = call({"branch", "--p", "4", "--q", "4", "--lambda-x2", "4", "--subgroup", "g2", "--max-target-x2",
                           "0", "--format", "csv"});
  CHECK(empty.code == 0);
  CHECK(csv_rows(empty.out).size() == 1);

  const auto js = call({"branch", "--p", "4", "--q", "4", "--lambda-x2", "4", "--subgroup", "g2", "--max-target-x2", "7"});
  REQUIRE(js.code == 0);
  CHECK(json::parse(js.out)["rows"].size() == 4);
}

TEST_CASE("exit codes") {
  CHECK(call({"fj", "--p", "4", "--q", "4", "--lambda-x2", "0"}).code == 2);
  CHECK(call({"fj", "--p", "3", "--q", "4", "--lambda-x2", "4"}).code == 2);
  CHECK(call({"packet", "--p", "5", "--q", "5"}).code == 2);
  CHECK(call({"packet", "--p", "6", "--q", "4"}).code == 2);
  CHECK(call({"nonsense"}).code == 2);
  CHECK(call({"fj", "--p", "4"}).code == 2);
  const auto d = call({"period", "--p", "4", "--q", "4", "--lambda-x2", "4", "--target-x2", "-5", "--subgroup", "g2"});
  CHECK(d.code == 3);
  CHECK(d.err.find("-0.5") != std::string::npos);
  CHECK(call({"period", "--p", "4", "--q", "6", "--lambda-x2", "5", "--target-x2", "3", "--subgroup", "g2"}).code == 2);
}

TEST_CASE("check suites") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = call({"check", "--suite", "quadrature"});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(r.code == 0);
  CHECK(secs < 10.0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(call({"check", "--suite", "bogus"}).code == 2);
  // same seed, same report
  CHECK(call({"check", "--suite", "decay", "--seed", "3"}).out == call({"check", "--suite", "decay", "--seed", "3"}).out);
}
