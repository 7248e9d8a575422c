#include <doctest.h>

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bhdimer/error.hpp"
#include "bhdimer/harness.hpp"
#include "bhdimer/report_io.hpp"

using namespace bhdimer;

namespace {

Scenario small_scenario() {
  return parse_scenario_json(R"({"label": "small", "u": 0.5, "N": 20, "t_max": 300})");
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("harness-cli") {

TEST_CASE("format_number round-trips doubles") {
  for (double x : {0.0, 1.0, -2.5, 0.1, 1.0 / 3.0, 6.02214076e23, 5e-324, 628.31853071795865}) {
    const auto text = format_number(x);
    double back = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), back);
    CHECK(back == x);
  }
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(2.0) == "2");
}

TEST_CASE("run_scenario fills every requested series and the report") {
  const auto r = run_scenario(small_scenario());
  REQUIRE(r.exact);
  REQUIRE(r.semianalytic);
  REQUIRE(r.closedform);
  CHECK(r.exact->size() == r.times.size());
  CHECK(r.report.structure);
  CHECK(r.report.envelope_rmse);
  CHECK(r.report.fitted_collapse_time);
  CHECK(r.report.label == "small");
  // T_R ~ 125.7, so revivals m = 1, 2 fall inside t_max = 300.
  CHECK(r.report.peaks.size() == 2);
  CHECK(r.exact->values()[0] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("run_scenario at u = 0 notes the missing structure") {
  auto s = builtin_scenario("rabi-only");
  s.params = ModelParams(1.0, 0.0, 10);
  s.t_max = 10.0;
  s.outputs = {true, true, true};
  const auto r = run_scenario(s);
  CHECK_FALSE(r.report.structure);
  CHECK_FALSE(r.closedform);
  CHECK(r.semianalytic);
  REQUIRE(r.report.rabi_max_deviation);
  CHECK(*r.report.rabi_max_deviation < 1e-10);
  CHECK_FALSE(r.report.notes.empty());
}

TEST_CASE("run_scenario is independent of the thread count") {
  const auto one = run_scenario(small_scenario(), {1});
  const auto four = run_scenario(small_scenario(), {4});
  CHECK(one.exact->values() == four.exact->values());
  CHECK(one.exact->envelope() == four.exact->envelope());
}

TEST_CASE("series CSV layout") {
  const auto r = run_scenario(small_scenario());
  std::ostringstream out;
  write_series_csv(out, columns_of(r));
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == r.times.size() + 1);
  CHECK(lines[0] == "t,delta_exact,env_exact,delta_semianalytic,delta_closedform,env_closedform");
  CHECK(lines[1].rfind("0,", 0) == 0);

  SeriesColumns partial{r.times, &*r.exact, nullptr, nullptr};
  std::ostringstream p;
  write_series_csv(p, partial);
  const auto plines = lines_of(p.str());
  CHECK(plines[2].substr(plines[2].size() - 3) == ",,,");
  CHECK(std::count(plines[2].begin(), plines[2].end(), ',') == 5);
}

TEST_CASE("output is deterministic") {
  const auto a = run_scenario(small_scenario());
  const auto b = run_scenario(small_scenario());
  std::ostringstream ca, cb;
  write_series_csv(ca, columns_of(a));
  write_series_csv(cb, columns_of(b));
  CHECK(ca.str() == cb.str());
  CHECK(compare_json(a) == compare_json(b));
}

TEST_CASE("JSON documents parse and carry the structure") {
  const auto r = run_scenario(small_scenario());
  const auto doc = nlohmann::json::parse(compare_json(r));
  CHECK(doc.contains("report"));
  CHECK(doc.contains("series"));
  const auto& st = doc["report"]["structure"];
  CHECK(st["T_R"].get<double>() == doctest::Approx(std::numbers::pi * 20 / 0.5));
  CHECK(st["peaks"].is_array());

  const auto a = nlohmann::json::parse(analytic_json(*r.report.structure, columns_of(r)));
  CHECK(a["structure"]["T_c"].get<double>() == doctest::Approx(std::sqrt(40.0) / 0.5));
}

TEST_CASE("spectrum table and writers") {
  const ModelParams p = ModelParams::from_coupling(1.0, 0.5, 4);
  const auto rows = spectrum_table(p);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) CHECK(rows[i].n < rows[i + 1].n);
  CHECK(rows.front().n == -2.0);
  CHECK(rows.back().n == 2.0);
  // Level n = N/2 is the lowest exact level.
  for (const auto& r : rows) CHECK(rows.back().exact <= r.exact);

  std::ostringstream out;
  write_spectrum_csv(out, rows);
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "n,exact,first_order,second_order");
  const auto doc = nlohmann::json::parse(spectrum_json(p, rows));
  CHECK(doc.dump().find("first_order") != std::string::npos);
}

TEST_CASE("timescales") {
  const auto t = compute_timescales(ModelParams::from_coupling(1.0, 0.05, 50), std::numbers::pi / 4);
  REQUIRE(t.structure);
  REQUIRE(t.tilted_revival_time);
  CHECK(*t.tilted_revival_time == doctest::Approx(3263.99236736601895).epsilon(1e-14));
  std::ostringstream out;
  write_timescales_csv(out, t);
  CHECK(out.str().rfind("key,value\n", 0) == 0);
  CHECK(nlohmann::json::parse(timescales_json(t)).is_object());

  const auto z = compute_timescales(ModelParams(1.0, 0.0, 50), 0.0);
  CHECK_FALSE(z.structure);
  CHECK_FALSE(z.tilted_revival_time);
  CHECK(nlohmann::json::parse(timescales_json(z)).is_object());
}

}  // TEST_SUITE
