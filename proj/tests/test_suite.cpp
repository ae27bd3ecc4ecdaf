#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ctred/suite.hpp"

using namespace ctred;

namespace {

SuiteSpec spec_for(const std::string& suite) {
  SuiteSpec s;
  s.suite = suite;
  return s;
}

nlohmann::json without_timing(nlohmann::json j) {
  for (auto& cell : j) cell.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_CASE("bounds are enforced") {
  SuiteSpec s = spec_for("identity2");
  s.n = 7;
  CHECK_THROWS_AS(validate(s), UsageError);
  s.n = 6;
  CHECK_NOTHROW(validate(s));
  s.m = 5;
  CHECK_THROWS_AS(validate(s), UsageError);
  s = spec_for("macdonald");
  s.a = 3;
  CHECK_THROWS_AS(validate(s), UsageError);
  s = spec_for("jacobi");
  s.order = 65;
  CHECK_THROWS_AS(validate(s), UsageError);
  s.order = 1;
  CHECK_THROWS_AS(validate(s), UsageError);
  CHECK_THROWS_AS(validate(spec_for("nonsense")), UsageError);
  s = spec_for("all");
  s.max_n = 0;
  CHECK_THROWS_AS(validate(s), UsageError);
  s = spec_for("identity1");
  s.threads = 0;
  CHECK_THROWS_AS(validate(s), UsageError);
}

TEST_CASE("single cell requests") {
  SuiteSpec s = spec_for("identity2");
  s.n = 4;
  s.m = 2;
  const auto reports = run_suites(s);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].equal);
  CHECK(reports[0].routes.front().value == 35);
  CHECK(exit_code(reports) == 0);

  s = spec_for("identity1");
  s.n = 3;
  const auto r1 = run_suites(s);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].routes.front().value == 7);
}

TEST_CASE("JSON schema") {
  SuiteSpec s = spec_for("identity2");
  s.n = 2;
  s.max_m = 1;
  const nlohmann::json j = to_json(run_suites(s));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  for (const auto& cell : j) {
    CHECK(cell.at("suite") == "identity2");
    CHECK(cell.at("params").is_object());
    CHECK(cell.at("equal").is_boolean());
    CHECK(cell.at("elapsed_ms").is_number());
    CHECK_FALSE(cell.contains("skipped"));
    for (const auto& route : cell.at("routes")) {
      CHECK(route.at("name").is_string());
      CHECK(route.at("value").is_string());
    }
  }
  CHECK(j[1].at("routes")[0].at("value") == "3");
  CHECK(j[1].at("params").at("m") == 1);
}

TEST_CASE("fractions are serialized as p/q strings") {
  VerificationReport r{"jacobi", {{"check", std::string("spot")}}, {{"lhs", make_rat(1, 4)}}};
  finalize(r);
  const nlohmann::json j = to_json(r);
  CHECK(j.at("routes")[0].at("value") == "1/4");
  CHECK(j.at("params").at("check") == "spot");
  r.skipped = true;
  r.note = "out of memory";
  CHECK(to_json(r).at("skipped") == true);
}

TEST_CASE("reports are sorted and reproducible") {
  SuiteSpec s = spec_for("all");
  s.max_n = 3;
  s.max_m = 1;
  s.max_abc = 1;
  s.samples = 3;
  s.seed = 7;
  const auto a = run_suites(s);
  for (std::size_t i = 1; i < a.size(); ++i) {
    const bool ordered = a[i - 1].suite < a[i].suite || (a[i - 1].suite == a[i].suite && a[i - 1].params <= a[i].params);
    CHECK(ordered);
  }
  CHECK(exit_code(a) == 0);
  const auto b = run_suites(s);
  CHECK(without_timing(to_json(a)) == without_timing(to_json(b)));
  s.threads = 4;
  const auto c = run_suites(s);
  CHECK(without_timing(to_json(a)) == without_timing(to_json(c)));
}

TEST_CASE("seed moves the reduction samples") {
  SuiteSpec s = spec_for("reduction");
  s.n = 4;
  s.samples = 2;
  s.seed = 1;
  const auto a = run_suites(s);
  s.seed = 2;
  const auto b = run_suites(s);
  REQUIRE(a.size() == 2);
  REQUIRE(b.size() == 2);
  CHECK(without_timing(to_json(std::vector{a[1]})) == without_timing(to_json(std::vector{b[0]})));
}

TEST_CASE("exit code and failure text") {
  VerificationReport good{"x", {{"n", 1L}}, {{"a", 1}, {"b", 1}}};
  finalize(good);
  VerificationReport bad{"x", {{"n", 2L}}, {{"a", 1}, {"b", make_rat(3, 2)}}};
  finalize(bad);
  VerificationReport skipped{"x", {{"n", 3L}}, {}};
  skipped.skipped = true;
  CHECK(exit_code({good, skipped}) == 0);
  CHECK(exit_code({good, bad}) == 1);
  const std::string text = format_failure(bad);
  CHECK(text.find("a = 1") != std::string::npos);
  CHECK(text.find("b = 3/2") != std::string::npos);
  CHECK(format_text(bad, false).rfind("FAIL", 0) == 0);
  CHECK(format_text(good, false).rfind("PASS", 0) == 0);
  CHECK(format_text(good, true).find("\033[") != std::string::npos);
  CHECK(format_text(good, false).find("\033[") == std::string::npos);
}

TEST_CASE("jacobi suite cells") {
  const auto reports = run_suites(spec_for("jacobi"));
  CHECK(reports.size() == 25);
  for (const auto& r : reports) {
    CHECK_FALSE(r.skipped);
    CHECK(r.equal);
  }
  SuiteSpec low = spec_for("jacobi");
  low.order = 2;
  bool any_skipped = false;
  for (const auto& r : run_suites(low)) any_skipped = any_skipped || r.skipped;
  CHECK(any_skipped);
  CHECK(exit_code(run_suites(low)) == 0);
}
