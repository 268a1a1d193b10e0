#include <algorithm>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "matclose/errors.hpp"
#include "matclose/report.hpp"
#include "matclose/suites.hpp"

using namespace matclose;

namespace {

SuiteConfig config(const std::string& suite, const std::string& ring) {
  SuiteConfig c;
  c.suite = suite;
  c.ring = ring;
  return c;
}

}  // namespace

TEST_CASE("suite listing") {
  const auto& suites = list_suites();
  CHECK(suites.size() >= 15);
  auto has = [&](const std::string& name) {
    return std::any_of(suites.begin(), suites.end(), [&](const SuiteInfo& s) { return s.name == name; });
  };
  for (const char* name : {"axioms", "units", "center", "lattice", "chain", "radical", "ibn", "delta"}) {
    CAPTURE(name);
    CHECK(has(name));
  }
  for (const auto& s : suites) CHECK_FALSE(s.statement.empty());
  CHECK(default_zoo().size() == 7);
}

TEST_CASE("reports are deterministic apart from timing lines") {
  for (const char* suite : {"axioms", "units", "vnr", "delta"}) {
    CAPTURE(suite);
    SuiteConfig c = config(suite, "Z/6");
    c.seed = 17;
    const std::string a = report_body(render_text(run_suite(c)));
    const std::string b = report_body(render_text(run_suite(c)));
    CHECK(a == b);
    CHECK(a.find("# elapsed") == std::string::npos);
    CHECK(a.rfind("config suite=", 0) == 0);
  }
  SuiteConfig c = config("axioms", "Z/6");
  c.seed = 2;
  const auto first = report_body(render_text(run_suite(c)));
  c.seed = 3;
  CHECK(first != report_body(render_text(run_suite(c))));
}

TEST_CASE("records are sorted by check then level and summarized") {
  const SuiteReport r = run_suite(config("radical", "Z/4"));
  CHECK(std::is_sorted(r.records.begin(), r.records.end(), [](const Record& a, const Record& b) {
    return a.check != b.check ? a.check < b.check : a.level < b.level;
  }));
  CHECK(r.passed == r.records.size());
  CHECK(r.exit_code() == 0);
  const std::string text = render_text(r, false);
  CHECK(text.find("check=radical.base ring=Z/4 n=2 verdict=holds witness=\"J={0,2}\"") != std::string::npos);
  CHECK(text.find("summary passed=") != std::string::npos);
}

TEST_CASE("exit codes") {
  SuiteReport r;
  CHECK(r.exit_code() == 0);
  r.vacuous = 2;
  CHECK(r.exit_code() == 0);
  r.undecided = 1;
  CHECK(r.exit_code() == 2);
  r.failed = 1;
  CHECK(r.exit_code() == 1);

  SuiteConfig big = config("lattice", "GF(5)xGF(5)");
  CHECK(run_suite(big).exit_code() == 2);

  CHECK_THROWS_AS(run_suite(config("no-such-suite", "GF(2)")), DomainError);
  CHECK_THROWS_AS(run_suite(config("units", "GF(4)")), ParseError);
  SuiteConfig zero = config("units", "GF(2)");
  zero.budget = 0;
  CHECK_THROWS_AS(run_suite(zero), DomainError);
  SuiteConfig bad_n = config("units", "GF(2)");
  bad_n.n = 1;
  CHECK_THROWS_AS(run_suite(bad_n), DomainError);
}

TEST_CASE("field quoting") {
  CHECK(format_field("ring", "Z/4") == "ring=Z/4");
  CHECK(format_field("ring", "GF(2) x Z/3") == "ring=\"GF(2) x Z/3\"");
  CHECK(format_field("module", "") == "module=\"\"");
  CHECK(format_field("witness", "a=\"b\"") == "witness=\"a=\\\"b\\\"\"");
  Record rec{"c", "GF(2)", 2, 1, Verdict::Undecided, "w", 0.0};
  CHECK(format_record(rec) == "check=c ring=GF(2) n=2 level=1 verdict=undecided-at-bound witness=w");
}

TEST_CASE("JSON rendering parses and mirrors the text report") {
  SuiteConfig c = config("chain", "GF(2)xZ/3");
  const SuiteReport r = run_suite(c);
  const auto j = nlohmann::json::parse(render_json(r));
  CHECK(j["config"]["suite"] == "chain");
  CHECK(j["config"]["n"] == 2);
  CHECK(j["records"].size() == r.records.size());
  CHECK(j["summary"]["exit"] == r.exit_code());
  CHECK_FALSE(j["records"][0].contains("elapsed_ms"));
  const auto timed = nlohmann::json::parse(render_json(r, true));
  CHECK(timed["records"][0].contains("elapsed_ms"));
  CHECK(render_json(r) == render_json(run_suite(c)));
}

TEST_CASE("every suite holds on a small ring") {
  for (const auto& s : list_suites()) {
    CAPTURE(s.name);
    SuiteConfig c = config(s.name, "GF(2)");
    if (s.name == "product-iso") c.ring = "GF(2)xZ/3";
    if (s.name == "poly-iso" || s.name == "group-iso" || s.name == "laurent-iso") c.ring = "Z/4";
    const SuiteReport r = run_suite(c);
    CHECK(r.failed == 0);
    CHECK(r.undecided == 0);
    CHECK_FALSE(r.records.empty());
  }
}
