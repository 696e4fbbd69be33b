#include <doctest.h>

#include <cmath>
#include <set>

#include "polypi/report.hpp"
#include "polypi/suites.hpp"

using namespace polypi;

namespace {

SuiteConfig small(Execution e) {
  SuiteConfig c;
  c.samples = 12;
  c.seed = 5;
  c.execution = e;
  c.max_depth = 10;
  c.mesh_levels = 4;
  c.max_points = 8;
  return c;
}

std::string dump(const SuiteReport& r) {
  std::string out;
  for (const auto& row : r.rows) out += report::suite_row(r.suite, row).dump() + "\n";
  return out;
}

}  // namespace

TEST_CASE("twelve named suites") {
  CHECK(suite_names().size() == 12);
  for (auto name : {"monotone", "bounds", "identities", "h-ratio", "chord-compare", "tangent-compare",
                    "projections", "tangent-profile", "rational", "circuit-sandwich", "area-sandwich",
                    "trig-sandwich"}) {
    CHECK(is_suite(name));
  }
  CHECK_FALSE(is_suite("nope"));
  CHECK(default_samples("chord-compare") == 1000);
  CHECK(default_samples("circuit-sandwich") == 100);
}

TEST_CASE("every suite passes on a small run") {
  for (auto name : suite_names()) {
    CAPTURE(name);
    const SuiteReport r = run_suite(name, small(Execution::Parallel));
    CHECK(!r.rows.empty());
    CHECK(r.overall() == RowStatus::Pass);
    CHECK(r.count(RowStatus::Pass) == r.rows.size());
  }
}

TEST_CASE("serial and parallel runs are byte identical") {
  for (auto name : {"chord-compare", "projections", "identities", "circuit-sandwich", "rational"}) {
    CAPTURE(name);
    SuiteConfig par = small(Execution::Parallel);
    par.jobs = 4;
    CHECK(dump(run_suite(name, small(Execution::Serial))) == dump(run_suite(name, par)));
  }
}

TEST_CASE("seeds select different but reproducible samples") {
  SuiteConfig a = small(Execution::Serial), b = a;
  b.seed = 6;
  CHECK(dump(run_suite("tangent-compare", a)) == dump(run_suite("tangent-compare", a)));
  CHECK(dump(run_suite("tangent-compare", a)) != dump(run_suite("tangent-compare", b)));
}

TEST_CASE("arc draws stay in range") {
  std::set<int> ns;
  for (std::uint64_t s = 0; s < 2000; ++s) {
    const ArcSample a = draw_arc(s, 32);
    CHECK(a.chord_units * std::ldexp(1.0, -20) > 0.1);
    CHECK(a.chord_units * std::ldexp(1.0, -20) < 1.99);
    CHECK(a.n >= 2);
    CHECK(a.n <= 32);
    CHECK(a.m >= 1);
    CHECK(a.m < a.n);
    ns.insert(a.n);
  }
  CHECK(ns.size() == 31);
  const ArcSpec arc = arc_recipe(draw_arc(3, 32))(128);
  CHECK(arc.chord_total().is_point());
}

TEST_CASE("report status folding") {
  SuiteReport r;
  r.rows.resize(3);
  r.rows[0].status = RowStatus::Pass;
  r.rows[1].status = RowStatus::Inconclusive;
  r.rows[2].status = RowStatus::Pass;
  CHECK(r.overall() == RowStatus::Inconclusive);
  r.rows[0].status = RowStatus::Violated;
  CHECK(r.overall() == RowStatus::Violated);
  CHECK(r.count(RowStatus::Pass) == 1);
  CHECK(to_string(RowStatus::Inconclusive) == "inconclusive");
}

TEST_CASE("unknown suites are rejected") {
  try {
    run_suite("nope");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolation);
  }
}
