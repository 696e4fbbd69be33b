// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polypi/cli.hpp"
#include "polypi/oracle.hpp"
#include "polypi/rational_paths.hpp"
#include "polypi/regular_polygons.hpp"
#include "polypi/suites.hpp"

using namespace polypi;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits.
constexpr double kBoundsSeconds = 1.0;
constexpr double kDigitsSeconds = 10.0;
constexpr double kTheoremSeconds = 300.0;
constexpr int kGridPrecision = 256;
constexpr double kCrossSchemeWidth = 1e-20;
constexpr double kRatioLo = 3.9, kRatioHi = 4.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string summary(const SuiteReport& r) {
  std::ostringstream s;
  s << r.suite << ": " << r.rows.size() << " rows, " << r.count(RowStatus::Violated) << " violated, "
    << r.count(RowStatus::Inconclusive) << " inconclusive, " << r.count(RowStatus::Error) << " errors";
  return s.str();
}

bool clean(const SuiteReport& r) { return !r.rows.empty() && r.count(RowStatus::Pass) == r.rows.size(); }

std::size_t count_check(const SuiteReport& r, const std::string& prefix) {
  std::size_t c = 0;
  for (const auto& row : r.rows) c += row.check.rfind(prefix, 0) == 0;
  return c;
}

SuiteConfig grid_config() {
  SuiteConfig c;
  c.precision = kGridPrecision;
  c.max_depth = 25;
  return c;
}

Outcome archimedes() {
  const auto t0 = Clock::now();
  std::ostringstream out, err;
  const int code = cli::execute({"bounds", "--n", "6", "--m", "4", "--precision", "96", "--format", "json"}, out, err);
  const double secs = seconds_since(t0);
  if (code != 0) return {false, "exit " + std::to_string(code) + " " + err.str()};
  const auto j = nlohmann::json::parse(out.str());
  const Interval lo = Interval::from_strings(j["pi_lo"].get<std::string>(), j["pi_lo"].get<std::string>(), 96);
  const Interval hi = Interval::from_strings(j["pi_hi"].get<std::string>(), j["pi_hi"].get<std::string>(), 96);
  const bool above = compare_certain(Interval::rational(223, 71, 96), lo) == Verdict::CertainlyLess;
  const bool below = compare_certain(hi, Interval::rational(22, 7, 96)) == Verdict::CertainlyLess;
  std::ostringstream d;
  d << "p/2 >= " << j["pi_lo"].get<std::string>().substr(0, 12) << ", P/2 <= "
    << j["pi_hi"].get<std::string>().substr(0, 12) << ", " << secs << " s";
  return {above && below && secs < kBoundsSeconds, d.str()};
}

Outcome digits() {
  const auto t0 = Clock::now();
  std::ostringstream out, err;
  const int code = cli::execute({"digits", "--count", "50"}, out, err);
  const double secs = seconds_since(t0);
  std::string got = out.str();
  if (!got.empty() && got.back() == '\n') got.pop_back();
  const std::string want = oracle::machin_pi_digits(50);
  std::ostringstream d;
  d << got << " (" << secs << " s)";
  return {code == 0 && got == want && secs < kDigitsSeconds, d.str()};
}

Outcome monotone_bounds() {
  const SuiteReport mono = run_suite("monotone", grid_config());
  const SuiteReport bnd = run_suite("bounds", grid_config());
  // 3 seeds x 26 steps m -> m + 1 x 4 sequences; 3 seeds x 26 depths x 2 comparisons
  const bool sized = mono.rows.size() == 3 * 26 * 4 && bnd.rows.size() == 3 * 26 * 2;
  return {clean(mono) && clean(bnd) && sized, summary(mono) + "; " + summary(bnd)};
}

Outcome h_contraction() {
  const SuiteReport r = run_suite("h-ratio", grid_config());
  double lo = 1e9, hi = 0;
  for (int n : {3, 4, 6}) {
    for (int m = 10; m < 25; ++m) {
      const double a = scheme_measures({n, m}, kGridPrecision).h.lower();
      const double b = scheme_measures({n, m + 1}, kGridPrecision).h.lower();
      lo = std::min(lo, a / b);
      hi = std::max(hi, a / b);
    }
  }
  std::ostringstream d;
  d.precision(12);
  d << summary(r) << "; observed ratio for m >= 10 in [" << lo << ", " << hi << "] ("
    << (lo > kRatioLo && hi < kRatioHi ? "inside" : "outside") << " (3.9, 4.0), informational)";
  return {clean(r) && r.rows.size() == 3 * 26, d.str()};
}

Outcome identities() {
  const SuiteReport r = run_suite("identities", grid_config());
  bool widths = true;
  for (int n : {3, 4, 6}) widths = widths && pi_bounds({n, 40}, kGridPrecision).width() < kCrossSchemeWidth;
  const bool sized = count_check(r, "a_heron") == 78 && count_check(r, "A_half_P") == 78 &&
                     count_check(r, "pi_cross_scheme") == 3;
  return {clean(r) && widths && sized, summary(r) + (widths ? "; m=40 widths < 1e-20" : "; m=40 too wide")};
}

Outcome theorem_suites() {
  const auto t0 = Clock::now();
  SuiteConfig c;
  c.samples = 1000;
  c.seed = 1;
  const SuiteReport chord = run_suite("chord-compare", c);
  const SuiteReport tangent = run_suite("tangent-compare", c);
  const double secs = seconds_since(t0);
  const bool sized = chord.rows.size() == 1000 && tangent.rows.size() == 1000;
  std::ostringstream d;
  d << summary(chord) << "; " << summary(tangent) << "; " << secs << " s";
  return {clean(chord) && clean(tangent) && sized && secs < kTheoremSeconds, d.str()};
}

Outcome profiles() {
  SuiteConfig c;
  c.samples = 1000;
  c.seed = 1;
  const SuiteReport proj = run_suite("projections", c);
  const SuiteReport tang = run_suite("tangent-profile", c);
  std::set<int> ns;
  for (const auto& row : proj.rows) ns.insert(row.n);
  const bool covered = *ns.begin() == 2 && *ns.rbegin() == 16 && ns.size() == 15;
  return {clean(proj) && clean(tang) && covered && count_check(proj, "gap_symmetric") > 0,
          summary(proj) + "; " + summary(tang) + "; n in [2, 16]"};
}

Outcome rational() {
  const SweepReport s = rational_sweep(24, kDefaultPrecision, 0);
  std::size_t good = 0;
  for (const auto& c : s.inscribed) good += c.verdict == Verdict::CertainlyLess;
  for (const auto& c : s.circumscribed) good += c.verdict == Verdict::CertainlyGreater;
  const SuiteReport r = run_suite("rational");
  std::ostringstream d;
  d << s.rows.size() << " lengths, " << good << "/" << 2 * (s.rows.size() - 1) << " adjacent pairs ordered; "
    << summary(r);
  return {s.ordered && good == 2 * (s.rows.size() - 1) && clean(r), d.str()};
}

Outcome circuits() {
  SuiteConfig c;
  c.samples = 100;
  c.mesh_levels = 8;
  const SuiteReport per = run_suite("circuit-sandwich", c);
  const SuiteReport area = run_suite("area-sandwich", c);
  const bool sized = count_check(per, "perimeter_in_below_2pi") == 800 &&
                     count_check(area, "area_in_below_pi") == 800 && count_check(per, "worst_gap_decreasing") == 7;
  return {clean(per) && clean(area) && sized, summary(per) + "; " + summary(area)};
}

Outcome sandwich() {
  const SuiteReport r = run_suite("trig-sandwich");
  const bool sized = count_check(r, "one_below_mid") == 16 && count_check(r, "final_gap_below_1e-9") == 1;
  return {clean(r) && sized, summary(r)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"archimedes 96-gon bracket", archimedes},
      {"50 digits match the Machin oracle", digits},
      {"monotone sequences and p < P, a < A", monotone_bounds},
      {"h contraction", h_contraction},
      {"area identities and cross-scheme limits", identities},
      {"chord and tangent comparison suites", theorem_suites},
      {"projection and tangent profiles", profiles},
      {"rational length sweep", rational},
      {"circuit perimeter and area sandwich", circuits},
      {"sin x / x sandwich", sandwich},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
