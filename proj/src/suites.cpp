#include "polypi/suites.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "polypi/circuits.hpp"
#include "polypi/random.hpp"
#include "polypi/rational_paths.hpp"
#include "polypi/regular_polygons.hpp"
#include "polypi/trig_geometry.hpp"

namespace polypi {

namespace {

constexpr std::array<int, 3> kSeeds{3, 4, 6};
constexpr long kChordUnitsLo = 104858;   // > 0.1 * 2^20
constexpr long kChordUnitsHi = 2086666;  // < 1.99 * 2^20
constexpr int kCompareMaxN = 32;
constexpr int kProfileMaxN = 16;
constexpr long kRationalMaxN = 24;
constexpr int kTrigLevels = 16;
constexpr int kCrossSchemeDepth = 40;

using RowList = std::vector<SuiteRow>;

RowStatus judge(const SuiteRow& r) {
  if (r.verdict == r.expected) return RowStatus::Pass;
  if (r.expected == Verdict::Overlap || r.verdict != Verdict::Overlap) return RowStatus::Violated;
  return RowStatus::Inconclusive;
}

SuiteRow strict_row(std::string check, Interval lhs, Interval rhs) {
  SuiteRow r;
  r.check = std::move(check);
  r.verdict = compare_certain(lhs, rhs);
  r.precision_used = std::max(lhs.precision(), rhs.precision());
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.status = judge(r);
  return r;
}

SuiteRow overlap_row(std::string check, Interval lhs, Interval rhs) {
  SuiteRow r = strict_row(std::move(check), std::move(lhs), std::move(rhs));
  r.expected = Verdict::Overlap;
  r.status = judge(r);
  return r;
}

// Bitwise equality, reported as an identity row.
SuiteRow identical_row(std::string check, Interval lhs, Interval rhs) {
  SuiteRow r = overlap_row(std::move(check), std::move(lhs), std::move(rhs));
  r.detail = "bitwise";
  r.status = r.lhs.identical(r.rhs) ? RowStatus::Pass : RowStatus::Violated;
  return r;
}

SuiteRow error_row(const std::string& what) {
  SuiteRow r;
  r.check = "error";
  r.status = RowStatus::Error;
  r.detail = what;
  return r;
}

void for_each_index(std::size_t count, const SuiteConfig& cfg, const std::function<void(std::size_t)>& fn) {
  if (cfg.execution == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const int threads = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < n; ++i) fn(static_cast<std::size_t>(i));
}

RowList collect(std::size_t count, const SuiteConfig& cfg, const std::function<RowList(std::size_t)>& fn) {
  std::vector<RowList> parts(count);
  for_each_index(count, cfg, [&](std::size_t i) {
    try {
      parts[i] = fn(i);
    } catch (const std::exception& e) {
      parts[i] = {error_row(e.what())};
    }
  });
  RowList out;
  for (auto& p : parts) {
    for (auto& r : p) out.push_back(std::move(r));
  }
  return out;
}

RowList tag(RowList rows, std::uint64_t seed, int m, int n, const std::optional<Interval>& chord = {}) {
  for (auto& r : rows) {
    r.sample_seed = seed;
    r.m = m;
    r.n = n;
    r.arc_chord = chord;
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Regular polygons

std::size_t grid_size(const SuiteConfig& cfg) { return kSeeds.size() * static_cast<std::size_t>(cfg.max_depth + 1); }

using GridCheck = std::function<RowList(const RegularScheme&, const SchemeMeasures&, const SchemeMeasures&)>;

RowList grid_suite(const SuiteConfig& cfg, const GridCheck& fn) {
  return collect(grid_size(cfg), cfg, [&](std::size_t i) {
    const int n = kSeeds[i / static_cast<std::size_t>(cfg.max_depth + 1)];
    const int m = static_cast<int>(i % static_cast<std::size_t>(cfg.max_depth + 1));
    const SchemeMeasures a = scheme_measures({n, m}, cfg.precision);
    const SchemeMeasures b = scheme_measures({n, m + 1}, cfg.precision);
    return tag(fn({n, m}, a, b), i, m, n);
  });
}

RowList monotone_suite(const SuiteConfig& cfg) {
  return grid_suite(cfg, [](const RegularScheme&, const SchemeMeasures& a, const SchemeMeasures& b) {
    return RowList{strict_row("p_increasing", a.p, b.p), strict_row("P_decreasing", b.P, a.P),
                   strict_row("a_increasing", a.a, b.a), strict_row("A_decreasing", b.A, a.A)};
  });
}

RowList bounds_suite(const SuiteConfig& cfg) {
  return grid_suite(cfg, [](const RegularScheme&, const SchemeMeasures& a, const SchemeMeasures&) {
    return RowList{strict_row("p_below_P", a.p, a.P), strict_row("a_below_A", a.a, a.A)};
  });
}

bool tight(const Interval& x, int precision) {
  return x.width() < std::ldexp(1.0, 8 - precision) * std::max(1.0, x.magnitude());
}

RowList identities_suite(const SuiteConfig& cfg) {
  const int prec = cfg.precision;
  RowList rows = grid_suite(cfg, [prec](const RegularScheme& sc, const SchemeMeasures& s, const SchemeMeasures&) {
    // Heron on the centre triangle with sides 1, 1, ell; the differences
    // s - 1 = ell/2 and s - ell = 1 - ell/2 are taken exactly.
    const Interval half = scale2(s.ell, -1);
    const Interval tri = sqrt((1L + half) * square(half) * (1L - half));
    const Interval count = scale2(Interval(sc.n, prec), sc.m);
    RowList out{overlap_row("a_heron", s.a, tri * count), overlap_row("A_half_P", s.A, scale2(s.P, -1))};
    for (auto& r : out) {
      if (r.status == RowStatus::Pass && !(tight(r.lhs, prec) && tight(r.rhs, prec))) {
        r.status = RowStatus::Violated;
        r.detail = "interval wider than 2^(8-precision) * magnitude";
      }
    }
    return out;
  });
  const Interval limit = Interval::decimal("1e-20", prec);
  std::vector<Interval> bounds;
  for (int n : kSeeds) bounds.push_back(pi_bounds({n, kCrossSchemeDepth}, prec));
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    SuiteRow w = strict_row("pi_width_below_1e-20",
                            (bounds[i].upper_point() - bounds[i].lower_point()).upper_point(), limit);
    w.m = kCrossSchemeDepth;
    w.n = kSeeds[i];
    rows.push_back(std::move(w));
    for (std::size_t j = i + 1; j < bounds.size(); ++j) {
      SuiteRow r = overlap_row("pi_cross_scheme", bounds[i], bounds[j]);
      r.m = kCrossSchemeDepth;
      r.n = kSeeds[i];
      r.detail = "against n=" + std::to_string(kSeeds[j]);
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

RowList h_ratio_suite(const SuiteConfig& cfg) {
  return grid_suite(cfg, [](const RegularScheme&, const SchemeMeasures& a, const SchemeMeasures& b) {
    SuiteRow r = strict_row("h_contraction", b.h * 3L, a.h);
    std::ostringstream ratio;
    ratio.precision(8);
    ratio << "ratio=" << (a.h / b.h).midpoint().lower();
    r.detail = ratio.str();
    return RowList{r};
  });
}

// ---------------------------------------------------------------------------
// Chord laws

std::size_t samples_for(std::string_view suite, const SuiteConfig& cfg) {
  return cfg.samples > 0 ? cfg.samples : default_samples(suite);
}

RowList compare_suite(std::string_view suite, const SuiteConfig& cfg, bool tangent) {
  return collect(samples_for(suite, cfg), cfg, [&](std::size_t i) {
    const std::uint64_t seed = sample_seed(cfg.seed, i);
    const ArcSample s = draw_arc(seed, kCompareMaxN);
    const CompareResult c = tangent ? tangent_compare(arc_recipe(s), s.m, s.n, cfg.ladder)
                                    : chord_compare(arc_recipe(s), s.m, s.n, cfg.ladder);
    SuiteRow r;
    r.check = tangent ? "nL_m_below_mL_n" : "ml_n_below_nl_m";
    r.lhs = c.lhs;
    r.rhs = c.rhs;
    r.verdict = c.verdict;
    r.precision_used = c.precision_used;
    r.status = judge(r);
    return tag({r}, seed, s.m, s.n, Interval::dyadic(s.chord_units, -20, 64));
  });
}

// Re-runs fixed-precision checks up the ladder until nothing is inconclusive.
RowList laddered_rows(const Ladder& ladder, const std::function<RowList(int)>& fn) {
  RowList rows;
  for (int prec = ladder.start;; prec = std::min(2 * prec, ladder.cap)) {
    try {
      rows = fn(prec);
      const bool settled = std::none_of(rows.begin(), rows.end(), [](const SuiteRow& r) {
        return r.status == RowStatus::Inconclusive;
      });
      if (settled) return rows;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BisectionStall) throw;
      rows = {error_row(e.what())};
      rows.front().status = RowStatus::Inconclusive;
    }
    if (prec >= ladder.cap) return rows;
  }
}

RowList projection_rows(const PartitionProfile& pr, const ArcSpec& arc) {
  const int n = pr.n;
  const auto& gap = pr.projections;  // gap[i - 1] = |q_i q_{i+1}|
  RowList rows;
  for (int i = 1; i < (n + 1) / 2; ++i) {
    rows.push_back(strict_row("gap_increasing_" + std::to_string(i), gap[i - 1], gap[i]));
  }
  for (int i = 1; i <= n / 2; ++i) {
    rows.push_back(identical_row("gap_symmetric_" + std::to_string(i), gap[i - 1], gap[n - i]));
  }
  Interval total = gap[0];
  for (int i = 1; i < n; ++i) total = total + gap[i];
  rows.push_back(overlap_row("gaps_sum_to_chord", total, arc.chord_total()));
  if (n > 2) {
    Interval prefix = gap[0];
    for (int s = 1; s <= n / 2; ++s) {
      if (s > 1) prefix = prefix + gap[s - 1];
      const Interval share = pr.cumulative_chords[n - 1] * static_cast<long>(s) / static_cast<long>(n);
      // Equality at the midpoint of an even partition.
      rows.push_back(2 * s == n ? overlap_row("prefix_at_half_chord", prefix, share)
                                : strict_row("prefix_below_share_" + std::to_string(s), prefix, share));
    }
  }
  return rows;
}

RowList profile_suite(std::string_view suite, const SuiteConfig& cfg, bool tangent) {
  return collect(samples_for(suite, cfg), cfg, [&](std::size_t i) {
    const std::uint64_t seed = sample_seed(cfg.seed, i);
    const ArcSample s = draw_arc(seed, kProfileMaxN);
    const ArcRecipe recipe = arc_recipe(s);
    RowList rows = laddered_rows(cfg.ladder, [&](int prec) {
      const ArcSpec arc = recipe(prec);
      const PartitionProfile pr = partition_profile(arc, s.n, prec);
      if (!tangent) return projection_rows(pr, arc);
      RowList out;
      for (int k = 1; k < s.n; ++k) {
        out.push_back(strict_row("segment_increasing_" + std::to_string(k), pr.tangent_segments[k - 1],
                                 pr.tangent_segments[k]));
      }
      return out;
    });
    return tag(std::move(rows), seed, 0, s.n, Interval::dyadic(s.chord_units, -20, 64));
  });
}

// ---------------------------------------------------------------------------
// Rational lengths

RowList rational_suite(const SuiteConfig& cfg) {
  const int jobs = cfg.execution == Execution::Serial ? 1 : (cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads());
  const SweepReport sweep = rational_sweep(kRationalMaxN, cfg.precision, jobs);
  const Interval tp = two_pi(cfg.precision);
  RowList rows;
  for (std::size_t i = 0; i < sweep.rows.size(); ++i) {
    const RationalLength& len = sweep.rows[i].length;
    auto at = [&](SuiteRow r) {
      r.sample_seed = i;
      r.m = static_cast<int>(len.k);
      r.n = static_cast<int>(len.N);
      r.arc_chord = len.chord;
      return r;
    };
    if (i + 1 < sweep.rows.size()) {
      const std::string next = "(" + std::to_string(sweep.rows[i + 1].length.k) + "," +
                               std::to_string(sweep.rows[i + 1].length.N) + ")";
      SuiteRow in = strict_row("inscribed_order", sweep.inscribed[i].lhs, sweep.inscribed[i].rhs);
      in.detail = "against " + next;
      rows.push_back(at(in));
      SuiteRow circ = strict_row("circumscribed_order", sweep.circumscribed[i].rhs, sweep.circumscribed[i].lhs);
      circ.detail = "against " + next;
      rows.push_back(at(circ));
    }
    rows.push_back(at(strict_row("inscribed_below_2pi", sweep.rows[i].normalized_in, tp)));
    rows.push_back(at(strict_row("circumscribed_above_2pi", tp, sweep.rows[i].normalized_circ)));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Circuits

struct CircuitSample {
  std::uint64_t seed = 0;
  int level = 0;
  int points = 0;
  std::optional<CircuitMeasures> measures;
  std::string error;
};

std::vector<CircuitSample> circuit_batch(std::string_view suite, const SuiteConfig& cfg) {
  const std::size_t per_level = samples_for(suite, cfg);
  const int prec = cfg.precision;
  std::set<int> depths;
  for (int level = 1; level <= cfg.mesh_levels; ++level) {
    const Interval cap = Interval::dyadic(1, -level, prec);
    for (int k = 3; k <= cfg.max_points; ++k) depths.insert(vertex_depth_for(k, cap, prec));
  }
  std::vector<VertexTable> tables;
  for (int d : depths) tables.emplace_back(d, prec);

  std::vector<CircuitSample> out(per_level * static_cast<std::size_t>(cfg.mesh_levels));
  for_each_index(out.size(), cfg, [&](std::size_t idx) {
    CircuitSample& s = out[idx];
    s.level = static_cast<int>(idx / per_level) + 1;
    s.seed = sample_seed(cfg.seed, idx);
    try {
      Rng rng(s.seed);
      const int k = static_cast<int>(rng.uniform(3, cfg.max_points));
      const Circuit c = random_circuit(k, Interval::dyadic(1, -s.level, prec), s.seed, tables);
      s.points = static_cast<int>(c.size());
      s.measures = circuit_measures(c);
    } catch (const std::exception& e) {
      s.error = e.what();
    }
  });
  return out;
}

RowList circuit_suite(const SuiteConfig& cfg) {
  const auto batch = circuit_batch("circuit-sandwich", cfg);
  const Interval tp = two_pi(cfg.precision);
  const std::size_t per_level = batch.size() / static_cast<std::size_t>(cfg.mesh_levels);
  RowList rows;
  std::vector<std::optional<Interval>> worst(static_cast<std::size_t>(cfg.mesh_levels) + 1);
  for (const auto& s : batch) {
    if (!s.measures) {
      rows.push_back(tag({error_row(s.error)}, s.seed, s.level, s.points).front());
      continue;
    }
    const CircuitMeasures& mm = *s.measures;
    RowList r{strict_row("perimeter_in_below_2pi", mm.perimeter_in, tp),
              strict_row("2pi_below_perimeter_circ", tp, mm.perimeter_circ)};
    for (auto& row : tag(std::move(r), s.seed, s.level, s.points)) rows.push_back(std::move(row));
    const Interval gap = (tp - mm.perimeter_in).upper_point();
    auto& w = worst[static_cast<std::size_t>(s.level)];
    w = w ? max(*w, gap) : gap;
  }
  for (int level = 2; level <= cfg.mesh_levels; ++level) {
    const auto& now = worst[static_cast<std::size_t>(level)];
    const auto& before = worst[static_cast<std::size_t>(level) - 1];
    if (now && before) {
      rows.push_back(tag({strict_row("worst_gap_decreasing", *now, *before)}, 0, level, 0).front());
    }
  }
  // Every edge of the first circuit is longer than every edge of the second.
  for (int level = 1; level + 2 <= cfg.mesh_levels; ++level) {
    for (std::size_t i = 0; i < per_level; ++i) {
      const auto& a = batch[(static_cast<std::size_t>(level) - 1) * per_level + i];
      const auto& b = batch[(static_cast<std::size_t>(level) + 1) * per_level + i];
      if (!a.measures || !b.measures) continue;
      SuiteRow hyp = strict_row("finer_mesh_hypothesis", b.measures->mesh, a.measures->min_edge);
      RowList r{hyp};
      if (hyp.status == RowStatus::Pass) {
        r.push_back(strict_row("finer_perimeter_in_longer", a.measures->perimeter_in, b.measures->perimeter_in));
        r.push_back(strict_row("finer_perimeter_circ_shorter", b.measures->perimeter_circ,
                               a.measures->perimeter_circ));
      }
      for (auto& row : tag(std::move(r), a.seed, level, a.points)) rows.push_back(std::move(row));
    }
  }
  return rows;
}

RowList area_suite(const SuiteConfig& cfg) {
  const auto batch = circuit_batch("area-sandwich", cfg);
  const Interval pi = scale2(two_pi(cfg.precision), -1);
  RowList rows;
  for (const auto& s : batch) {
    if (!s.measures) {
      rows.push_back(tag({error_row(s.error)}, s.seed, s.level, s.points).front());
      continue;
    }
    const CircuitMeasures& mm = *s.measures;
    RowList r{strict_row("area_in_below_pi", mm.area_in, pi), strict_row("pi_below_area_circ", pi, mm.area_circ),
              identical_row("area_circ_half_perimeter", mm.area_circ, scale2(mm.perimeter_circ, -1))};
    for (auto& row : tag(std::move(r), s.seed, s.level, s.points)) rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Trigonometry

RowList trig_suite(const SuiteConfig& cfg) {
  const int prec = cfg.precision;
  std::vector<std::optional<SandwichReport>> reports(kTrigLevels);
  std::vector<std::string> errors(kTrigLevels);
  for_each_index(kTrigLevels, cfg, [&](std::size_t i) {
    try {
      reports[i] = sandwich_report(Interval::dyadic(1, -static_cast<long>(i + 1), prec), prec);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });
  RowList rows;
  const Interval one(1, prec);
  for (int k = 1; k <= kTrigLevels; ++k) {
    const auto& rep = reports[static_cast<std::size_t>(k) - 1];
    if (!rep) {
      rows.push_back(tag({error_row(errors[static_cast<std::size_t>(k) - 1])}, 0, k, 0).front());
      continue;
    }
    RowList r{strict_row("one_below_mid", one, rep->mid), strict_row("mid_below_upper", rep->mid, rep->upper),
              strict_row("mid_minus_one_below_theta_sq", rep->mid - 1L, square(rep->theta))};
    if (k > 1 && reports[static_cast<std::size_t>(k) - 2]) {
      r.push_back(strict_row("gap_decreasing", rep->mid - 1L, reports[static_cast<std::size_t>(k) - 2]->mid - 1L));
    }
    if (k == kTrigLevels) {
      r.push_back(strict_row("final_gap_below_1e-9", rep->mid - 1L, Interval::decimal("1e-9", prec)));
    }
    for (auto& row : tag(std::move(r), 0, k, 0)) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "pass";
    case RowStatus::Violated: return "violated";
    case RowStatus::Inconclusive: return "inconclusive";
    case RowStatus::Error: return "error";
  }
  return "?";
}

std::size_t SuiteReport::count(RowStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [s](const SuiteRow& r) { return r.status == s; }));
}

RowStatus SuiteReport::overall() const {
  if (count(RowStatus::Error) > 0) return RowStatus::Error;
  if (count(RowStatus::Violated) > 0) return RowStatus::Violated;
  if (count(RowStatus::Inconclusive) > 0) return RowStatus::Inconclusive;
  return RowStatus::Pass;
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{
      "monotone",   "bounds",       "identities",      "h-ratio",          "chord-compare",
      "tangent-compare", "projections", "tangent-profile", "rational", "circuit-sandwich",
      "area-sandwich", "trig-sandwich"};
  return names;
}

bool is_suite(std::string_view name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::size_t default_samples(std::string_view suite) {
  if (suite == "circuit-sandwich" || suite == "area-sandwich") return 100;
  if (suite == "chord-compare" || suite == "tangent-compare" || suite == "projections" ||
      suite == "tangent-profile") {
    return 1000;
  }
  return 0;
}

ArcSample draw_arc(std::uint64_t seed, int max_n) {
  Rng rng(seed);
  ArcSample s;
  s.chord_units = rng.uniform(kChordUnitsLo, kChordUnitsHi);
  s.n = static_cast<int>(rng.uniform(2, max_n));
  s.m = static_cast<int>(rng.uniform(1, s.n - 1));
  return s;
}

ArcRecipe arc_recipe(const ArcSample& s) {
  const long units = s.chord_units;
  return [units](int precision) { return ArcSpec(Interval::dyadic(units, -20, precision)); };
}

SuiteReport run_suite(std::string_view suite, const SuiteConfig& cfg) {
  SuiteReport report;
  report.suite = std::string(suite);
  if (suite == "monotone") report.rows = monotone_suite(cfg);
  else if (suite == "bounds") report.rows = bounds_suite(cfg);
  else if (suite == "identities") report.rows = identities_suite(cfg);
  else if (suite == "h-ratio") report.rows = h_ratio_suite(cfg);
  else if (suite == "chord-compare") report.rows = compare_suite(suite, cfg, false);
  else if (suite == "tangent-compare") report.rows = compare_suite(suite, cfg, true);
  else if (suite == "projections") report.rows = profile_suite(suite, cfg, false);
  else if (suite == "tangent-profile") report.rows = profile_suite(suite, cfg, true);
  else if (suite == "rational") report.rows = rational_suite(cfg);
  else if (suite == "circuit-sandwich") report.rows = circuit_suite(cfg);
  else if (suite == "area-sandwich") report.rows = area_suite(cfg);
  else if (suite == "trig-sandwich") report.rows = trig_suite(cfg);
  else throw Error(ErrorCode::PreconditionViolation, "unknown suite '" + std::string(suite) + "'");
  return report;
}

}  // namespace polypi
