#include "polypi/rational_paths.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <numeric>
#include <string>

#include "polypi/regular_polygons.hpp"

namespace polypi {

namespace {

constexpr int kPrecisionCap = 4096;

std::string pair_name(long k, long N) { return "(" + std::to_string(k) + ", " + std::to_string(N) + ")"; }

void validate(long k, long N) {
  if (N < 3 || k < 1) {
    throw Error(ErrorCode::PreconditionViolation, "need N >= 3 and k >= 1, got " + pair_name(k, N));
  }
  if (std::gcd(k, N) != 1) throw Error(ErrorCode::NonCoprime, pair_name(k, N) + " share a factor");
  if (2 * k >= N) {
    throw Error(ErrorCode::ChordTooLong, pair_name(k, N) + " spans at least half the circle");
  }
}

// Walks N steps; nullopt when the winding count is undecided.
std::optional<std::vector<CirclePoint>> walk(const RationalLength& r) {
  const int prec = r.chord.precision();
  const auto [cos_t, sin_t] = chord_rotation(r.chord);
  std::vector<CirclePoint> path;
  path.reserve(static_cast<std::size_t>(r.N));
  path.push_back(CirclePoint::origin_ray(prec));
  for (long i = 1; i < r.N; ++i) path.push_back(rotate(path.back(), cos_t, sin_t));
  const CirclePoint back = rotate(path.back(), cos_t, sin_t);
  if (!overlaps(back, path.front())) {
    throw Error(ErrorCode::ClosureFailure, pair_name(r.k, r.N) + " path does not return to its start");
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    const CirclePoint& next = i + 1 < path.size() ? path[i + 1] : back;
    if (!distance(path[i], next).overlaps(r.chord)) {
      throw Error(ErrorCode::ClosureFailure, pair_name(r.k, r.N) + " step length drifted");
    }
  }
  const auto w = winding_count(path);
  if (!w) return std::nullopt;
  if (*w != r.k) {
    throw Error(ErrorCode::ClosureFailure,
                pair_name(r.k, r.N) + " path winds " + std::to_string(*w) + " times");
  }
  return path;
}

RationalLength build(long k, long N, int precision) {
  RationalLength r;
  r.k = k;
  r.N = N;
  const CirclePoint o = CirclePoint::origin_ray(precision);
  r.edge = solve_winding_chord(o, o, true, static_cast<int>(N), 1, precision);
  const auto [cos_t, sin_t] = chord_rotation(r.edge);
  CirclePoint p = o;
  for (long i = 0; i < k; ++i) p = rotate(p, cos_t, sin_t);
  r.chord = distance(o, p);
  return r;
}

}  // namespace

RationalLength realize_rational(long k, long N, int precision) {
  validate(k, N);
  for (int prec = precision;; prec = std::min(2 * prec, kPrecisionCap)) {
    RationalLength r = build(k, N, prec);
    if (walk(r)) return r;
    if (prec >= kPrecisionCap) {
      throw Error(ErrorCode::InconclusivePrecision, pair_name(k, N) + " winding undecided at the cap");
    }
  }
}

std::vector<CirclePoint> gamma_path(const RationalLength& r) {
  validate(r.k, r.N);
  auto path = walk(r);
  if (!path) {
    throw Error(ErrorCode::InconclusivePrecision, pair_name(r.k, r.N) + " winding undecided");
  }
  return std::move(*path);
}

Interval normalized_length(const RationalLength& r, LengthMode mode) {
  const Interval len = mode == LengthMode::Inscribed ? r.chord : circumscribed_edge(r.chord);
  return len * r.N / r.k;
}

CompareResult normalized_compare(const RationalLength& a, const RationalLength& b, LengthMode mode) {
  const Verdict order = compare_certain(a.chord, b.chord);
  if (order == Verdict::Overlap) {
    throw Error(ErrorCode::HypothesisUnordered,
                pair_name(a.k, a.N) + " and " + pair_name(b.k, b.N) + " chords are not separated");
  }
  const RationalLength& longer = order == Verdict::CertainlyGreater ? a : b;
  const RationalLength& shorter = order == Verdict::CertainlyGreater ? b : a;
  CompareResult r;
  r.lhs = normalized_length(longer, mode);
  r.rhs = normalized_length(shorter, mode);
  r.verdict = compare_certain(r.lhs, r.rhs);
  r.precision_used = std::max(a.chord.precision(), b.chord.precision());
  return r;
}

SweepReport rational_sweep(long max_n, int precision, int jobs) {
  std::vector<std::pair<long, long>> pairs;
  for (long N = 3; N <= max_n; ++N) {
    for (long k = 1; 2 * k < N; ++k) {
      if (std::gcd(k, N) == 1) pairs.emplace_back(k, N);
    }
  }
  const long count = static_cast<long>(pairs.size());
  std::vector<SweepRow> rows(pairs.size());
  std::vector<std::exception_ptr> errors(pairs.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
  for (long i = 0; i < count; ++i) {
    try {
      SweepRow row;
      row.length = realize_rational(pairs[i].first, pairs[i].second, precision);
      row.normalized_in = normalized_length(row.length, LengthMode::Inscribed);
      row.normalized_circ = normalized_length(row.length, LengthMode::Circumscribed);
      row.winding_checked = true;
      rows[i] = std::move(row);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::sort(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) {
    return mpfr_cmp(x.length.chord.lo(), y.length.chord.lo()) > 0;
  });
  SweepReport report;
  report.ordered = true;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    report.inscribed.push_back(normalized_compare(rows[i].length, rows[i + 1].length, LengthMode::Inscribed));
    report.circumscribed.push_back(
        normalized_compare(rows[i].length, rows[i + 1].length, LengthMode::Circumscribed));
    report.ordered = report.ordered && report.inscribed.back().verdict == Verdict::CertainlyLess &&
                     report.circumscribed.back().verdict == Verdict::CertainlyGreater;
  }
  report.rows = std::move(rows);
  return report;
}

}  // namespace polypi
