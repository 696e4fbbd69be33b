#include "polypi/chord_laws.hpp"

#include <string>

#include "polypi/oracle.hpp"

namespace polypi {

namespace {

CirclePoint at_precision(const CirclePoint& p, int precision) {
  if (p.precision() == precision) return p;
  return CirclePoint(p.x().with_precision(precision), p.y().with_precision(precision));
}

void require_chord(const Interval& c) {
  if (!c.certainly_positive() ||
      compare_certain(c, Interval(2, c.precision())) != Verdict::CertainlyLess) {
    throw Error(ErrorCode::InvalidChord, "arc chord must lie in (0, 2): " + c.to_string(12));
  }
}

enum class Probe { TooSmall, TooBig, Undecided };

// Walks `steps` chord steps and counts passes of the target ray. Reaching
// `windings` passes means the walk overshot.
Probe probe(const CirclePoint& start, const CirclePoint& target, bool closed, int steps,
            int windings, const Interval& c) {
  const auto [cos_t, sin_t] = chord_rotation(c);
  RaySide prev = closed ? RaySide::Upper : ray_side(target, start);
  if (prev == RaySide::Ambiguous) return Probe::Undecided;
  int passes = 0;
  CirclePoint p = start;
  for (int i = 0; i < steps; ++i) {
    p = rotate(p, cos_t, sin_t);
    const RaySide side = ray_side(target, p);
    if (side == RaySide::Ambiguous) return Probe::Undecided;
    if (prev == RaySide::Lower && side == RaySide::Upper && ++passes >= windings) {
      return Probe::TooBig;
    }
    prev = side;
  }
  return Probe::TooSmall;
}

Interval midpoint_of(const Interval& a, const Interval& b) { return scale2(a + b, -1); }

void require_order(int m, int n) {
  if (m < 1 || m >= n) {
    throw Error(ErrorCode::PreconditionViolation,
                "need 1 <= m < n, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
}

template <typename Fn>
CompareResult laddered(const ArcRecipe& arc, const Ladder& ladder, Fn&& fn) {
  CompareResult last;
  for (int prec = ladder.start;; prec *= 2) {
    if (prec > ladder.cap) prec = ladder.cap;
    try {
      last = fn(arc(prec), prec);
      if (last.verdict != Verdict::Overlap) return last;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BisectionStall) throw;
      last = CompareResult{Verdict::Overlap, Interval(0, prec), Interval(0, prec), prec};
    }
    if (prec >= ladder.cap) return last;
  }
}

}  // namespace

ArcSpec::ArcSpec(CirclePoint start, Interval chord_total)
    : start_(std::move(start)), chord_((require_chord(chord_total), std::move(chord_total))),
      end_(step_by_chord(start_, chord_)) {}

ArcSpec::ArcSpec(Interval chord_total)
    : ArcSpec(CirclePoint::origin_ray(chord_total.precision()), std::move(chord_total)) {}

ArcRecipe rational_arc(long num, long den) {
  return [num, den](int precision) { return ArcSpec(Interval::rational(num, den, precision)); };
}

ArcRecipe sqrt_arc(long radicand) {
  return [radicand](int precision) { return ArcSpec(sqrt(Interval(radicand, precision))); };
}

Interval solve_winding_chord(const CirclePoint& start0, const CirclePoint& target0, bool closed,
                             int steps, int windings, int precision) {
  if (steps < 1 || windings < 1 || 2 * windings >= steps + (closed ? 0 : 1)) {
    throw Error(ErrorCode::PreconditionViolation,
                "need steps > 2 * windings (each step under half a turn)");
  }
  const CirclePoint start = at_precision(start0, precision);
  const CirclePoint target = at_precision(target0, precision);
  Interval lo(0, precision);
  Interval hi(2, precision);
  const Interval tol = scale2(Interval(1, precision), 8 - precision);
  while (compare_certain(hi - lo, tol) != Verdict::CertainlyLess) {
    const Interval mid = midpoint_of(lo, hi);
    bool moved = false;
    for (const Interval& c : {mid, midpoint_of(lo, mid), midpoint_of(mid, hi)}) {
      const Probe r = probe(start, target, closed, steps, windings, c);
      if (r == Probe::TooSmall) {
        lo = c;
      } else if (r == Probe::TooBig) {
        hi = c;
      } else {
        continue;
      }
      moved = true;
      break;
    }
    if (!moved) {
      throw Error(ErrorCode::BisectionStall,
                  "chord bracket stuck at width " + (hi - lo).hi_string(6) + " with " +
                      std::to_string(precision) + " bits");
    }
  }
  return Interval::hull(lo, hi);
}

Interval solve_regular_chord(const ArcSpec& arc, int n, int precision) {
  if (n < 1) throw Error(ErrorCode::PreconditionViolation, "partition count must be >= 1");
  if (n == 1) return arc.chord_total().with_precision(precision);
  return solve_winding_chord(arc.start(), arc.end(), false, n, 1, precision);
}

PartitionProfile partition_profile(const ArcSpec& arc, int n, int precision) {
  if (n < 2) throw Error(ErrorCode::PreconditionViolation, "partition profiles need n >= 2");
  PartitionProfile pr;
  pr.n = n;
  pr.precision = precision;
  pr.step_chord = solve_regular_chord(arc, n, precision);
  const Interval& c = pr.step_chord;
  const auto [cos_t, sin_t] = chord_rotation(c);

  // Upper half, from the centre outwards.
  std::vector<CirclePoint> upper;
  if (n % 2 == 0) {
    upper.push_back(CirclePoint::origin_ray(precision));
  } else {
    Interval y = scale2(c, -1);
    Interval x = sqrt(1L - square(y));
    upper.emplace_back(std::move(x), std::move(y));
  }
  const int half = n / 2;
  for (int j = 0; j < half; ++j) upper.push_back(rotate(upper.back(), cos_t, sin_t));

  pr.points.reserve(n + 1);
  for (int j = static_cast<int>(upper.size()) - 1; j >= (n % 2 == 0 ? 1 : 0); --j) {
    pr.points.push_back(upper[j].reflected());
  }
  for (const auto& u : upper) pr.points.push_back(u);

  const CirclePoint& p1 = pr.points.front();
  pr.tangent_meets.push_back(p1.as_plane());
  for (int k = 1; k <= n; ++k) {
    const CirclePoint& pk = pr.points[k];
    pr.cumulative_chords.push_back(distance(p1, pk));
    pr.tangent_meets.push_back(tangent_intersection(p1, pk));
    const PlanePoint& t = pr.tangent_meets.back();
    pr.tangent_segments.push_back(distance(pr.tangent_meets[k - 1], t));
    pr.tangent_paths.push_back(distance(p1.as_plane(), t) + distance(t, pk.as_plane()));
    pr.projections.push_back(pk.y() - pr.points[k - 1].y());
  }
  pr.tangent_total = pr.tangent_paths.back();
  return pr;
}

CompareResult chord_compare(const ArcSpec& arc, int m, int n, int precision) {
  require_order(m, n);
  const PartitionProfile pr = partition_profile(arc, n, precision);
  CompareResult r;
  r.lhs = pr.cumulative_chords[m - 1] * static_cast<long>(n);
  r.rhs = pr.cumulative_chords[n - 1] * static_cast<long>(m);
  r.verdict = compare_certain(r.rhs, r.lhs);
  r.precision_used = precision;
  return r;
}

CompareResult tangent_compare(const ArcSpec& arc, int m, int n, int precision) {
  require_order(m, n);
  const PartitionProfile pr = partition_profile(arc, n, precision);
  CompareResult r;
  r.lhs = pr.tangent_paths[m - 1] * static_cast<long>(n);
  r.rhs = pr.tangent_paths[n - 1] * static_cast<long>(m);
  r.verdict = compare_certain(r.lhs, r.rhs);
  r.precision_used = precision;
  return r;
}

CompareResult chord_compare(const ArcRecipe& arc, int m, int n, const Ladder& ladder) {
  require_order(m, n);
  return laddered(arc, ladder, [&](const ArcSpec& a, int p) { return chord_compare(a, m, n, p); });
}

CompareResult tangent_compare(const ArcRecipe& arc, int m, int n, const Ladder& ladder) {
  require_order(m, n);
  return laddered(arc, ladder, [&](const ArcSpec& a, int p) { return tangent_compare(a, m, n, p); });
}

AngleProfile angle_profile(int n, long num, long den, int precision) {
  if (n < 2) throw Error(ErrorCode::PreconditionViolation, "angle profile needs n >= 2");
  if (num <= 0 || den <= 0) {
    throw Error(ErrorCode::PreconditionViolation, "step angle must be a positive fraction");
  }
  if (2 * n * num >= den) {
    throw Error(ErrorCode::DomainViolation, "n * theta must stay below 180 degrees");
  }
  AngleProfile out;
  const Interval theta = Interval::rational(360 * num, den, precision);
  out.outer_apex = 180L - theta * static_cast<long>(n);
  out.base_angles = theta * static_cast<long>(n - 1);
  out.inner_apex = 180L - theta * static_cast<long>(n - 2);
  out.boundary = n == 2;

  const Interval step = oracle::radians(theta);
  std::vector<CirclePoint> pts;
  for (int j = 0; j <= n; ++j) {
    const Interval a = step * static_cast<long>(j);
    pts.emplace_back(oracle::cos(a), oracle::sin(a));
  }
  // Meeting point of the tangents at P_i and P_j (1-based); P_i when i == j.
  auto meet = [&](int i, int j) {
    return i == j ? pts[i - 1].as_plane() : tangent_intersection(pts[i - 1], pts[j - 1]);
  };
  auto angle_at = [](const PlanePoint& v, const PlanePoint& a, const PlanePoint& b) {
    const Interval ax = a.x - v.x, ay = a.y - v.y, bx = b.x - v.x, by = b.y - v.y;
    const Interval cosine = (ax * bx + ay * by) / (sqrt(square(ax) + square(ay)) * sqrt(square(bx) + square(by)));
    return oracle::degrees(oracle::acos(cosine));
  };
  const int last = n + 1;
  out.outer_coord = angle_at(meet(1, last), meet(1, last - 1), meet(last, 2));
  out.base_coord = angle_at(meet(1, last - 1), meet(2, last - 1), meet(1, last));
  out.inner_coord = angle_at(meet(2, last - 1), meet(last, 2), meet(1, last - 1));
  out.consistent = out.outer_apex.overlaps(out.outer_coord) &&
                   out.base_angles.overlaps(out.base_coord) &&
                   out.inner_apex.overlaps(out.inner_coord);
  return out;
}

}  // namespace polypi
