#include "polypi/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polypi/random.hpp"
#include "polypi/regular_polygons.hpp"

namespace polypi {

namespace {

// Contract once the coordinate enclosures are wider than 2^(16 - precision).
bool needs_contraction(const CirclePoint& p) {
  const double limit = std::ldexp(1.0, 16 - p.precision());
  return p.x().width() > limit || p.y().width() > limit;
}

Interval contract_coordinate(const Interval& c, const Interval& other) {
  const Interval rest = 1L - square(other);
  // Clamp the lower end at 0: the true point satisfies rest >= 0.
  const Interval clamped = rest.certainly_negative()
                               ? Interval(0, rest.precision())
                               : intersect(rest, Interval::hull(Interval(0, rest.precision()),
                                                                rest.upper_point()));
  const Interval root = sqrt(clamped);
  if (c.certainly_positive()) return intersect(c, root);
  if (c.certainly_negative()) return intersect(c, -root);
  return intersect(c, Interval::hull(-root, root));
}

}  // namespace

CirclePoint::CirclePoint(Interval x, Interval y) : x_(std::move(x)), y_(std::move(y)) {
  if (!on_circle()) {
    throw Error(ErrorCode::DomainViolation,
                "point (" + x_.to_string(12) + ", " + y_.to_string(12) + ") is not on the unit circle");
  }
}

CirclePoint::CirclePoint(Interval x, Interval y, Trusted) : x_(std::move(x)), y_(std::move(y)) {}

CirclePoint CirclePoint::origin_ray(int precision) {
  return CirclePoint(Interval(1, precision), Interval(0, precision), Trusted{});
}

bool CirclePoint::on_circle() const { return (square(x_) + square(y_)).contains(1L); }

double CirclePoint::width() const { return std::max(x_.width(), y_.width()); }

CirclePoint CirclePoint::reflected() const { return CirclePoint(x_, -y_, Trusted{}); }

CirclePoint CirclePoint::contracted() const {
  Interval x = contract_coordinate(x_, y_);
  Interval y = contract_coordinate(y_, x);
  return CirclePoint(std::move(x), std::move(y), Trusted{});
}

Interval distance(const PlanePoint& a, const PlanePoint& b) {
  return sqrt(square(a.x - b.x) + square(a.y - b.y));
}

Interval cross(const CirclePoint& a, const CirclePoint& b) {
  return a.x() * b.y() - a.y() * b.x();
}

Interval dot(const CirclePoint& a, const CirclePoint& b) {
  return a.x() * b.x() + a.y() * b.y();
}

bool overlaps(const CirclePoint& a, const CirclePoint& b) {
  return a.x().overlaps(b.x()) && a.y().overlaps(b.y());
}

CirclePoint rotate(const CirclePoint& p, const Interval& cos_t, const Interval& sin_t) {
  CirclePoint r(p.x() * cos_t - p.y() * sin_t, p.x() * sin_t + p.y() * cos_t,
                CirclePoint::Trusted{});
  return needs_contraction(r) ? r.contracted() : r;
}

std::pair<Interval, Interval> chord_rotation(const Interval& c) {
  if (!c.certainly_positive() ||
      compare_certain(c, Interval(2, c.precision())) != Verdict::CertainlyLess) {
    throw Error(ErrorCode::InvalidChord, "step chord must lie in (0, 2): " + c.to_string(12));
  }
  const Interval c2 = square(c);
  return {1L - scale2(c2, -1), scale2(c * sqrt(4L - c2), -1)};
}

CirclePoint step_by_chord(const CirclePoint& p, const Interval& c) {
  const auto [cos_t, sin_t] = chord_rotation(c);
  return rotate(p, cos_t, sin_t);
}

PlanePoint tangent_intersection(const CirclePoint& p, const CirclePoint& q) {
  const Interval denom = 1L + dot(p, q);
  if (denom.contains_zero()) {
    throw Error(ErrorCode::AntipodalTangents, "tangents at antipodal points do not meet");
  }
  return {(p.x() + q.x()) / denom, (p.y() + q.y()) / denom};
}

RaySide ray_side(const CirclePoint& dir, const CirclePoint& p) {
  const Interval c = cross(dir, p);
  if (c.certainly_positive()) return RaySide::Upper;
  if (c.certainly_negative()) return RaySide::Lower;
  if (dot(dir, p).certainly_negative()) return RaySide::Upper;
  return RaySide::Ambiguous;
}

std::optional<int> winding_count(const std::vector<CirclePoint>& path) {
  if (path.size() < 2) return 0;
  const CirclePoint& dir = path.front();
  int count = 0;
  RaySide prev = RaySide::Upper;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const RaySide side = ray_side(dir, path[i]);
    if (side == RaySide::Ambiguous) return std::nullopt;
    if (prev == RaySide::Lower && side == RaySide::Upper) ++count;
    prev = side;
  }
  // The closing edge lands on the segment itself.
  if (prev == RaySide::Lower) ++count;
  return count;
}

// ---------------------------------------------------------------------------

Circuit::Circuit(std::vector<CirclePoint> points) : points_(std::move(points)) {
  if (points_.size() < 3) {
    throw Error(ErrorCode::InvalidCircuit, "a circuit needs at least three distinct points");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Interval c = cross(points_[i], vertex(i + 1));
    if (!c.certainly_positive()) {
      throw Error(ErrorCode::InvalidCircuit,
                  "arc " + std::to_string(i) +
                      " is not certainly counterclockwise and shorter than half the circle");
    }
  }
  const auto w = winding_count(points_);
  if (!w || *w != 1) {
    throw Error(ErrorCode::InvalidCircuit,
                w ? "circuit winds " + std::to_string(*w) + " times" : "winding undecided");
  }
}

CircuitMeasures circuit_measures(const Circuit& c) {
  const int prec = c.precision();
  Interval perimeter_in(0, prec), perimeter_circ(0, prec), area_in(0, prec);
  std::optional<Interval> mesh, min_edge;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const CirclePoint& a = c.vertex(i);
    const CirclePoint& b = c.vertex(i + 1);
    const Interval chord = distance(a, b);
    const PlanePoint t = tangent_intersection(a, b);
    perimeter_in = perimeter_in + chord;
    perimeter_circ = perimeter_circ + distance(a.as_plane(), t) + distance(t, b.as_plane());
    area_in = area_in + scale2(chord, -1) * sqrt(1L - scale2(square(chord), -2));
    mesh = mesh ? max(*mesh, chord) : chord;
    min_edge = min_edge ? min(*min_edge, chord) : chord;
  }
  Interval area_circ = scale2(perimeter_circ, -1);
  return CircuitMeasures{std::move(perimeter_in), std::move(perimeter_circ), std::move(area_in),
                         std::move(area_circ), std::move(*mesh), std::move(*min_edge)};
}

VertexTable::VertexTable(int m, int precision) : m_(m), edge_(seed_edge(3, precision)) {
  for (int i = 0; i < m; ++i) edge_ = halve_edge(edge_);
  const std::size_t count = RegularScheme{3, m}.edge_count();
  points_.reserve(count);
  const auto [cos_t, sin_t] = chord_rotation(edge_);
  points_.push_back(CirclePoint::origin_ray(precision));
  for (std::size_t i = 1; i < count; ++i) points_.push_back(rotate(points_.back(), cos_t, sin_t));
}

std::size_t VertexTable::max_gap_below(const Interval& cap) const {
  // Chords from vertex 0 grow with the gap up to half a turn.
  std::size_t lo = 0, hi = (points_.size() - 1) / 2;
  auto fits = [&](std::size_t g) {
    return compare_certain(distance(points_[0], points_[g]), cap) == Verdict::CertainlyLess;
  };
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

int vertex_depth_for(int k, const Interval& cap, int precision) {
  if (!cap.certainly_positive()) {
    throw Error(ErrorCode::PreconditionViolation, "mesh cap must be positive");
  }
  Interval edge = seed_edge(3, precision);
  for (int m = 0; m < 60; ++m) {
    const std::uint64_t count = std::uint64_t{3} << m;
    if (count >= static_cast<std::uint64_t>(k) && compare_certain(edge, cap) == Verdict::CertainlyLess) {
      return m;
    }
    edge = halve_edge(edge);
  }
  throw Error(ErrorCode::PreconditionViolation, "mesh cap too small");
}

namespace {

Circuit draw_circuit(int k, const Interval& mesh_cap, std::uint64_t seed, const VertexTable& table) {
  const std::size_t count = table.size();
  const std::size_t gap_cap =
      std::min(table.max_gap_below(mesh_cap), count / static_cast<std::size_t>(k));
  if (gap_cap == 0) {
    throw Error(ErrorCode::PreconditionViolation, "vertex table too coarse for the mesh cap");
  }
  Rng rng(seed);
  const std::size_t start = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(count) - 1));
  std::vector<CirclePoint> pts;
  std::size_t offset = 0;
  pts.push_back(table[start]);
  while (count - offset > gap_cap) {
    offset += static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(gap_cap)));
    pts.push_back(table[start + offset]);
  }
  return Circuit(std::move(pts));
}

}  // namespace

Circuit random_circuit(int k, const Interval& mesh_cap, std::uint64_t seed, int precision) {
  if (k < 3) throw Error(ErrorCode::PreconditionViolation, "random_circuit needs k >= 3");
  const int m = vertex_depth_for(k, mesh_cap, precision);
  return draw_circuit(k, mesh_cap, seed, VertexTable(m, precision));
}

Circuit random_circuit(int k, const Interval& mesh_cap, std::uint64_t seed,
                       const std::vector<VertexTable>& tables) {
  if (k < 3) throw Error(ErrorCode::PreconditionViolation, "random_circuit needs k >= 3");
  if (tables.empty()) throw Error(ErrorCode::PreconditionViolation, "no vertex tables supplied");
  const int precision = tables.front()[0].precision();
  const int m = vertex_depth_for(k, mesh_cap, precision);
  for (const auto& t : tables) {
    if (t.depth() == m) return draw_circuit(k, mesh_cap, seed, t);
  }
  return draw_circuit(k, mesh_cap, seed, VertexTable(m, precision));
}

}  // namespace polypi
