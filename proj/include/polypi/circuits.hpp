#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polypi/interval.hpp"

namespace polypi {

/// Point of the plane as a pair of coordinate enclosures.
struct PlanePoint {
  Interval x;
  Interval y;
};

/// Point of the unit circle. The box x*y always contains a point with
/// x^2 + y^2 = 1; `on_circle()` checks the weaker certified condition that
/// the interval x^2 + y^2 contains 1.
class CirclePoint {
 public:
  /// Throws DomainViolation when x^2 + y^2 certainly misses 1.
  CirclePoint(Interval x, Interval y);

  /// (1, 0) at the given precision.
  static CirclePoint origin_ray(int precision);

  const Interval& x() const { return x_; }
  const Interval& y() const { return y_; }
  int precision() const { return x_.precision(); }
  bool on_circle() const;
  double width() const;

  /// Mirror image (x, -y); exact.
  CirclePoint reflected() const;
  PlanePoint as_plane() const { return {x_, y_}; }

  /// Shrinks each coordinate onto +-sqrt(1 - other^2). Keeps every point of
  /// the circle that lies in the box.
  CirclePoint contracted() const;

 private:
  struct Trusted {};
  CirclePoint(Interval x, Interval y, Trusted);
  friend CirclePoint rotate(const CirclePoint&, const Interval&, const Interval&);

  Interval x_;
  Interval y_;
};

Interval distance(const PlanePoint& a, const PlanePoint& b);
inline Interval distance(const CirclePoint& a, const CirclePoint& b) {
  return distance(a.as_plane(), b.as_plane());
}
/// x_a * y_b - y_a * x_b
Interval cross(const CirclePoint& a, const CirclePoint& b);
Interval dot(const CirclePoint& a, const CirclePoint& b);
bool overlaps(const CirclePoint& a, const CirclePoint& b);

/// Counterclockwise rotation by the angle with the given cosine and sine.
CirclePoint rotate(const CirclePoint& p, const Interval& cos_t, const Interval& sin_t);

/// Cosine and sine of the central angle spanned by chord c:
/// 1 - c^2/2 and c * sqrt(4 - c^2) / 2.
std::pair<Interval, Interval> chord_rotation(const Interval& c);

/// The next point counterclockwise from p at chord distance c.
CirclePoint step_by_chord(const CirclePoint& p, const Interval& c);

/// Meeting point of the tangents at p and q: (p + q) / (1 + p.q).
PlanePoint tangent_intersection(const CirclePoint& p, const CirclePoint& q);

/// Side of the ray from the origin through `dir` a circle point lies on, for
/// crossing counts. `Upper` includes the opposite ray.
enum class RaySide { Lower, Upper, Ambiguous };
RaySide ray_side(const CirclePoint& dir, const CirclePoint& p);

/// Number of times the closed path path[0] -> ... -> path.back() -> path[0]
/// (consecutive steps counterclockwise and shorter than half a turn) crosses
/// the segment from the origin to path[0]. nullopt when a vertex sits too
/// close to that segment to decide at the current precision.
std::optional<int> winding_count(const std::vector<CirclePoint>& path);

// ---------------------------------------------------------------------------

struct CircuitMeasures {
  Interval perimeter_in;
  Interval perimeter_circ;
  Interval area_in;
  Interval area_circ;
  Interval mesh;
  Interval min_edge;
};

/// Counterclockwise sequence of circle points closing on its first point and
/// winding once, with every arc between neighbours under half the circle.
class Circuit {
 public:
  /// `points` lists each vertex once; the closing edge back to points[0] is
  /// implied. Throws InvalidCircuit if the conditions above cannot be
  /// certified.
  explicit Circuit(std::vector<CirclePoint> points);

  const std::vector<CirclePoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const CirclePoint& vertex(std::size_t i) const { return points_[i % points_.size()]; }
  int precision() const { return points_.front().precision(); }

 private:
  std::vector<CirclePoint> points_;
};

CircuitMeasures circuit_measures(const Circuit& c);

/// Vertices of the inscribed regular 3 * 2^m-gon starting at (1, 0), built
/// by stepping with the halved triangle edge.
class VertexTable {
 public:
  VertexTable(int m, int precision);

  int depth() const { return m_; }
  std::size_t size() const { return points_.size(); }
  const CirclePoint& operator[](std::size_t i) const { return points_[i % points_.size()]; }
  const Interval& edge() const { return edge_; }
  /// Largest gap g (in vertex steps, g < size/2) whose chord is certainly < cap.
  std::size_t max_gap_below(const Interval& cap) const;

 private:
  int m_;
  Interval edge_;
  std::vector<CirclePoint> points_;
};

/// Smallest m whose 3 * 2^m-gon edge is certainly below `cap` and which has
/// at least k vertices.
int vertex_depth_for(int k, const Interval& cap, int precision);

/// Random circuit with at least k points, every edge certainly shorter than
/// mesh_cap, drawn from the vertices of a 3 * 2^m-gon. Deterministic in seed.
Circuit random_circuit(int k, const Interval& mesh_cap, std::uint64_t seed,
                       int precision = kDefaultPrecision);
/// Same, reusing prebuilt vertex tables (tables[i] has depth base + i).
Circuit random_circuit(int k, const Interval& mesh_cap, std::uint64_t seed,
                       const std::vector<VertexTable>& tables);

}  // namespace polypi
