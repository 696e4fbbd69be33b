#pragma once

#include <functional>
#include <vector>

#include "polypi/circuits.hpp"
#include "polypi/interval.hpp"

namespace polypi {

/// Counterclockwise arc from `start` whose endpoints are chord_total apart.
/// The chord must be certainly inside (0, 2), i.e. the arc is less than half
/// the circle.
class ArcSpec {
 public:
  ArcSpec(CirclePoint start, Interval chord_total);
  /// Arc starting at (1, 0).
  explicit ArcSpec(Interval chord_total);

  const CirclePoint& start() const { return start_; }
  const CirclePoint& end() const { return end_; }
  const Interval& chord_total() const { return chord_; }
  int precision() const { return chord_.precision(); }

 private:
  CirclePoint start_;
  Interval chord_;
  CirclePoint end_;
};

/// Builds the same arc at any requested precision; used by the precision
/// ladder, since an arc built at p bits cannot get tighter than 2^-p.
using ArcRecipe = std::function<ArcSpec(int precision)>;

/// Arc of chord num/den starting at (1, 0).
ArcRecipe rational_arc(long num, long den);
/// Arc of chord sqrt(radicand) starting at (1, 0).
ArcRecipe sqrt_arc(long radicand);

/// Chord c such that `steps` counterclockwise chord steps from `start` pass
/// the ray through `target` exactly `windings` times, landing on it. When
/// start and target coincide (closed paths) pass `closed = true`. The result
/// has width < 2^(8 - precision).
Interval solve_winding_chord(const CirclePoint& start, const CirclePoint& target, bool closed,
                             int steps, int windings, int precision);

/// Step chord of the regular n-part partition of the arc. n = 1 returns the
/// arc's chord.
Interval solve_regular_chord(const ArcSpec& arc, int n, int precision);

/// Regular partition P_1 .. P_{n+1} of an arc, laid out symmetrically about
/// the x axis with the arc midpoint at (1, 0); every length below depends only
/// on the step chord, so the frame is free. Mirror points are exact
/// reflections, which makes the gap symmetry bitwise.
struct PartitionProfile {
  int n = 0;
  int precision = 0;
  Interval step_chord;
  std::vector<CirclePoint> points;            ///< P_1 .. P_{n+1}, counterclockwise
  std::vector<Interval> cumulative_chords;    ///< [k-1] = |P_1 P_{k+1}|
  std::vector<PlanePoint> tangent_meets;      ///< [k-1] = P_{1,k}, with P_{1,1} = P_1
  std::vector<Interval> tangent_segments;     ///< [k-1] = |P_{1,k} P_{1,k+1}|
  std::vector<Interval> tangent_paths;        ///< [k-1] = |P_1 P_{1,k+1}| + |P_{1,k+1} P_{k+1}|
  std::vector<Interval> projections;          ///< [i-1] = |q_i q_{i+1}| along the chord P_1 P_{n+1}
  Interval tangent_total;                     ///< tangent_paths.back()
};

PartitionProfile partition_profile(const ArcSpec& arc, int n, int precision);

struct CompareResult {
  Verdict verdict = Verdict::Overlap;
  Interval lhs;
  Interval rhs;
  int precision_used = 0;
};

/// n * l_m against m * l_n with l_k = |P_1 P_{k+1}| on the n-partition;
/// verdict = compare_certain(rhs, lhs), expected CertainlyLess.
CompareResult chord_compare(const ArcSpec& arc, int m, int n, int precision);
/// n * L_m against m * L_n with the tangent paths L_k; verdict =
/// compare_certain(lhs, rhs), expected CertainlyLess.
CompareResult tangent_compare(const ArcSpec& arc, int m, int n, int precision);

struct Ladder {
  int start = kDefaultPrecision;
  int cap = 4096;
};

/// Doubles the precision on Overlap or BisectionStall until the cap. The
/// result at the cap may still be Overlap (inconclusive).
CompareResult chord_compare(const ArcRecipe& arc, int m, int n, const Ladder& ladder = {});
CompareResult tangent_compare(const ArcRecipe& arc, int m, int n, const Ladder& ladder = {});

/// Angles of the tangent figure over a partition P_1 .. P_{n+1} with central
/// step theta = num/den of the full turn, in degrees: the apex between the
/// tangents at P_1 and P_{n+1}, the base angle at P_{1,n}, and the inner
/// apex at P_{2,n}.
struct AngleProfile {
  Interval outer_apex;
  Interval base_angles;
  Interval inner_apex;
  /// The same three angles measured from coordinates (oracle trig).
  Interval outer_coord;
  Interval base_coord;
  Interval inner_coord;
  bool consistent = false;
  /// n = 2: the inner apex is a straight angle.
  bool boundary = false;
};

AngleProfile angle_profile(int n, long num, long den, int precision = kDefaultPrecision);

}  // namespace polypi
