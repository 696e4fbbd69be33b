#pragma once

#include <cstdint>
#include <optional>

#include "polypi/circuits.hpp"
#include "polypi/interval.hpp"

namespace polypi {

/// Enclosure of 2 pi as the common limit of the hexagon-refinement
/// perimeters, deep enough to be tight at `precision`.
Interval two_pi(int precision);

/// Arc that is `fraction` of the full circle.
struct ArcMeasure {
  Interval fraction;
  Interval theta;        ///< 2 pi * fraction
  Interval sector_area;  ///< theta / 2
};

/// 0 <= k/n < 1, else FractionOutOfRange.
ArcMeasure arc_measure(long k, long n, int precision = kDefaultPrecision);
/// A fraction known only as an enclosure inside [0, 1), bracketed by the
/// vertex fractions j / (3 * 2^m) of the refined triangle below and above it.
ArcMeasure arc_measure(const Interval& fraction, int precision = kDefaultPrecision);

/// Arclength at the vertex fraction floor(f * 3 * 2^m) / (3 * 2^m) of the
/// refined triangle (or the ceiling). Both sequences approach arc_measure(f).
Interval vertex_theta(const Interval& fraction, int m, bool ceiling, int precision);

/// The point at arclength theta counterclockwise from (1, 0), found by
/// bisecting the fraction of the circle with the arclength map and building
/// the bracket vertices by chord steps. Negative theta reflects the point of
/// -theta. Requires |theta| < 2 pi.
CirclePoint geometric_point(const Interval& theta, int precision = kDefaultPrecision);
inline Interval geometric_cos(const Interval& theta, int precision = kDefaultPrecision) {
  return geometric_point(theta, precision).x();
}
inline Interval geometric_sin(const Interval& theta, int precision = kDefaultPrecision) {
  return geometric_point(theta, precision).y();
}

/// Vertex j of the 3 * 2^m-gon counted from (1, 0): rotations by whole
/// thirds, then one edge of each finer polygon per set bit of j mod 2^m.
/// Needs m <= 60 and j < 3 * 2^m.
CirclePoint vertex_point(std::uint64_t j, int m, int precision);

struct SandwichReport {
  Interval theta;
  Interval sin;
  Interval cos;
  Interval mid;    ///< theta / sin
  Interval upper;  ///< 1 / cos
  Verdict lower_verdict = Verdict::Overlap;  ///< 1 against mid
  Verdict upper_verdict = Verdict::Overlap;  ///< mid against upper
  /// mid - 1 against theta^2, for theta <= 1/2.
  std::optional<Verdict> square_verdict;
};

/// 0 < theta < pi / 2, else ThetaOutOfRange.
SandwichReport sandwich_report(const Interval& theta, int precision = kDefaultPrecision);

}  // namespace polypi
