#pragma once

#include <cstdint>
#include <string>

#include "polypi/interval.hpp"

namespace polypi {

/// Regular 2^m * n-gon obtained by refining the base n-gon m times.
struct RegularScheme {
  int n = 6;
  int m = 0;

  void validate() const;
  /// 2^m * n; throws PreconditionViolation when it does not fit 63 bits.
  std::uint64_t edge_count() const;
};

/// Measures of the inscribed (lower case) and circumscribed (upper case)
/// regular polygons of a scheme in the unit circle.
struct SchemeMeasures {
  Interval ell;  ///< inscribed edge
  Interval L;    ///< circumscribed edge
  Interval p;    ///< inscribed perimeter
  Interval P;    ///< circumscribed perimeter
  Interval a;    ///< inscribed area
  Interval A;    ///< circumscribed area
  Interval h;    ///< distance from a circumscribed vertex to the circle
};

/// Inscribed edge of the base n-gon for n in {3, 4, 6}: sqrt3, sqrt2, 1.
Interval seed_edge(int n, int precision);

/// Chord of half the arc of `ell`: sqrt(2 - sqrt(4 - ell^2)), evaluated as
/// ell / sqrt(2 + sqrt(4 - ell^2)) to avoid cancellation for short chords.
Interval halve_edge(const Interval& ell);

/// Tangent edge whose touching arc is the arc of chord `ell`: ell / sqrt(1 - ell^2/4).
Interval circumscribed_edge(const Interval& ell);

/// sqrt(1 + (L/2)^2) - 1, evaluated as (L/2)^2 / (sqrt(1 + (L/2)^2) + 1).
Interval vertex_gap(const Interval& L);

SchemeMeasures scheme_measures(const RegularScheme& s, int precision);

/// Same as above for a base polygon whose edge is supplied by the caller
/// (for n outside {3, 4, 6}, e.g. from solve_regular_chord).
SchemeMeasures scheme_measures_from_edge(const RegularScheme& s, const Interval& base_edge);

/// [p/2 lower endpoint, P/2 upper endpoint]; always contains pi.
Interval pi_bounds(const RegularScheme& s, int precision);

struct DigitsConfig {
  int max_digits = 10000;
  int max_attempts = 64;
  /// Starting precision is max(min_precision, precision_per_digit * d).
  int min_precision = 64;
  int precision_per_digit = 4;
  /// Starting depth is ceil(depth_per_digit * d); raised by depth_step.
  double depth_per_digit = 1.7;
  int depth_step = 4;
  int base_n = 6;
};

struct DigitsResult {
  std::string digits;
  RegularScheme scheme;
  int precision = 0;
  int attempts = 0;
};

/// The first d decimal digits of pi (truncated, "3.1415" for d = 5), certified
/// by a hexagon-refinement enclosure whose endpoints agree on all of them.
DigitsResult pi_digits_certified(int d, const DigitsConfig& config = {});
std::string pi_digits(int d, const DigitsConfig& config = {});

}  // namespace polypi
