#pragma once

#include <string>

#include "polypi/interval.hpp"

// Reference values computed by classical series, independent of the polygon
// construction. Nothing in the certified pi / trig pipeline calls into this
// namespace; it exists to produce expected values for tests and for the
// coordinate cross-check of angle_profile.
namespace polypi::oracle {

/// First d digits of pi, truncated ("3.1415" for d = 5), from Machin's
/// formula pi = 16 atan(1/5) - 4 atan(1/239) in fixed-point integers.
std::string machin_pi_digits(int d);

/// Enclosure of pi from Machin's formula over interval arctangent series.
Interval pi(int precision);

/// Taylor enclosures with Lagrange remainder bounds.
Interval sin(const Interval& x);
Interval cos(const Interval& x);
Interval tan(const Interval& x);
Interval atan(const Interval& x);
/// x is clamped to [-1, 1].
Interval acos(const Interval& x);

Interval degrees(const Interval& radians);
Interval radians(const Interval& degrees);

}  // namespace polypi::oracle
