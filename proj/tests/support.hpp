#pragma once

#include <doctest.h>

#include <string>

#include "polypi/interval.hpp"

namespace polypi::test {

// Two certified enclosures of the same real must overlap; both should also
// be tight enough to make the agreement meaningful.
inline bool agree(const Interval& x, const Interval& y, double max_width = 1e-30) {
  return x.overlaps(y) && x.width() < max_width && y.width() < max_width;
}

inline Interval dec(const char* s, int precision = kDefaultPrecision) { return Interval::decimal(s, precision); }

// x lies strictly inside (lo, hi), both decimal literals.
inline bool inside(const Interval& x, const char* lo, const char* hi) {
  return compare_certain(dec(lo, x.precision()), x) == Verdict::CertainlyLess &&
         compare_certain(x, dec(hi, x.precision())) == Verdict::CertainlyLess;
}

inline ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no polypi::Error thrown");
  return ErrorCode::ParseError;
}

}  // namespace polypi::test
