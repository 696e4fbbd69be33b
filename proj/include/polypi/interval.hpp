#pragma once

#include <gmp.h>
#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "polypi/error.hpp"

namespace polypi {

inline constexpr int kDefaultPrecision = 128;

// Closed interval [lo, hi] with binary floating endpoints of a fixed mantissa
// width. Every operation rounds the lower endpoint toward -inf and the upper
// endpoint toward +inf, so the result always contains the exact real result
// for any choice of reals from the operands. Values are immutable once built;
// the precision of a result is the larger of its operands' precisions.
class Interval {
 public:
  Interval() : Interval(0L, kDefaultPrecision) {}
  Interval(long value, int precision);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(Interval other) noexcept;
  ~Interval();

  /// Enclosure of num/den (den != 0).
  static Interval rational(long num, long den, int precision);
  static Interval rational(const mpq_t q, int precision);
  /// mantissa * 2^exp2, exact when the mantissa fits the precision.
  static Interval dyadic(long mantissa, long exp2, int precision);
  /// Outward-rounded enclosure of a decimal literal such as "0.1" or "1e-3".
  static Interval decimal(std::string_view text, int precision);
  /// Interval whose endpoints are the strings rounded outward; decimal, or
  /// hexadecimal with a 0x prefix and binary exponent (exact).
  static Interval from_strings(std::string_view lo, std::string_view hi, int precision);
  static Interval hull(const Interval& a, const Interval& b);

  int precision() const { return static_cast<int>(mpfr_get_prec(lo_)); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  /// Endpoints rounded outward to double.
  double lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  /// Upper bound on hi - lo as a double.
  double width() const;
  /// Upper bound on max(|lo|, |hi|).
  double magnitude() const;

  bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
  bool contains(const Interval& inner) const;
  bool contains(long value) const;
  bool contains(const mpq_t q) const;
  bool contains_zero() const { return contains(0L); }
  bool overlaps(const Interval& other) const;
  /// Bitwise equality of both endpoints and the precision.
  bool identical(const Interval& other) const;
  bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }

  /// Point interval at the (rounded) midpoint; not an enclosure of *this.
  Interval midpoint() const;
  Interval lower_point() const;
  Interval upper_point() const;
  /// Same endpoints rounded outward into a new mantissa width.
  Interval with_precision(int precision) const;

  /// "[lo, hi] @pbits" with outward-rounded decimal endpoints.
  std::string to_string(int digits = 0) const;
  std::string lo_string(int digits = 0) const;
  std::string hi_string(int digits = 0) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  friend Interval operator+(const Interval& a, long b);
  friend Interval operator-(long a, const Interval& b);
  friend Interval operator*(const Interval& a, long b);
  friend Interval operator/(const Interval& a, long b);
  friend Interval sqrt(const Interval& a);
  friend Interval square(const Interval& a);
  friend Interval abs(const Interval& a);
  friend Interval scale2(const Interval& a, long exp2);
  friend Interval intersect(const Interval& a, const Interval& b);
  friend Interval max(const Interval& a, const Interval& b);
  friend Interval min(const Interval& a, const Interval& b);

 private:
  explicit Interval(int precision);  // uninitialised endpoints
  void check_order() const;

  mpfr_t lo_;
  mpfr_t hi_;
};

inline Interval operator+(long a, const Interval& b) { return b + a; }
inline Interval operator-(const Interval& a, long b) { return a + (-b); }
inline Interval operator*(long a, const Interval& b) { return b * a; }

enum class Verdict { CertainlyLess, CertainlyGreater, Overlap };

std::string_view to_string(Verdict v);

/// CertainlyLess iff a.hi < b.lo, CertainlyGreater iff a.lo > b.hi.
Verdict compare_certain(const Interval& a, const Interval& b);

/// Decimal digits that resolve `precision` bits, plus a guard digit.
int decimal_digits_for(int precision);

}  // namespace polypi
