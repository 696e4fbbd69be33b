#include "polypi/oracle.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>

namespace polypi::oracle {

namespace {

constexpr int kGuardBits = 32;

// floor(10^scale * atan(1/q)) up to +-(number of terms) units.
void arctan_inverse(mpz_t out, unsigned long q, const mpz_t one, unsigned long& terms) {
  mpz_t power, term;
  mpz_init(power);
  mpz_init(term);
  mpz_tdiv_q_ui(power, one, q);  // one / q
  mpz_set(out, power);
  const unsigned long q2 = q * q;
  terms = 1;
  for (unsigned long k = 1;; ++k) {
    mpz_tdiv_q_ui(power, power, q2);
    if (mpz_sgn(power) == 0) break;
    mpz_tdiv_q_ui(term, power, 2 * k + 1);
    if (k % 2 == 1) {
      mpz_sub(out, out, term);
    } else {
      mpz_add(out, out, term);
    }
    ++terms;
  }
  mpz_clear(power);
  mpz_clear(term);
}

std::string truncate_scaled(const mpz_t v, int guard, int d) {
  mpz_t t, p;
  mpz_init(t);
  mpz_init(p);
  mpz_ui_pow_ui(p, 10, static_cast<unsigned long>(guard + 1));
  mpz_fdiv_q(t, v, p);  // v / 10^(guard+1): keep d digits total
  char* s = mpz_get_str(nullptr, 10, t);
  std::string out(s);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(s, out.size() + 1);
  mpz_clear(t);
  mpz_clear(p);
  (void)d;
  return out;
}

Interval magnitude_bound(const Interval& x) {
  return abs(x).upper_point();
}

// n! as an enclosure.
Interval factorial(long n, int precision) {
  Interval f(1, precision);
  for (long i = 2; i <= n; ++i) f = f * i;
  return f;
}

// x reduced into roughly [-pi, pi] by an integer multiple of 2*pi.
Interval reduce(const Interval& x) {
  if (x.magnitude() <= 4.0) return x;
  const Interval two_pi = scale2(pi(x.precision()), 1);
  const double k = std::nearbyint(x.midpoint().lower() / two_pi.lower());
  return x - two_pi * static_cast<long>(k);
}

}  // namespace

std::string machin_pi_digits(int d) {
  if (d < 1) throw Error(ErrorCode::PreconditionViolation, "digit count must be >= 1");
  for (int guard = 10;; guard += 10) {
    // Scale 10^(d - 1 + guard + 1) so pi*scale has d + guard + 1 integer digits.
    const int scale = d + guard;
    mpz_t one, a, b, v, lo, hi;
    mpz_inits(one, a, b, v, lo, hi, nullptr);
    mpz_ui_pow_ui(one, 10, static_cast<unsigned long>(scale));
    unsigned long ta = 0, tb = 0;
    arctan_inverse(a, 5, one, ta);
    arctan_inverse(b, 239, one, tb);
    mpz_mul_ui(v, a, 16);
    mpz_submul_ui(v, b, 4);
    // each truncated division is off by < 1 unit; two per term
    const unsigned long err = 16 * (2 * ta + 1) + 4 * (2 * tb + 1);
    mpz_sub_ui(lo, v, err);
    mpz_add_ui(hi, v, err);
    const std::string l = truncate_scaled(lo, guard, d);
    const std::string h = truncate_scaled(hi, guard, d);
    mpz_clears(one, a, b, v, lo, hi, nullptr);
    if (l == h) return l.size() <= 1 ? l : l.substr(0, 1) + "." + l.substr(1);
  }
}

Interval pi(int precision) {
  const int wp = precision + kGuardBits;
  const Interval r = atan(Interval::rational(1, 5, wp)) * 16L - atan(Interval::rational(1, 239, wp)) * 4L;
  return r.with_precision(precision);
}

Interval sin(const Interval& x0) {
  const int prec = x0.precision();
  const int wp = prec + kGuardBits;
  const Interval x = reduce(x0.with_precision(wp));
  const Interval x2 = square(x);
  const Interval mag = magnitude_bound(x);
  Interval term = x;
  Interval sum = x;
  long k = 1;
  const double eps = std::ldexp(1.0, -wp);
  for (;; ++k) {
    term = -(term * x2) / ((2 * k) * (2 * k + 1));
    sum = sum + term;
    if (term.magnitude() < eps && k > 2) break;
  }
  // |remainder| <= |x|^(2k+3) / (2k+3)!
  Interval power(1, wp);
  for (long i = 0; i < 2 * k + 3; ++i) power = power * mag;
  const Interval r = (power / factorial(2 * k + 3, wp)).upper_point();
  return (sum + Interval::hull(-r, r)).with_precision(prec);
}

Interval cos(const Interval& x0) {
  const int prec = x0.precision();
  const int wp = prec + kGuardBits;
  const Interval x = reduce(x0.with_precision(wp));
  const Interval x2 = square(x);
  const Interval mag = magnitude_bound(x);
  Interval term(1, wp);
  Interval sum(1, wp);
  long k = 1;
  const double eps = std::ldexp(1.0, -wp);
  for (;; ++k) {
    term = -(term * x2) / ((2 * k - 1) * (2 * k));
    sum = sum + term;
    if (term.magnitude() < eps && k > 2) break;
  }
  Interval power(1, wp);
  for (long i = 0; i < 2 * k + 2; ++i) power = power * mag;
  const Interval r = (power / factorial(2 * k + 2, wp)).upper_point();
  return (sum + Interval::hull(-r, r)).with_precision(prec);
}

Interval tan(const Interval& x) { return sin(x) / cos(x); }

Interval atan(const Interval& x0) {
  const int prec = x0.precision();
  const int wp = prec + kGuardBits;
  Interval x = x0.with_precision(wp);
  // atan(x) = 2 atan(x / (1 + sqrt(1 + x^2)))
  long doublings = 0;
  while (x.magnitude() > 0.25) {
    x = x / (sqrt(square(x) + 1L) + 1L);
    ++doublings;
  }
  const Interval x2 = square(x);
  const Interval mag = magnitude_bound(x);
  Interval power = x;
  Interval sum = x;
  long k = 1;
  const double eps = std::ldexp(1.0, -wp);
  for (;; ++k) {
    power = -(power * x2);
    const Interval term = power / (2 * k + 1);
    sum = sum + term;
    if (term.magnitude() < eps) break;
  }
  // alternating with decreasing terms for |x| < 1
  Interval next(1, wp);
  for (long i = 0; i < 2 * k + 3; ++i) next = next * mag;
  const Interval r = (next / (2 * k + 3)).upper_point();
  sum = sum + Interval::hull(-r, r);
  return scale2(sum, doublings).with_precision(prec);
}

Interval acos(const Interval& x0) {
  const int prec = x0.precision();
  const int wp = prec + kGuardBits;
  const Interval x = intersect(x0.with_precision(wp), Interval::hull(Interval(-1, wp), Interval(1, wp)));
  if (x.contains(-1L) || x.upper() < 0) {
    return (pi(wp) - acos(-x)).with_precision(prec);
  }
  const Interval ratio = (1L - x) / (x + 1L);
  const Interval clamped = intersect(ratio, Interval::hull(Interval(0, wp), ratio.upper_point()));
  return scale2(atan(sqrt(clamped)), 1).with_precision(prec);
}

Interval degrees(const Interval& radians) {
  const int wp = radians.precision() + kGuardBits;
  return (radians.with_precision(wp) * 180L / pi(wp)).with_precision(radians.precision());
}

Interval radians(const Interval& degrees) {
  const int wp = degrees.precision() + kGuardBits;
  return (degrees.with_precision(wp) * pi(wp) / 180L).with_precision(degrees.precision());
}

}  // namespace polypi::oracle
