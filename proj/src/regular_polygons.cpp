#include "polypi/regular_polygons.hpp"

#include <cmath>
#include <limits>

namespace polypi {

namespace {

void require_chord(const Interval& ell) {
  if (!ell.certainly_positive() || compare_certain(ell, Interval(2, ell.precision())) != Verdict::CertainlyLess) {
    throw Error(ErrorCode::InvalidChord, "chord must lie in (0, 2): " + ell.to_string(12));
  }
}

// floor(x * 10^(d-1)) for both endpoints of x; equal strings certify d digits.
std::string truncated_digits(mpfr_srcptr x, int d, mpfr_rnd_t rnd) {
  mpfr_t scaled, ten;
  mpfr_init2(scaled, mpfr_get_prec(x) + 64);
  mpfr_init2(ten, mpfr_get_prec(x) + 64);
  mpfr_set_ui(ten, 10, MPFR_RNDN);
  mpfr_pow_ui(ten, ten, static_cast<unsigned long>(d - 1), rnd);
  mpfr_mul(scaled, x, ten, rnd);
  mpz_t z;
  mpz_init(z);
  mpfr_get_z(z, scaled, MPFR_RNDD);
  char* s = mpz_get_str(nullptr, 10, z);
  std::string digits(s);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(s, std::char_traits<char>::length(s) + 1);
  mpz_clear(z);
  mpfr_clear(scaled);
  mpfr_clear(ten);
  return digits;
}

std::string with_point(const std::string& digits) {
  if (digits.size() <= 1) return digits;
  return digits.substr(0, 1) + "." + digits.substr(1);
}

}  // namespace

void RegularScheme::validate() const {
  if (n < 3 || m < 0) {
    throw Error(ErrorCode::PreconditionViolation, "scheme needs n >= 3 and m >= 0");
  }
}

std::uint64_t RegularScheme::edge_count() const {
  validate();
  const int bits = std::numeric_limits<std::uint64_t>::digits - 1;
  if (m >= bits || static_cast<std::uint64_t>(n) > (std::uint64_t{1} << (bits - m))) {
    throw Error(ErrorCode::PreconditionViolation, "edge count 2^m * n overflows");
  }
  return static_cast<std::uint64_t>(n) << m;
}

Interval seed_edge(int n, int precision) {
  switch (n) {
    case 3: return sqrt(Interval(3, precision));
    case 4: return sqrt(Interval(2, precision));
    case 6: return Interval(1, precision);
    default:
      throw Error(ErrorCode::UnsupportedSeed,
                  "no closed-form seed for n = " + std::to_string(n) + " (use solve_regular_chord)");
  }
}

Interval halve_edge(const Interval& ell) {
  require_chord(ell);
  return ell / sqrt(2L + sqrt(4L - square(ell)));
}

Interval circumscribed_edge(const Interval& ell) {
  require_chord(ell);
  return scale2(ell, 1) / sqrt(4L - square(ell));
}

Interval vertex_gap(const Interval& L) {
  if (!L.certainly_positive()) {
    throw Error(ErrorCode::InvalidEdge, "circumscribed edge must be positive: " + L.to_string(12));
  }
  const Interval half_sq = square(scale2(L, -1));
  return half_sq / (sqrt(half_sq + 1L) + 1L);
}

SchemeMeasures scheme_measures_from_edge(const RegularScheme& s, const Interval& base_edge) {
  s.validate();
  Interval ell = base_edge;
  for (int i = 0; i < s.m; ++i) ell = halve_edge(ell);
  Interval L = circumscribed_edge(ell);
  // 2^m * n scaling: exact power of two, integer factor rounded outward.
  Interval p = scale2(ell * static_cast<long>(s.n), s.m);
  Interval P = scale2(L * static_cast<long>(s.n), s.m);
  Interval a = scale2(p, -1) * sqrt(1L - scale2(square(ell), -2));
  Interval A = scale2(P, -1);
  Interval h = vertex_gap(L);
  return SchemeMeasures{std::move(ell), std::move(L), std::move(p), std::move(P),
                        std::move(a), std::move(A), std::move(h)};
}

SchemeMeasures scheme_measures(const RegularScheme& s, int precision) {
  if (precision < 16) {
    throw Error(ErrorCode::PreconditionViolation, "scheme precision must be >= 16");
  }
  s.validate();
  return scheme_measures_from_edge(s, seed_edge(s.n, precision));
}

Interval pi_bounds(const RegularScheme& s, int precision) {
  const SchemeMeasures sm = scheme_measures(s, precision);
  return Interval::hull(scale2(sm.p, -1).lower_point(), scale2(sm.P, -1).upper_point());
}

DigitsResult pi_digits_certified(int d, const DigitsConfig& config) {
  if (d < 1 || d > config.max_digits) {
    throw Error(ErrorCode::PreconditionViolation,
                "digit count must be in [1, " + std::to_string(config.max_digits) + "]");
  }
  RegularScheme scheme{config.base_n, static_cast<int>(std::ceil(config.depth_per_digit * d))};
  int precision = std::max(config.min_precision, config.precision_per_digit * d);
  // target width 10^-(d+2)
  const Interval target = Interval::decimal("1e-" + std::to_string(d + 2), 64);

  for (int attempt = 1; attempt <= config.max_attempts; ++attempt) {
    const SchemeMeasures sm = scheme_measures(scheme, precision);
    const Interval bounds =
        Interval::hull(scale2(sm.p, -1).lower_point(), scale2(sm.P, -1).upper_point());
    const Interval width = bounds.upper_point() - bounds.lower_point();
    const bool narrow = compare_certain(width, target) == Verdict::CertainlyLess;
    if (narrow) {
      const std::string lo = truncated_digits(bounds.lo(), d, MPFR_RNDD);
      const std::string hi = truncated_digits(bounds.hi(), d, MPFR_RNDU);
      if (lo == hi) return DigitsResult{with_point(lo), scheme, precision, attempt};
    }
    // Rounding noise dominates once the enclosures of p and P are wider than
    // a quarter of the target; otherwise the polygon is still too coarse.
    const Interval noise = (sm.p.upper_point() - sm.p.lower_point()) +
                           (sm.P.upper_point() - sm.P.lower_point());
    if (compare_certain(scale2(noise, 2), target) != Verdict::CertainlyLess) {
      precision *= 2;
    } else {
      scheme.m += config.depth_step;
      if (narrow) precision += 32;
    }
  }
  throw Error(ErrorCode::IterationCapExceeded,
              "pi_digits(" + std::to_string(d) + ") did not certify within " +
                  std::to_string(config.max_attempts) + " attempts");
}

std::string pi_digits(int d, const DigitsConfig& config) {
  return pi_digits_certified(d, config).digits;
}

}  // namespace polypi
