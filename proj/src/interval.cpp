#include "polypi/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <utility>

namespace polypi {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivByZeroInterval: return "DivByZeroInterval";
    case ErrorCode::NegativeSqrt: return "NegativeSqrt";
    case ErrorCode::UnsupportedSeed: return "UnsupportedSeed";
    case ErrorCode::InvalidChord: return "InvalidChord";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorCode::AntipodalTangents: return "AntipodalTangents";
    case ErrorCode::BisectionStall: return "BisectionStall";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::NonCoprime: return "NonCoprime";
    case ErrorCode::ChordTooLong: return "ChordTooLong";
    case ErrorCode::ClosureFailure: return "ClosureFailure";
    case ErrorCode::HypothesisUnordered: return "HypothesisUnordered";
    case ErrorCode::FractionOutOfRange: return "FractionOutOfRange";
    case ErrorCode::ThetaOutOfRange: return "ThetaOutOfRange";
    case ErrorCode::InvalidCircuit: return "InvalidCircuit";
    case ErrorCode::InconclusivePrecision: return "InconclusivePrecision";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::CertainlyLess: return "CertainlyLess";
    case Verdict::CertainlyGreater: return "CertainlyGreater";
    case Verdict::Overlap: return "Overlap";
  }
  return "Overlap";
}

namespace {

void check_precision(int precision) {
  if (precision < MPFR_PREC_MIN + 1 || precision > (1 << 24)) {
    throw Error(ErrorCode::PreconditionViolation,
                "precision out of range: " + std::to_string(precision));
  }
}

// RAII scratch value for the four-endpoint products and quotients.
struct Scratch {
  explicit Scratch(mpfr_prec_t p) { mpfr_init2(v, p); }
  ~Scratch() { mpfr_clear(v); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_t v;
};

using BinaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// lo = min over endpoint pairs rounded down, hi = max rounded up.
void four_corner(mpfr_ptr lo, mpfr_ptr hi, const Interval& a, const Interval& b, BinaryFn fn) {
  mpfr_srcptr as[2] = {a.lo(), a.hi()};
  mpfr_srcptr bs[2] = {b.lo(), b.hi()};
  Scratch t(mpfr_get_prec(lo));
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      fn(t.v, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.v, lo)) mpfr_set(lo, t.v, MPFR_RNDD);
      fn(t.v, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.v, hi)) mpfr_set(hi, t.v, MPFR_RNDU);
      first = false;
    }
  }
}

std::string render(mpfr_srcptr x, mpfr_rnd_t rnd, int digits) {
  char* buf = nullptr;
  if (rnd == MPFR_RNDD) {
    mpfr_asprintf(&buf, "%.*RDg", digits, x);
  } else {
    mpfr_asprintf(&buf, "%.*RUg", digits, x);
  }
  std::string out = buf ? buf : "nan";
  mpfr_free_str(buf);
  if (out == "-0") out = "0";
  return out;
}

}  // namespace

int decimal_digits_for(int precision) {
  return static_cast<int>(std::ceil(precision * 0.30102999566398120)) + 1;
}

Interval::Interval(int precision) {
  check_precision(precision);
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
}

Interval::Interval(long value, int precision) : Interval(precision) {
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::Interval(const Interval& other) : Interval(other.precision()) {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

// A moved-from Interval keeps a null limb pointer and is only destroyed or
// assigned to afterwards.
Interval::Interval(Interval&& other) noexcept {
  std::memcpy(lo_, other.lo_, sizeof(mpfr_t));
  std::memcpy(hi_, other.hi_, sizeof(mpfr_t));
  other.lo_->_mpfr_d = nullptr;
  other.hi_->_mpfr_d = nullptr;
}

Interval& Interval::operator=(Interval other) noexcept {
  std::swap(*lo_, *other.lo_);
  std::swap(*hi_, *other.hi_);
  return *this;
}

Interval::~Interval() {
  if (lo_->_mpfr_d != nullptr) mpfr_clear(lo_);
  if (hi_->_mpfr_d != nullptr) mpfr_clear(hi_);
}

Interval Interval::rational(long num, long den, int precision) {
  if (den == 0) throw Error(ErrorCode::DivByZeroInterval, "rational with zero denominator");
  Interval r(precision);
  mpq_t q;
  mpq_init(q);
  mpq_set_si(q, num, 1);
  mpz_set_si(mpq_denref(q), den);
  mpq_canonicalize(q);
  mpfr_set_q(r.lo_, q, MPFR_RNDD);
  mpfr_set_q(r.hi_, q, MPFR_RNDU);
  mpq_clear(q);
  return r;
}

Interval Interval::rational(const mpq_t q, int precision) {
  Interval r(precision);
  mpfr_set_q(r.lo_, q, MPFR_RNDD);
  mpfr_set_q(r.hi_, q, MPFR_RNDU);
  return r;
}

Interval Interval::dyadic(long mantissa, long exp2, int precision) {
  Interval r(mantissa, precision);
  mpfr_mul_2si(r.lo_, r.lo_, exp2, MPFR_RNDD);
  mpfr_mul_2si(r.hi_, r.hi_, exp2, MPFR_RNDU);
  return r;
}

Interval Interval::decimal(std::string_view text, int precision) {
  return from_strings(text, text, precision);
}

Interval Interval::from_strings(std::string_view lo, std::string_view hi, int precision) {
  Interval r(precision);
  const std::string l(lo), h(hi);
  if (mpfr_set_str(r.lo_, l.c_str(), 0, MPFR_RNDD) != 0 ||
      mpfr_set_str(r.hi_, h.c_str(), 0, MPFR_RNDU) != 0) {
    throw Error(ErrorCode::ParseError, "not a decimal number: '" + l + "', '" + h + "'");
  }
  r.check_order();
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

void Interval::check_order() const {
  if (mpfr_nan_p(lo_) || mpfr_nan_p(hi_) || mpfr_greater_p(lo_, hi_)) {
    throw Error(ErrorCode::DomainViolation, "interval endpoints out of order");
  }
}

double Interval::width() const {
  Scratch t(precision());
  mpfr_sub(t.v, hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(t.v, MPFR_RNDU);
}

double Interval::magnitude() const {
  return std::max(std::fabs(mpfr_get_d(lo_, MPFR_RNDD)), std::fabs(mpfr_get_d(hi_, MPFR_RNDU)));
}

bool Interval::contains(const Interval& inner) const {
  return mpfr_lessequal_p(lo_, inner.lo_) && mpfr_lessequal_p(inner.hi_, hi_);
}

bool Interval::contains(long value) const {
  return mpfr_cmp_si(lo_, value) <= 0 && mpfr_cmp_si(hi_, value) >= 0;
}

bool Interval::contains(const mpq_t q) const {
  return mpfr_cmp_q(lo_, q) <= 0 && mpfr_cmp_q(hi_, q) >= 0;
}

bool Interval::overlaps(const Interval& other) const {
  return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
}

bool Interval::identical(const Interval& other) const {
  return precision() == other.precision() && mpfr_equal_p(lo_, other.lo_) &&
         mpfr_equal_p(hi_, other.hi_);
}

Interval Interval::midpoint() const {
  Interval r(precision());
  mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
  mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
  return r;
}

Interval Interval::lower_point() const {
  Interval r(precision());
  mpfr_set(r.lo_, lo_, MPFR_RNDD);
  mpfr_set(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::upper_point() const {
  Interval r(precision());
  mpfr_set(r.lo_, hi_, MPFR_RNDD);
  mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::with_precision(int precision) const {
  Interval r(precision);
  mpfr_set(r.lo_, lo_, MPFR_RNDD);
  mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

std::string Interval::lo_string(int digits) const {
  if (digits <= 0) digits = std::min(decimal_digits_for(precision()), 40);
  return render(lo_, MPFR_RNDD, digits);
}

std::string Interval::hi_string(int digits) const {
  if (digits <= 0) digits = std::min(decimal_digits_for(precision()), 40);
  return render(hi_, MPFR_RNDU, digits);
}

std::string Interval::to_string(int digits) const {
  return "[" + lo_string(digits) + ", " + hi_string(digits) + "] @" +
         std::to_string(precision()) + "bits";
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.precision());
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.lo_) >= 0) {
    mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  } else {
    four_corner(r.lo_, r.hi_, a, b, mpfr_mul);
  }
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) {
    throw Error(ErrorCode::DivByZeroInterval, "divisor " + b.to_string(12) + " contains 0");
  }
  Interval r(std::max(a.precision(), b.precision()));
  if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.lo_) > 0) {
    mpfr_div(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_div(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  } else {
    four_corner(r.lo_, r.hi_, a, b, mpfr_div);
  }
  return r;
}

Interval operator+(const Interval& a, long b) {
  Interval r(a.precision());
  mpfr_add_si(r.lo_, a.lo_, b, MPFR_RNDD);
  mpfr_add_si(r.hi_, a.hi_, b, MPFR_RNDU);
  return r;
}

Interval operator-(long a, const Interval& b) {
  Interval r(b.precision());
  mpfr_si_sub(r.lo_, a, b.hi_, MPFR_RNDD);
  mpfr_si_sub(r.hi_, a, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, long b) {
  Interval r(a.precision());
  if (b >= 0) {
    mpfr_mul_si(r.lo_, a.lo_, b, MPFR_RNDD);
    mpfr_mul_si(r.hi_, a.hi_, b, MPFR_RNDU);
  } else {
    mpfr_mul_si(r.lo_, a.hi_, b, MPFR_RNDD);
    mpfr_mul_si(r.hi_, a.lo_, b, MPFR_RNDU);
  }
  return r;
}

Interval operator/(const Interval& a, long b) {
  if (b == 0) throw Error(ErrorCode::DivByZeroInterval, "division by integer 0");
  Interval r(a.precision());
  if (b > 0) {
    mpfr_div_si(r.lo_, a.lo_, b, MPFR_RNDD);
    mpfr_div_si(r.hi_, a.hi_, b, MPFR_RNDU);
  } else {
    mpfr_div_si(r.lo_, a.hi_, b, MPFR_RNDD);
    mpfr_div_si(r.hi_, a.lo_, b, MPFR_RNDU);
  }
  return r;
}

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.lo_) < 0) {
    throw Error(ErrorCode::NegativeSqrt, "sqrt of " + a.to_string(12));
  }
  Interval r(a.precision());
  mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval square(const Interval& a) {
  Interval r(a.precision());
  if (mpfr_sgn(a.lo_) >= 0) {
    mpfr_sqr(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_sqr(r.hi_, a.hi_, MPFR_RNDU);
  } else if (mpfr_sgn(a.hi_) <= 0) {
    mpfr_sqr(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_sqr(r.hi_, a.lo_, MPFR_RNDU);
  } else {
    mpfr_set_zero(r.lo_, 1);
    Scratch t(a.precision());
    mpfr_sqr(r.hi_, a.lo_, MPFR_RNDU);
    mpfr_sqr(t.v, a.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t.v, MPFR_RNDU);
  }
  return r;
}

Interval abs(const Interval& a) {
  if (mpfr_sgn(a.lo_) >= 0) return a;
  if (mpfr_sgn(a.hi_) <= 0) return -a;
  Interval r(a.precision());
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval scale2(const Interval& a, long exp2) {
  Interval r(a.precision());
  mpfr_mul_2si(r.lo_, a.lo_, exp2, MPFR_RNDD);
  mpfr_mul_2si(r.hi_, a.hi_, exp2, MPFR_RNDU);
  return r;
}

Interval intersect(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  r.check_order();
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval min(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Verdict compare_certain(const Interval& a, const Interval& b) {
  if (mpfr_less_p(a.hi(), b.lo())) return Verdict::CertainlyLess;
  if (mpfr_greater_p(a.lo(), b.hi())) return Verdict::CertainlyGreater;
  return Verdict::Overlap;
}

}  // namespace polypi
