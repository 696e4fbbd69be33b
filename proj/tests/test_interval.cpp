#include <doctest.h>
#include <gmpxx.h>

#include <cmath>
#include <random>

#include "polypi/interval.hpp"
#include "support.hpp"

using namespace polypi;
using polypi::test::code_of;
using polypi::test::dec;
using polypi::test::inside;

namespace {

Interval q(const mpq_class& x, int prec) { return Interval::rational(x.get_mpq_t(), prec); }

Interval span(long lo, long hi, int prec = 64) { return Interval::hull(Interval(lo, prec), Interval(hi, prec)); }

bool same(const Interval& x, long lo, long hi) {
  return mpfr_cmp_si(x.lo(), lo) == 0 && mpfr_cmp_si(x.hi(), hi) == 0;
}

}  // namespace

TEST_CASE("arithmetic on exact endpoints") {
  CHECK(same(span(1, 2) + span(3, 4), 4, 6));
  CHECK(same(span(-1, 2) * span(3, 4), -4, 8));
  CHECK(same(span(1, 2) - span(3, 4), -3, -1));
  CHECK(same(-span(1, 2), -2, -1));
  CHECK(same(span(-3, -2) * span(-5, 4), -12, 15));
}

TEST_CASE("division rounds outward within the precision") {
  const Interval third = Interval(1, 53) / Interval(3, 53);
  mpq_class exact(1, 3);
  CHECK(third.contains(exact.get_mpq_t()));
  CHECK(third.width() <= std::ldexp(1.0, -51));
  CHECK(code_of([] { return span(1, 1) / span(-1, 1); }) == ErrorCode::DivByZeroInterval);
}

TEST_CASE("square roots") {
  CHECK(same(sqrt(Interval(4, 64)), 2, 2));
  CHECK(same(sqrt(Interval(0, 64)), 0, 0));
  const Interval r2 = sqrt(Interval(2, 64));
  CHECK(inside(r2, "1.41421356237", "1.41421356238"));
  CHECK(r2.width() <= std::ldexp(1.0, -62) * 2);
  CHECK(code_of([] { return sqrt(span(-1, 4)); }) == ErrorCode::NegativeSqrt);
}

TEST_CASE("three-valued comparison") {
  CHECK(compare_certain(span(1, 2), span(3, 4)) == Verdict::CertainlyLess);
  CHECK(compare_certain(span(1, 3), span(2, 4)) == Verdict::Overlap);
  CHECK(compare_certain(span(5, 6), span(1, 2)) == Verdict::CertainlyGreater);
  CHECK(compare_certain(span(1, 2), span(2, 3)) == Verdict::Overlap);
}

TEST_CASE("decimal rendering rounds outward") {
  const Interval third = Interval(1, 128) / Interval(3, 128);
  CHECK(third.to_string(8) == "[0.33333333, 0.33333334] @128bits");
  const Interval back = Interval::from_strings(third.lo_string(), third.hi_string(), 256);
  CHECK(back.contains(third));
  const Interval neg = -third;
  CHECK(Interval::from_strings(neg.lo_string(5), neg.hi_string(5), 256).contains(neg));
  CHECK(Interval(0, 64).to_string() == "[0, 0] @64bits");
}

TEST_CASE("decimal literals are enclosed") {
  const Interval tenth = dec("0.1", 80);
  mpq_class exact(1, 10);
  CHECK(tenth.contains(exact.get_mpq_t()));
  CHECK_FALSE(tenth.is_point());
  CHECK(code_of([] { return dec("zero"); }) == ErrorCode::ParseError);
}

TEST_CASE("scale2 is exact and precision is the larger operand's") {
  CHECK(same(scale2(span(3, 5), 3), 24, 40));
  CHECK((Interval(1, 64) + Interval(1, 200)).precision() == 200);
  CHECK(Interval(1, 64).with_precision(32).precision() == 32);
}

TEST_CASE("copies and moves keep the value") {
  Interval a = sqrt(Interval(2, 100));
  Interval b = a;
  Interval c = std::move(a);
  CHECK(b.identical(c));
  a = c;
  CHECK(a.identical(b));
}

TEST_CASE("property: every operation contains the exact rational result") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97), frac(0, 1000);
  std::uniform_int_distribution<int> prec(24, 160);
  auto pick = [&](const mpq_class& lo, const mpq_class& hi) -> mpq_class { return lo + (hi - lo) * mpq_class(frac(rng), 1000); };
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const int p = prec(rng);
    mpq_class a0(num(rng), den(rng)), a1(num(rng), den(rng)), b0(num(rng), den(rng)), b1(num(rng), den(rng));
    a0.canonicalize();
    a1.canonicalize();
    b0.canonicalize();
    b1.canonicalize();
    if (a0 > a1) std::swap(a0, a1);
    if (b0 > b1) std::swap(b0, b1);
    const Interval a = Interval::hull(q(a0, p), q(a1, p));
    const Interval b = Interval::hull(q(b0, p), q(b1, p));
    const mpq_class x = pick(a0, a1), y = pick(b0, b1);
    mpq_class r;
    r = x + y;
    CHECK((a + b).contains(r.get_mpq_t()));
    r = x - y;
    CHECK((a - b).contains(r.get_mpq_t()));
    r = x * y;
    CHECK((a * b).contains(r.get_mpq_t()));
    if (!b.contains_zero()) {
      r = x / y;
      CHECK((a / b).contains(r.get_mpq_t()));
    }
    r = x * x;
    CHECK(square(a).contains(r.get_mpq_t()));
    ++checked;
  }
  CHECK(checked == 10000);
}

TEST_CASE("property: sqrt of a*a contains a for a >= 0") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(0, 100000), den(1, 9973);
  for (int i = 0; i < 2000; ++i) {
    const int p = 32 + i % 200;
    Interval a = Interval::hull(Interval::rational(num(rng), den(rng), p), Interval::rational(num(rng), den(rng), p));
    CHECK(sqrt(a * a).contains(a));
  }
}

TEST_CASE("property: doubling the precision refines a derived value") {
  auto derived = [](int p) {
    const Interval three(3, p);
    return sqrt(Interval(2, p) + sqrt(three)) / 7L - Interval::rational(1, 3, p) * sqrt(Interval(5, p));
  };
  for (int p : {32, 64, 100, 256, 1000}) CHECK(derived(p).contains(derived(2 * p)));
}
