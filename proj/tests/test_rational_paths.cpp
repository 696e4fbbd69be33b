#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "polypi/oracle.hpp"
#include "polypi/rational_paths.hpp"
#include "polypi/regular_polygons.hpp"
#include "support.hpp"

using namespace polypi;
using polypi::test::agree;
using polypi::test::code_of;
using polypi::test::inside;

namespace {

constexpr int P = 160;

Interval chord_for(long k, long N) { return 2L * oracle::sin(oracle::pi(P) * k / N); }

bool same_point(const CirclePoint& a, const CirclePoint& b) { return overlaps(a, b) && a.width() < 1e-30; }

}  // namespace

TEST_CASE("realized lengths") {
  const RationalLength hex = realize_rational(1, 6, P);
  CHECK(agree(hex.chord, Interval(1, P)));
  CHECK(hex.numerator() == 6);
  CHECK(hex.denominator() == 1);

  const RationalLength star = realize_rational(2, 5, P);
  CHECK(agree(star.chord, chord_for(2, 5)));
  CHECK(inside(star.chord, "1.90211303", "1.90211304"));
  CHECK(star.numerator() == 5);
  CHECK(star.denominator() == 2);

  CHECK(agree(realize_rational(1, 4, P).chord, sqrt(Interval(2, P))));
  for (long N = 3; N <= 17; ++N)
    for (long k = 1; 2 * k < N; ++k)
      if (std::gcd(k, N) == 1) CHECK(agree(realize_rational(k, N, P).chord, chord_for(k, N)));
}

TEST_CASE("invalid pairs") {
  CHECK(code_of([] { return realize_rational(2, 6, P); }) == ErrorCode::NonCoprime);
  CHECK(code_of([] { return realize_rational(3, 5, P); }) == ErrorCode::ChordTooLong);
  CHECK(code_of([] { return realize_rational(1, 2, P); }) == ErrorCode::PreconditionViolation);
  CHECK(code_of([] { return realize_rational(0, 7, P); }) == ErrorCode::PreconditionViolation);
}

TEST_CASE("stepping paths") {
  const RationalLength hex = realize_rational(1, 6, P);
  const auto hp = gamma_path(hex);
  REQUIRE(hp.size() == 6);
  CHECK(agree(hp[1].x(), Interval::rational(1, 2, P)));
  CHECK(agree(hp[3].x(), Interval(-1, P)));

  const auto tri = gamma_path(realize_rational(1, 3, P));
  REQUIRE(tri.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(agree(distance(tri[i], tri[(i + 1) % 3]), sqrt(Interval(3, P))));
  CHECK(winding_count(tri) == 1);
}

TEST_CASE("the (2, 5) path is the pentagram") {
  const auto star = gamma_path(realize_rational(2, 5, P));
  const auto pent = gamma_path(realize_rational(1, 5, P));
  REQUIRE(star.size() == 5);
  // star visits pentagon vertices 1 -> 3 -> 5 -> 2 -> 4
  const int order[] = {0, 2, 4, 1, 3};
  for (int i = 0; i < 5; ++i) CHECK(same_point(star[i], pent[order[i]]));
  CHECK(winding_count(star) == 2);
}

TEST_CASE("property: every path visits the vertices of the regular N-gon") {
  for (long N = 5; N <= 19; N += 2) {
    const auto base = gamma_path(realize_rational(1, N, P));
    for (long k = 2; 2 * k < N; ++k) {
      if (std::gcd(k, N) != 1) continue;
      const auto path = gamma_path(realize_rational(k, N, P));
      REQUIRE(path.size() == static_cast<std::size_t>(N));
      std::vector<bool> seen(N, false);
      for (long i = 0; i < N; ++i) {
        const long v = (i * k) % N;
        CHECK(same_point(path[i], base[v]));
        seen[v] = true;
      }
      CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
      CHECK(winding_count(path) == k);
    }
  }
}

TEST_CASE("normalized comparisons") {
  const RationalLength sq = realize_rational(1, 4, P), hex = realize_rational(1, 6, P);
  const CompareResult in = normalized_compare(sq, hex, LengthMode::Inscribed);
  CHECK(in.verdict == Verdict::CertainlyLess);
  CHECK(agree(in.lhs, 4L * sqrt(Interval(2, P))));
  CHECK(agree(in.rhs, Interval(6, P)));

  const CompareResult circ = normalized_compare(hex, sq, LengthMode::Circumscribed);
  CHECK(circ.verdict == Verdict::CertainlyGreater);
  CHECK(agree(circ.lhs, Interval(8, P)));
  CHECK(agree(circ.rhs, 4L * sqrt(Interval(3, P))));

  const CompareResult star = normalized_compare(realize_rational(2, 5, P), realize_rational(1, 3, P),
                                                LengthMode::Inscribed);
  CHECK(star.verdict == Verdict::CertainlyLess);
  CHECK(inside(star.lhs, "4.755282", "4.755283"));
  CHECK(agree(star.rhs, 3L * sqrt(Interval(3, P))));

  CHECK(code_of([&] { return normalized_compare(hex, hex, LengthMode::Inscribed); }) ==
        ErrorCode::HypothesisUnordered);
}

TEST_CASE("sweep up to 24") {
  const SweepReport r = rational_sweep(24, P, 1);
  CHECK(r.ordered);
  long pairs = 0;
  for (long N = 3; N <= 24; ++N)
    for (long k = 1; 2 * k < N; ++k) pairs += std::gcd(k, N) == 1;
  CHECK(static_cast<long>(r.rows.size()) == pairs);
  CHECK(r.inscribed.size() == r.rows.size() - 1);
  const Interval two_pi = 2L * oracle::pi(P);
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    CHECK(r.rows[i].winding_checked);
    CHECK(compare_certain(r.rows[i].normalized_in, two_pi) == Verdict::CertainlyLess);
    CHECK(compare_certain(two_pi, r.rows[i].normalized_circ) == Verdict::CertainlyLess);
    if (i > 0) CHECK(compare_certain(r.rows[i].length.chord, r.rows[i - 1].length.chord) == Verdict::CertainlyLess);
  }
  for (const auto& c : r.inscribed) CHECK(c.verdict == Verdict::CertainlyLess);
  for (const auto& c : r.circumscribed) CHECK(c.verdict == Verdict::CertainlyGreater);

  const SweepReport par = rational_sweep(24, P, 0);
  REQUIRE(par.rows.size() == r.rows.size());
  for (std::size_t i = 0; i < r.rows.size(); ++i) CHECK(par.rows[i].length.chord.identical(r.rows[i].length.chord));
}
