#include "polypi/trig_geometry.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "polypi/regular_polygons.hpp"

namespace polypi {

namespace {

constexpr int kGuardBits = 16;

void require_fraction(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::FractionOutOfRange, what);
}

Interval fraction_interval(const mpz_class& j, int m, int precision) {
  mpz_class den = 3;
  den <<= m;
  mpq_class q(j, den);
  q.canonicalize();
  return Interval::rational(q.get_mpq_t(), precision);
}

// Rotations by one edge of the 3 * 2^d-gon for d = 0, 1, ...
class TriangleRotations {
 public:
  explicit TriangleRotations(int precision) : edge_(seed_edge(3, precision)) {}

  const std::pair<Interval, Interval>& at(int d) {
    while (static_cast<int>(rot_.size()) <= d) {
      if (!rot_.empty()) edge_ = halve_edge(edge_);
      edges_.push_back(edge_);
      rot_.push_back(chord_rotation(edge_));
    }
    return rot_[d];
  }
  const Interval& edge(int d) {
    at(d);
    return edges_[d];
  }

 private:
  Interval edge_;
  std::vector<Interval> edges_;
  std::vector<std::pair<Interval, Interval>> rot_;
};

CirclePoint vertex_at(const mpz_class& j, int m, TriangleRotations& rot, int precision) {
  const mpz_class q = j >> m;
  CirclePoint p = CirclePoint::origin_ray(precision);
  for (unsigned long i = 0; i < q.get_ui(); ++i) {
    const auto& [c, s] = rot.at(0);
    p = rotate(p, c, s);
  }
  for (int bit = 0; bit < m; ++bit) {
    if (mpz_tstbit(j.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
      const auto& [c, s] = rot.at(m - bit);
      p = rotate(p, c, s);
    }
  }
  return p;
}

}  // namespace

Interval two_pi(int precision) {
  thread_local std::map<int, Interval> cache;
  auto it = cache.find(precision);
  if (it != cache.end()) return it->second;
  const int wp = precision + kGuardBits;
  const SchemeMeasures s = scheme_measures(RegularScheme{6, wp / 2 + 2}, wp);
  Interval r = Interval::hull(s.p, s.P).with_precision(precision);
  cache.emplace(precision, r);
  return r;
}

ArcMeasure arc_measure(long k, long n, int precision) {
  require_fraction(n > 0 && k >= 0 && k < n,
                   "fraction " + std::to_string(k) + "/" + std::to_string(n) + " is outside [0, 1)");
  ArcMeasure a;
  a.fraction = Interval::rational(k, n, precision);
  a.theta = two_pi(precision) * k / n;
  a.sector_area = scale2(a.theta, -1);
  return a;
}

Interval vertex_theta(const Interval& fraction, int m, bool ceiling, int precision) {
  require_fraction(m >= 0, "negative depth");
  mpfr_t scaled;
  mpfr_init2(scaled, fraction.precision() + 4);
  mpfr_mul_ui(scaled, ceiling ? fraction.hi() : fraction.lo(), 3, MPFR_RNDN);  // exact
  mpfr_mul_2si(scaled, scaled, m, MPFR_RNDN);
  mpz_class j;
  mpfr_get_z(j.get_mpz_t(), scaled, ceiling ? MPFR_RNDU : MPFR_RNDD);
  mpfr_clear(scaled);
  return two_pi(precision) * fraction_interval(j, m, precision);
}

ArcMeasure arc_measure(const Interval& fraction, int precision) {
  require_fraction(mpfr_sgn(fraction.lo()) >= 0 &&
                       compare_certain(fraction, Interval(1, precision)) == Verdict::CertainlyLess,
                   "fraction " + fraction.to_string(12) + " is not certainly inside [0, 1)");
  const int m = precision + 2;
  ArcMeasure a;
  a.fraction = fraction;
  a.theta = Interval::hull(vertex_theta(fraction, m, false, precision),
                           vertex_theta(fraction, m, true, precision));
  a.sector_area = scale2(a.theta, -1);
  return a;
}

CirclePoint vertex_point(std::uint64_t j, int m, int precision) {
  if (m < 0 || m > 60 || j >= (std::uint64_t{3} << m)) {
    throw Error(ErrorCode::PreconditionViolation, "vertex index out of range");
  }
  TriangleRotations rot(precision);
  return vertex_at(mpz_class(static_cast<unsigned long>(j)), m, rot, precision);
}

CirclePoint geometric_point(const Interval& theta, int precision) {
  if (theta.certainly_negative()) return geometric_point(-theta, precision).reflected();
  if (mpfr_sgn(theta.lo()) < 0) {
    throw Error(ErrorCode::ThetaOutOfRange, "theta " + theta.to_string(12) + " straddles 0");
  }
  const int wp = precision + kGuardBits;
  const Interval tp = two_pi(wp);
  if (compare_certain(theta, tp) != Verdict::CertainlyLess) {
    throw Error(ErrorCode::ThetaOutOfRange, "theta " + theta.to_string(12) + " is not below 2 pi");
  }
  const Interval tol = scale2(Interval(1, wp), 8 - precision);
  TriangleRotations rot(wp);
  mpz_class lo = 0, hi = 3;
  int m = 0;
  int stuck = 0;
  auto theta_at = [&](const mpz_class& j) { return tp * fraction_interval(j, m, wp); };
  for (;; ++m) {
    if (m > 0) {
      lo <<= 1;
      hi <<= 1;
    }
    bool narrowed = true;
    while (narrowed && hi - lo > 1) {
      narrowed = false;
      const mpz_class mid = (lo + hi) / 2;
      for (const mpz_class& c : {mid, mpz_class(lo + 1), mpz_class(hi - 1)}) {
        const Verdict v = compare_certain(theta_at(c), theta);
        if (v == Verdict::CertainlyLess) {
          lo = c;
        } else if (v == Verdict::CertainlyGreater) {
          hi = c;
        } else {
          continue;
        }
        narrowed = true;
        break;
      }
    }
    const mpz_class gap = hi - lo;
    // Once theta's own width dominates the grid, the bracket stops shrinking.
    stuck = gap > 2 ? stuck + 1 : 0;
    if (stuck > 3) {
      throw Error(ErrorCode::BisectionStall,
                  "theta " + theta.to_string(12) + " is too wide for " + std::to_string(precision) + " bits");
    }
    // chord of the bracket arc <= gap * edge
    if (compare_certain(rot.edge(m) * gap.get_si(), tol) == Verdict::CertainlyLess) break;
  }

  const CirclePoint a = vertex_at(lo, m, rot, wp);
  const CirclePoint b = vertex_at(hi, m, rot, wp);
  Interval x = Interval::hull(a.x(), b.x());
  Interval y = Interval::hull(a.y(), b.y());
  // The arc between the bracket vertices reaches an axis extreme when it
  // passes a quarter turn.
  if (m >= 2) {
    const mpz_class quarter = mpz_class(3) << (m - 2);
    for (int q = 1; q <= 4; ++q) {
      const mpz_class at = quarter * q;
      if (!(lo < at && at < hi)) continue;
      if (q == 1) y = Interval::hull(y, Interval(1, wp));
      if (q == 2) x = Interval::hull(x, Interval(-1, wp));
      if (q == 3) y = Interval::hull(y, Interval(-1, wp));
      if (q == 4) x = Interval::hull(x, Interval(1, wp));
    }
  }
  return CirclePoint(x.with_precision(precision), y.with_precision(precision));
}

SandwichReport sandwich_report(const Interval& theta, int precision) {
  const Interval quarter = scale2(two_pi(precision), -2);
  if (!theta.certainly_positive() || compare_certain(theta, quarter) != Verdict::CertainlyLess) {
    throw Error(ErrorCode::ThetaOutOfRange, "theta " + theta.to_string(12) + " is not inside (0, pi/2)");
  }
  const CirclePoint p = geometric_point(theta, precision);
  SandwichReport r;
  r.theta = theta;
  r.sin = p.y();
  r.cos = p.x();
  r.mid = theta / r.sin;
  r.upper = Interval(1, precision) / r.cos;
  r.lower_verdict = compare_certain(Interval(1, precision), r.mid);
  r.upper_verdict = compare_certain(r.mid, r.upper);
  if (theta.upper() <= 0.5) r.square_verdict = compare_certain(r.mid - 1L, square(theta));
  return r;
}

}  // namespace polypi
