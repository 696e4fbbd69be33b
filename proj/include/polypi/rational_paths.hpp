#pragma once

#include <vector>

#include "polypi/chord_laws.hpp"
#include "polypi/circuits.hpp"
#include "polypi/interval.hpp"

namespace polypi {

/// Chord spanning k steps of the regular N-gon, gcd(k, N) = 1. Its stepping
/// path closes after N steps (the numerator) having wound k times around the
/// centre (the denominator).
struct RationalLength {
  long k = 1;
  long N = 3;
  Interval edge;   ///< N-gon edge
  Interval chord;  ///< |P_1 P_{k+1}| on the N-gon

  long numerator() const { return N; }
  long denominator() const { return k; }
};

/// Builds the N-gon from (1, 0) by solving its edge, reads off the k-step
/// chord and checks the closed stepping path (closure and winding k).
/// Raises the precision when the winding check is undecided.
RationalLength realize_rational(long k, long N, int precision = kDefaultPrecision);

/// The N vertices of the stepping path by `chord` from (1, 0). Throws
/// ClosureFailure when step N certainly misses the start or the path winds
/// other than k times.
std::vector<CirclePoint> gamma_path(const RationalLength& r);

enum class LengthMode { Inscribed, Circumscribed };

/// With l the longer chord and s the shorter: inscribed compares
/// (N/D)(l) * l with (N/D)(s) * s (expected CertainlyLess); circumscribed
/// uses the tangent edges and is expected CertainlyGreater. lhs belongs to l.
CompareResult normalized_compare(const RationalLength& a, const RationalLength& b, LengthMode mode);

/// (N / k) * chord, or (N / k) * circumscribed_edge(chord).
Interval normalized_length(const RationalLength& r, LengthMode mode);

struct SweepRow {
  RationalLength length;
  Interval normalized_in;
  Interval normalized_circ;
  bool winding_checked = false;
};

struct SweepReport {
  std::vector<SweepRow> rows;                 ///< longest chord first
  std::vector<CompareResult> inscribed;       ///< rows[i] against rows[i + 1]
  std::vector<CompareResult> circumscribed;
  bool ordered = false;
};

/// Every coprime (k, N) with 3 <= N <= max_n and 2k < N. jobs = 1 runs
/// serially; 0 uses the OpenMP default.
SweepReport rational_sweep(long max_n, int precision = kDefaultPrecision, int jobs = 1);

}  // namespace polypi
