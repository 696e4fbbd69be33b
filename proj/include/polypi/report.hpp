#pragma once

#include <json.hpp>

#include "polypi/circuits.hpp"
#include "polypi/rational_paths.hpp"
#include "polypi/regular_polygons.hpp"
#include "polypi/suites.hpp"

// JSON shapes of the reports; docs/report_schemas.md describes each field.
namespace polypi::report {

using nlohmann::ordered_json;

ordered_json interval_pair(const Interval& x);

/// {n, m, precision, p_lo, p_hi, P_lo, P_hi, a_lo, a_hi, A_lo, A_hi, h_hi}
ordered_json scheme_row(const RegularScheme& s, int precision, const SchemeMeasures& m);

/// {suite, sample_seed, arc_chord, m, n, lhs, rhs, verdict, precision_used, check, status[, detail]}
ordered_json suite_row(const std::string& suite, const SuiteRow& row);

/// {k, N, chord_lo, chord_hi, normalized_lo, normalized_hi, winding_checked}
ordered_json sweep_row(const SweepRow& row);

/// {precision, points: [[[x_lo, x_hi], [y_lo, y_hi]], ...], measures: {...}}
ordered_json circuit_fixture(const Circuit& c, const CircuitMeasures& m);
/// Rebuilds the circuit stored by circuit_fixture (points are re-validated).
Circuit circuit_from_fixture(const ordered_json& j);

}  // namespace polypi::report
