#include "polypi/report.hpp"

namespace polypi::report {

namespace {

// Exact binary endpoints: round-tripping a fixture must reproduce it.
std::string exact(mpfr_srcptr x) {
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 16, 0, x, MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  if (mpfr_zero_p(x)) return "0";
  const bool neg = digits.front() == '-';
  if (neg) digits.erase(0, 1);
  // 0.d1d2... * 16^e  ->  0xd1.d2... p(4(e-1))
  std::string out = neg ? "-0x" : "0x";
  out += digits.substr(0, 1) + "." + digits.substr(1) + "p" + std::to_string(4 * (static_cast<long>(e) - 1));
  return out;
}

}  // namespace

ordered_json interval_pair(const Interval& x) { return ordered_json::array({x.lo_string(), x.hi_string()}); }

ordered_json scheme_row(const RegularScheme& s, int precision, const SchemeMeasures& m) {
  ordered_json j;
  j["n"] = s.n;
  j["m"] = s.m;
  j["precision"] = precision;
  j["p_lo"] = m.p.lo_string();
  j["p_hi"] = m.p.hi_string();
  j["P_lo"] = m.P.lo_string();
  j["P_hi"] = m.P.hi_string();
  j["a_lo"] = m.a.lo_string();
  j["a_hi"] = m.a.hi_string();
  j["A_lo"] = m.A.lo_string();
  j["A_hi"] = m.A.hi_string();
  j["h_hi"] = m.h.hi_string();
  return j;
}

ordered_json suite_row(const std::string& suite, const SuiteRow& row) {
  ordered_json j;
  j["suite"] = suite;
  j["sample_seed"] = row.sample_seed;
  j["arc_chord"] = row.arc_chord ? ordered_json(row.arc_chord->to_string()) : ordered_json(nullptr);
  j["m"] = row.m;
  j["n"] = row.n;
  j["lhs"] = row.lhs.to_string();
  j["rhs"] = row.rhs.to_string();
  j["verdict"] = to_string(row.verdict);
  j["precision_used"] = row.precision_used;
  j["check"] = row.check;
  j["status"] = to_string(row.status);
  if (!row.detail.empty()) j["detail"] = row.detail;
  return j;
}

ordered_json sweep_row(const SweepRow& row) {
  ordered_json j;
  j["k"] = row.length.k;
  j["N"] = row.length.N;
  j["chord_lo"] = row.length.chord.lo_string();
  j["chord_hi"] = row.length.chord.hi_string();
  j["normalized_lo"] = row.normalized_in.lo_string();
  j["normalized_hi"] = row.normalized_in.hi_string();
  j["winding_checked"] = row.winding_checked;
  return j;
}

ordered_json circuit_fixture(const Circuit& c, const CircuitMeasures& m) {
  ordered_json j;
  j["precision"] = c.precision();
  ordered_json pts = ordered_json::array();
  for (const auto& p : c.points()) {
    pts.push_back(ordered_json::array({ordered_json::array({exact(p.x().lo()), exact(p.x().hi())}),
                                       ordered_json::array({exact(p.y().lo()), exact(p.y().hi())})}));
  }
  j["points"] = pts;
  ordered_json ms;
  ms["perimeter_in"] = interval_pair(m.perimeter_in);
  ms["perimeter_circ"] = interval_pair(m.perimeter_circ);
  ms["area_in"] = interval_pair(m.area_in);
  ms["area_circ"] = interval_pair(m.area_circ);
  ms["mesh"] = interval_pair(m.mesh);
  ms["min_edge"] = interval_pair(m.min_edge);
  j["measures"] = ms;
  return j;
}

Circuit circuit_from_fixture(const ordered_json& j) {
  const int precision = j.at("precision").get<int>();
  std::vector<CirclePoint> pts;
  for (const auto& p : j.at("points")) {
    pts.emplace_back(Interval::from_strings(p.at(0).at(0).get<std::string>(), p.at(0).at(1).get<std::string>(), precision),
                     Interval::from_strings(p.at(1).at(0).get<std::string>(), p.at(1).at(1).get<std::string>(), precision));
  }
  return Circuit(std::move(pts));
}

}  // namespace polypi::report
