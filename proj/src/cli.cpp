#include "polypi/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "polypi/regular_polygons.hpp"
#include "polypi/report.hpp"
#include "polypi/suites.hpp"
#include "polypi/trig_geometry.hpp"

namespace polypi::cli {

namespace {

using report::ordered_json;

int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    throw CLI::ValidationError(name, std::string("not an integer: ") + v);
  }
}

struct Options {
  int n = 6;
  int m = 4;
  int m_to = -1;
  int precision = kDefaultPrecision;
  int count = 10;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  int jobs = 0;
  bool serial = false;
  std::string mesh_cap = "0.5";
  int k = 8;
  int levels = 16;
  long max_n = 24;
  std::vector<std::string> thetas;
  std::string format = "text";
  std::string output;
  std::string suite;
};

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InconclusivePrecision:
    case ErrorCode::BisectionStall:
    case ErrorCode::IterationCapExceeded:
      return kInconclusive;
    case ErrorCode::UnsupportedSeed:
    case ErrorCode::PreconditionViolation:
    case ErrorCode::ParseError:
    case ErrorCode::FractionOutOfRange:
    case ErrorCode::ThetaOutOfRange:
    case ErrorCode::NonCoprime:
    case ErrorCode::ChordTooLong:
    case ErrorCode::InvalidChord:
    case ErrorCode::DomainViolation:
      return kUsage;
    default:
      return kViolation;
  }
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string s;
  for (const auto& c : cells) s += (s.empty() ? "" : ",") + c;
  return s + "\n";
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const int last = o.m_to >= 0 ? o.m_to : o.m;
  if (last < o.m) throw Error(ErrorCode::PreconditionViolation, "--m-to must be >= --m");
  if (o.format == "csv") out << "n,m,precision,pi_lo,pi_hi,p_lo,p_hi,P_lo,P_hi,a_lo,a_hi,A_lo,A_hi,h_hi\n";
  for (int m = o.m; m <= last; ++m) {
    const RegularScheme s{o.n, m};
    const SchemeMeasures ms = scheme_measures(s, o.precision);
    const Interval pi = pi_bounds(s, o.precision);
    if (o.format == "json") {
      ordered_json j = report::scheme_row(s, o.precision, ms);
      j["pi_lo"] = pi.lo_string();
      j["pi_hi"] = pi.hi_string();
      out << j.dump() << "\n";
    } else if (o.format == "csv") {
      out << csv_row({std::to_string(o.n), std::to_string(m), std::to_string(o.precision), pi.lo_string(),
                      pi.hi_string(), ms.p.lo_string(), ms.p.hi_string(), ms.P.lo_string(), ms.P.hi_string(),
                      ms.a.lo_string(), ms.a.hi_string(), ms.A.lo_string(), ms.A.hi_string(), ms.h.hi_string()});
    } else {
      out << "n=" << o.n << " m=" << m << " edges=" << s.edge_count() << " precision=" << o.precision << "\n"
          << "  pi  " << pi.to_string() << "\n"
          << "  p/2 " << scale2(ms.p, -1).to_string() << "\n"
          << "  P/2 " << scale2(ms.P, -1).to_string() << "\n"
          << "  a   " << ms.a.to_string() << "\n"
          << "  A   " << ms.A.to_string() << "\n"
          << "  h   " << ms.h.to_string() << "\n";
    }
  }
  return kOk;
}

int cmd_digits(const Options& o, std::ostream& out) {
  const DigitsResult r = pi_digits_certified(o.count);
  if (o.format == "json") {
    ordered_json j;
    j["count"] = o.count;
    j["digits"] = r.digits;
    j["n"] = r.scheme.n;
    j["m"] = r.scheme.m;
    j["precision"] = r.precision;
    j["attempts"] = r.attempts;
    out << j.dump() << "\n";
  } else {
    out << r.digits << "\n";
  }
  return kOk;
}

// Hexagon to 96-gon, checked against 223/71 < pi < 22/7.
int cmd_archimedes(const Options& o, std::ostream& out) {
  const int prec = o.precision;
  const Interval lower = Interval::rational(223, 71, prec);
  const Interval upper = Interval::rational(22, 7, prec);
  bool ok = true;
  if (o.format == "csv") out << "edges,p_half_lo,p_half_hi,P_half_lo,P_half_hi\n";
  for (int m = 0; m <= 4; ++m) {
    const RegularScheme s{6, m};
    const SchemeMeasures ms = scheme_measures(s, prec);
    const Interval lo = scale2(ms.p, -1), hi = scale2(ms.P, -1);
    if (o.format == "csv") {
      out << csv_row({std::to_string(s.edge_count()), lo.lo_string(), lo.hi_string(), hi.lo_string(), hi.hi_string()});
    } else if (o.format == "json") {
      ordered_json j = report::scheme_row(s, prec, ms);
      out << j.dump() << "\n";
    } else {
      out << std::setw(3) << s.edge_count() << "-gon  " << lo.to_string(10) << "  <  pi  <  " << hi.to_string(10)
          << "\n";
    }
    if (m == 4) {
      ok = compare_certain(lower, lo) == Verdict::CertainlyLess &&
           compare_certain(hi, upper) == Verdict::CertainlyLess;
    }
  }
  if (o.format == "text") out << "223/71 < p/2 and P/2 < 22/7 at 96 edges: " << (ok ? "certified" : "FAILED") << "\n";
  return ok ? kOk : kViolation;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (!is_suite(o.suite)) throw CLI::ValidationError("suite", "unknown suite '" + o.suite + "'");
  SuiteConfig cfg;
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.jobs = o.jobs;
  cfg.execution = o.serial ? Execution::Serial : Execution::Parallel;
  if (o.precision != kDefaultPrecision) cfg.precision = o.precision;
  const SuiteReport rep = run_suite(o.suite, cfg);
  if (o.format == "json") {
    for (const auto& r : rep.rows) out << report::suite_row(rep.suite, r).dump() << "\n";
  } else if (o.format == "csv") {
    out << "suite,sample_seed,check,m,n,verdict,status,precision_used\n";
    for (const auto& r : rep.rows) {
      out << csv_row({rep.suite, std::to_string(r.sample_seed), r.check, std::to_string(r.m), std::to_string(r.n),
                      std::string(to_string(r.verdict)), std::string(to_string(r.status)),
                      std::to_string(r.precision_used)});
    }
  } else {
    for (const auto& r : rep.rows) {
      if (r.status != RowStatus::Pass) {
        out << to_string(r.status) << ": " << r.check << " seed=" << r.sample_seed << " m=" << r.m << " n=" << r.n
            << " lhs=" << r.lhs.to_string(12) << " rhs=" << r.rhs.to_string(12)
            << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
      }
    }
    out << rep.suite << ": " << rep.rows.size() << " checks, " << rep.count(RowStatus::Pass) << " pass, "
        << rep.count(RowStatus::Violated) << " violated, " << rep.count(RowStatus::Inconclusive)
        << " inconclusive, " << rep.count(RowStatus::Error) << " errors\n";
  }
  switch (rep.overall()) {
    case RowStatus::Pass: return kOk;
    case RowStatus::Inconclusive:
      err << rep.suite << ": inconclusive at the precision cap\n";
      return kInconclusive;
    default:
      err << rep.suite << ": verification failed\n";
      return kViolation;
  }
}

int cmd_circuit(const Options& o, std::ostream& out) {
  const Interval cap = Interval::decimal(o.mesh_cap, o.precision);
  const Circuit c = random_circuit(o.k, cap, o.seed, o.precision);
  const CircuitMeasures m = circuit_measures(c);
  if (o.format == "json") {
    ordered_json j = report::circuit_fixture(c, m);
    j["k"] = o.k;
    j["mesh_cap"] = o.mesh_cap;
    j["seed"] = o.seed;
    out << j.dump() << "\n";
  } else if (o.format == "csv") {
    out << "index,x_lo,x_hi,y_lo,y_hi\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
      const CirclePoint& p = c.vertex(i);
      out << csv_row({std::to_string(i), p.x().lo_string(), p.x().hi_string(), p.y().lo_string(), p.y().hi_string()});
    }
  } else {
    const Interval tp = two_pi(o.precision);
    out << "points=" << c.size() << " mesh=" << m.mesh.to_string(12) << "\n"
        << "  perimeter_in   " << m.perimeter_in.to_string() << "\n"
        << "  2pi            " << tp.to_string() << "\n"
        << "  perimeter_circ " << m.perimeter_circ.to_string() << "\n"
        << "  area_in        " << m.area_in.to_string() << "\n"
        << "  area_circ      " << m.area_circ.to_string() << "\n";
  }
  return kOk;
}

int cmd_trig(const Options& o, std::ostream& out) {
  std::vector<Interval> thetas;
  for (const auto& t : o.thetas) thetas.push_back(Interval::decimal(t, o.precision));
  if (thetas.empty()) {
    for (int k = 1; k <= o.levels; ++k) thetas.push_back(Interval::dyadic(1, -k, o.precision));
  }
  const bool json = o.format == "json";
  if (!json) out << "theta,sin_lo,sin_hi,cos_lo,cos_hi,mid_lo,mid_hi,upper_lo,upper_hi\n";
  int code = kOk;
  auto fold = [&code](Verdict v) {
    if (v == Verdict::CertainlyGreater) code = kViolation;
    else if (v == Verdict::Overlap && code == kOk) code = kInconclusive;
  };
  for (const auto& t : thetas) {
    const SandwichReport r = sandwich_report(t, o.precision);
    fold(r.lower_verdict);
    fold(r.upper_verdict);
    if (r.square_verdict) fold(*r.square_verdict);
    if (json) {
      ordered_json j;
      j["theta"] = t.to_string();
      j["sin"] = report::interval_pair(r.sin);
      j["cos"] = report::interval_pair(r.cos);
      j["mid"] = report::interval_pair(r.mid);
      j["upper"] = report::interval_pair(r.upper);
      j["lower_verdict"] = to_string(r.lower_verdict);
      j["upper_verdict"] = to_string(r.upper_verdict);
      if (r.square_verdict) j["square_verdict"] = to_string(*r.square_verdict);
      out << j.dump() << "\n";
    } else {
      out << csv_row({t.midpoint().lo_string(), r.sin.lo_string(), r.sin.hi_string(), r.cos.lo_string(),
                      r.cos.hi_string(), r.mid.lo_string(), r.mid.hi_string(), r.upper.lo_string(),
                      r.upper.hi_string()});
    }
  }
  return code;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const SweepReport rep = rational_sweep(o.max_n, o.precision, o.serial ? 1 : (o.jobs > 0 ? o.jobs : 0));
  if (o.format == "csv") {
    out << "k,N,chord_lo,chord_hi,normalized_lo,normalized_hi,winding_checked\n";
    for (const auto& r : rep.rows) {
      out << csv_row({std::to_string(r.length.k), std::to_string(r.length.N), r.length.chord.lo_string(),
                      r.length.chord.hi_string(), r.normalized_in.lo_string(), r.normalized_in.hi_string(),
                      r.winding_checked ? "true" : "false"});
    }
  } else {
    for (const auto& r : rep.rows) out << report::sweep_row(r).dump() << "\n";
  }
  return rep.ordered ? kOk : kViolation;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Certified polygon enclosures of pi and the chord, tangent and circuit laws", "polypi"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_common = [&](CLI::App* c) {
    c->add_option("--precision", o.precision, "working precision in bits (env POLYPI_PRECISION)")
        ->check(CLI::Range(16, 1 << 20));
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    c->add_option("--output", o.output, "write the report to this file");
  };

  auto* bounds = app.add_subcommand("bounds", "enclosures of pi from the 2^m * n-gons");
  bounds->add_option("--n", o.n, "base polygon (3, 4 or 6)");
  bounds->add_option("--m", o.m, "refinement depth")->check(CLI::NonNegativeNumber);
  bounds->add_option("--m-to", o.m_to, "emit every depth from --m up to this one");
  add_common(bounds);

  auto* digits = app.add_subcommand("digits", "certified decimal digits of pi");
  digits->add_option("--count", o.count, "number of digits")->check(CLI::Range(1, 10000));
  add_common(digits);

  auto* arch = app.add_subcommand("archimedes", "hexagon to 96-gon against 223/71 < pi < 22/7");
  add_common(arch);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite, "suite name")->required();
  verify->add_option("--samples", o.samples, "samples (per mesh cap for circuits)");
  verify->add_option("--seed", o.seed, "64-bit seed");
  verify->add_option("--jobs", o.jobs, "worker threads (env POLYPI_JOBS)")->check(CLI::NonNegativeNumber);
  verify->add_flag("--serial", o.serial, "use the serial reference loop");
  add_common(verify);

  auto* circuit = app.add_subcommand("circuit", "random circuit and its measures");
  circuit->add_option("--k", o.k, "minimum number of points")->check(CLI::Range(3, 1 << 20));
  circuit->add_option("--mesh-cap", o.mesh_cap, "every edge is shorter than this (decimal)");
  circuit->add_option("--seed", o.seed, "64-bit seed");
  add_common(circuit);

  auto* trig = app.add_subcommand("trig", "sine, cosine and the sandwich 1 <= theta/sin <= 1/cos");
  trig->add_option("--theta", o.thetas, "angles in radians (default 2^-1 .. 2^-levels)");
  trig->add_option("--levels", o.levels, "number of dyadic angles")->check(CLI::Range(1, 64));
  add_common(trig);

  auto* sweep = app.add_subcommand("sweep-rational", "normalized lengths of all coprime (k, N)");
  sweep->add_option("--max-n", o.max_n, "largest N")->check(CLI::Range(3, 200));
  sweep->add_option("--jobs", o.jobs, "worker threads (env POLYPI_JOBS)")->check(CLI::NonNegativeNumber);
  add_common(sweep);

  try {
    o.precision = env_int("POLYPI_PRECISION", kDefaultPrecision);
    o.jobs = env_int("POLYPI_JOBS", 0);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) {
      err << "cannot open " << o.output << "\n";
      return kUsage;
    }
  }
  std::ostream& sink = o.output.empty() ? out : file;
  try {
    if (*bounds) return cmd_bounds(o, sink);
    if (*digits) return cmd_digits(o, sink);
    if (*arch) return cmd_archimedes(o, sink);
    if (*verify) return cmd_verify(o, sink, err);
    if (*circuit) return cmd_circuit(o, sink);
    if (*trig) return cmd_trig(o, sink);
    if (*sweep) return cmd_sweep(o, sink);
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_for(e.code());
  }
  return kUsage;
}

}  // namespace polypi::cli
