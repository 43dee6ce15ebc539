#include "balloon/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "balloon/classmap.hpp"
#include "balloon/functionals.hpp"
#include "balloon/optimizer/cases.hpp"

namespace balloon::cli {

using nlohmann::json;
namespace opt = balloon::optimizer;

namespace {

const std::vector<std::string> kSeriesTargets{"B", "f1", "f2", "f3"};
const std::vector<std::string> kVerifySuites{"hankel", "toeplitz", "hermitian", "identities", "all"};
const std::vector<std::string> kFigures{"y0_curve", "h3_curve", "h_surface", "balloon"};

bool one_of(const std::string& v, const std::vector<std::string>& set) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

std::string joined(const std::vector<std::string>& set) {
  std::string s;
  for (const auto& v : set) s += (s.empty() ? "" : ", ") + v;
  return s;
}

std::vector<std::size_t> parse_grid(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("--grid: '" + item + "' is not an integer");
    }
    if (used != item.size() || v < 2) throw std::invalid_argument("--grid: entries must be integers >= 2");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty() || out.size() > 3) throw std::invalid_argument("--grid: expected 1 to 3 comma-separated sizes");
  return out;
}

// Writes to cfg.out or to `out`. Returns false if the file cannot be written.
bool emit(const RunConfig& cfg, const std::string& text, std::ostream& out, std::ostream& err) {
  if (cfg.out.empty()) {
    out << text;
    out.flush();
    return true;
  }
  std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
  if (!f) {
    err << "error: cannot open '" << cfg.out << "' for writing\n";
    return false;
  }
  f << text;
  f.flush();
  if (!f) {
    err << "error: write to '" << cfg.out << "' failed\n";
    return false;
  }
  return true;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json rational_json(const Rational& q) {
  return {{"numerator", numerator(q).str()}, {"denominator", denominator(q).str()}, {"value", q.str()}};
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json config_json(const RunConfig& cfg) {
  json j{{"order", cfg.order},   {"samples", cfg.samples},     {"seed", cfg.seed},
         {"tol", cfg.tol},       {"chain_tol", cfg.chain_tol}, {"paper_tol", cfg.paper_tol},
         {"threads", cfg.threads}};
  if (cfg.grid) j["grid"] = *cfg.grid;
  return j;
}

json claim_json(const opt::Claim& c) {
  json j{{"kind", opt::claim_kind_name(c.kind)}, {"value", c.value}, {"tolerance", c.tolerance}};
  if (c.point) {
    j["point"] = *c.point;
    j["point_tolerance"] = c.point_tolerance;
  }
  return j;
}

json scan_json(const opt::ScanReport& r) {
  return {{"id", r.id},
          {"objective", r.objective},
          {"resolution", r.resolution},
          {"goal", r.goal == opt::Goal::Maximize ? "maximize" : "minimize"},
          {"best_value", r.best_value},
          {"best_point", r.best_point},
          {"refined_value", r.refined_value},
          {"refined_point", r.refined_point},
          {"claim", claim_json(r.claim)},
          {"pass", r.pass},
          {"severity", r.severity == opt::Severity::Check ? "check" : "advisory"},
          {"evaluations", r.evaluations},
          {"ties", {{"count", r.tie_count}, {"lo", r.tie_lo}, {"hi", r.tie_hi}}},
          {"wall_seconds", r.wall_seconds},
          {"note", r.note}};
}

json determinant_json(const std::string& subject, const DeterminantReport& r) {
  return {{"subject", subject},
          {"functional", functional_name(r.functional)},
          {"value", complex_json(r.value)},
          {"modulus", std::abs(r.value)},
          {"inputs",
           {{"a2", complex_json(r.inputs.a2)},
            {"a3", complex_json(r.inputs.a3)},
            {"a4", complex_json(r.inputs.a4)},
            {"a5", complex_json(r.inputs.a5)}}},
          {"bound_claimed",
           {{"lo", r.bound_claimed.lo}, {"hi", r.bound_claimed.hi}, {"on_modulus", r.bound_claimed.on_modulus}}},
          {"tolerance", r.tolerance},
          {"within_bound", r.within_bound},
          {"margin", r.margin}};
}

json identity_json(const IdentityCheck& c) {
  json j{{"name", c.name}, {"pass", c.passed}, {"terms", c.terms}, {"note", c.note}};
  if (c.first_difference) {
    const auto& d = *c.first_difference;
    j["first_difference"] = {{"monomial", MultiPoly::monomial_string(d.exponents, c.variable_names)},
                             {"expected", d.expected.str()},
                             {"actual", d.actual.str()}};
  }
  return j;
}

// Exact value check on extremal coefficients.
json exact_check(const std::string& name, const Rational& expected, const Rational& actual) {
  return {{"name", name},
          {"expected", expected.str()},
          {"actual", actual.str()},
          {"tolerance", 0},
          {"pass", expected == actual}};
}

CoeffVector<Rational> extremal_coeffs(Extremal kind) { return coeff_vector(extremal(kind, 5)); }

CoeffVector<Rational> identity_coeffs() { return {Rational(0), Rational(0), Rational(0), Rational(0)}; }

opt::CaseOptions case_options(const RunConfig& cfg) {
  opt::CaseOptions o;
  if (cfg.grid) {
    if (cfg.grid->size() != 3) throw std::invalid_argument("--grid: verify expects three sizes p,x,y");
    o.grid = {(*cfg.grid)[0], (*cfg.grid)[1], (*cfg.grid)[2]};
  }
  o.samples = cfg.samples;
  o.seed = cfg.seed;
  o.hankel_bound = 1.0 / 9.0;
  o.bound_tolerance = cfg.tol;
  o.chain_tolerance = cfg.chain_tol;
  o.paper_tolerance = cfg.paper_tol;
  o.threads = cfg.threads;
  return o;
}

struct Suite {
  json scans = json::array();
  json determinants = json::array();
  json identities = json::array();
  json exact = json::array();
  json warnings = json::array();
  bool pass = true;

  void add_scans(const std::vector<opt::ScanReport>& reports) {
    for (const auto& r : reports) {
      scans.push_back(scan_json(r));
      if (r.severity == opt::Severity::Check && !r.pass) pass = false;
    }
  }
  void add_determinant(const std::string& subject, const DeterminantReport& r) {
    determinants.push_back(determinant_json(subject, r));
    pass = pass && r.within_bound;
  }
  void add_identity(const IdentityCheck& c) {
    identities.push_back(identity_json(c));
    pass = pass && c.passed;
  }
  void add_exact(const json& c) {
    exact.push_back(c);
    pass = pass && c["pass"].get<bool>();
  }
  void warn(const std::string& id, const std::string& message, json data = json::object()) {
    warnings.push_back({{"id", id}, {"level", "WARNING"}, {"message", message}, {"data", std::move(data)}});
  }
};

void identity_suite(Suite& s, const std::string& which) {
  for (const IdentityCheck& c : verify_pspace_identities()) {
    const bool wanted = which == "identities" || which == "all" ||
                        (which == "hankel" && c.name.starts_with("H31")) ||
                        (which == "toeplitz" && c.name.starts_with("T31")) ||
                        (which == "hermitian" && c.name.starts_with("HT31"));
    if (wanted) s.add_identity(c);
  }
}

void hankel_suite(Suite& s, const RunConfig& cfg) {
  s.add_scans(opt::verify_hankel_cases(case_options(cfg)));
  const auto f1 = extremal_coeffs(Extremal::f1);
  const auto f3 = extremal_coeffs(Extremal::f3);
  s.add_exact(exact_check("H31(f1)", Rational(-1, 9), hankel3(f1)));
  s.add_determinant("f1", make_report(Functional::H31, to_complex(f1), cfg.tol));
  s.add_determinant("f3", make_report(Functional::H31, to_complex(f3), cfg.tol));
}

void toeplitz_suite(Suite& s, const RunConfig& cfg) {
  const auto f2 = extremal_coeffs(Extremal::f2);
  const auto f3 = extremal_coeffs(Extremal::f3);
  s.add_exact(exact_check("T31(z)", Rational(1), toeplitz3(identity_coeffs())));
  s.add_exact(exact_check("T31(f2)", Rational(1), toeplitz3(f2)));
  s.add_exact(exact_check("T31(f3)", Rational(-1, 16), toeplitz3(f3)));
  s.add_determinant("z", make_report(Functional::T31, to_complex(identity_coeffs()), cfg.tol));
  s.add_determinant("f2", make_report(Functional::T31, to_complex(f2), cfg.tol));
  s.add_determinant("f3", make_report(Functional::T31, to_complex(f3), cfg.tol));
  s.warn("toeplitz.f3_sharpness",
         "f3 is named as extremal for |T31| <= 1 but gives T31(f3) = -1/16; the value 1 is attained by z and f2",
         {{"T31_f3", "-1/16"}, {"T31_z", "1"}, {"T31_f2", "1"}});
  const CaratheodoryParams w(0.0, Complex(0.0, 1.0), 0.0, 0.0);
  const auto lemma = expand_lemma(w);
  const auto a = closed_form_coeffs(Complex(0.0), lemma.p2, lemma.p3, lemma.p4);
  s.warn("toeplitz.complex_counterexample",
         "p(z) = (1 + i z^2)/(1 - i z^2), i.e. p1 = 0, gamma = i, gives a2 = 0, a3 = i/2 and |T31| = 5/4 > 1",
         {{"p1", 0.0}, {"gamma", complex_json(Complex(0.0, 1.0))}, {"T31", complex_json(toeplitz3(a))}});
  // e^{-it} f3(e^{it} z) stays in the class; a_n picks up e^{i(n-1)t}. At t = pi/2.
  const GaussianRational i = GaussianRational::i();
  const CoeffVector<GaussianRational> r{i * f3.a2, i * i * f3.a3, i * i * i * f3.a4, f3.a5};
  const GaussianRational tr = toeplitz3(r);
  s.warn("toeplitz.rotation_counterexample",
         "the rotation -i f3(i z) is a class member with a2 = i, a3 = -3/4 and T31 = " + tr.real().str() + " > 1",
         {{"rotation", "pi/2"}, {"T31", {{"re", tr.real().str()}, {"im", tr.imag().str()}}}});
}

void hermitian_suite(Suite& s, const RunConfig& cfg) {
  opt::CaseOptions o = case_options(cfg);
  if (cfg.grid && cfg.grid->size() >= 2) o.hermitian_grid = {(*cfg.grid)[0], (*cfg.grid)[1]};
  s.add_scans(opt::check_hermitian_surface(o));
  const auto f2 = extremal_coeffs(Extremal::f2);
  const auto f3 = extremal_coeffs(Extremal::f3);
  s.add_exact(exact_check("HT31(f2)", Rational(1), hermitian_toeplitz3(f2)));
  s.add_exact(exact_check("HT31(f3)", Rational(-1, 16), hermitian_toeplitz3(f3)));
  s.add_determinant("f2", make_report(Functional::HT31, to_complex(f2), cfg.tol));
  s.add_determinant("f3", make_report(Functional::HT31, to_complex(f3), cfg.tol));
  const double p = std::sqrt(56.0 / 15.0);
  const CaratheodoryParams w(p, Complex(-1.0, 0.0), 0.0, 0.0);
  const auto lemma = expand_lemma(w);
  const auto a = closed_form_coeffs(Complex(p), lemma.p2, lemma.p3, lemma.p4);
  s.warn("hermitian.lower_bound_counterexample",
         "with Re gamma = -|gamma| the lower estimate is not valid: p = sqrt(56/15), gamma = -1 gives HT31 = -1/15 < -1/16",
         {{"p1", p}, {"gamma", complex_json(Complex(-1.0, 0.0))}, {"HT31", hermitian_toeplitz3(a)}});
}

// Max |H|, max |T|, max/min HT over one population of coefficient vectors.
struct Extremes {
  double max_h = 0.0;
  double max_t = 0.0;
  double max_ht = -std::numeric_limits<double>::infinity();
  double min_ht = std::numeric_limits<double>::infinity();
  std::size_t arg_h = 0, arg_t = 0, arg_max_ht = 0, arg_min_ht = 0;

  void add(const CoeffVector<Complex>& a, std::size_t i) {
    const double h = std::abs(hankel3(a));
    const double t = std::abs(toeplitz3(a));
    const double ht = hermitian_toeplitz3(a);
    if (h > max_h) max_h = h, arg_h = i;
    if (t > max_t) max_t = t, arg_t = i;
    if (ht > max_ht) max_ht = ht, arg_max_ht = i;
    if (ht < min_ht) min_ht = ht, arg_min_ht = i;
  }
};

json bound_json(const std::string& stat, double value, std::size_t index, const std::string& kind, double bound,
                double tol, bool pass) {
  return {{"statistic", stat}, {"value", value}, {"draw_index", index}, {"claim", kind},
          {"bound", bound},    {"tolerance", tol}, {"pass", pass}};
}

json extremes_json(const Extremes& e, double tol, bool& pass) {
  json checks = json::array();
  auto add = [&](const std::string& stat, double v, std::size_t i, bool at_most, double bound) {
    const bool ok = at_most ? v <= bound + tol : v >= bound - tol;
    pass = pass && ok;
    checks.push_back(bound_json(stat, v, i, at_most ? "at_most" : "at_least", bound, tol, ok));
  };
  add("max_abs_H31", e.max_h, e.arg_h, true, 1.0 / 9.0);
  add("max_abs_T31", e.max_t, e.arg_t, true, 1.0);
  add("max_HT31", e.max_ht, e.arg_max_ht, true, 1.0);
  add("min_HT31", e.min_ht, e.arg_min_ht, false, -1.0 / 16.0);
  return checks;
}

std::string csv_number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.command == "series") {
    if (!one_of(cfg.target, kSeriesTargets)) {
      throw std::invalid_argument("series: unknown target '" + cfg.target + "' (expected " + joined(kSeriesTargets) + ")");
    }
  } else if (cfg.command == "verify") {
    if (!one_of(cfg.target, kVerifySuites)) {
      throw std::invalid_argument("verify: unknown suite '" + cfg.target + "' (expected " + joined(kVerifySuites) + ")");
    }
    if (cfg.grid && cfg.grid->size() != 3) throw std::invalid_argument("--grid: verify expects three sizes p,x,y");
  } else if (cfg.command == "plotdata") {
    if (!one_of(cfg.target, kFigures)) {
      throw std::invalid_argument("plotdata: unknown figure '" + cfg.target + "' (expected " + joined(kFigures) + ")");
    }
  } else if (cfg.command != "sample") {
    throw std::invalid_argument("unknown command '" + cfg.command + "'");
  }
  if (cfg.order < 1) throw std::invalid_argument("--order must be >= 1");
  if (cfg.samples < 1) throw std::invalid_argument("--samples must be >= 1");
  for (double t : {cfg.tol, cfg.chain_tol, cfg.paper_tol}) {
    if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("tolerances must be positive and finite");
  }
  if (cfg.format && *cfg.format != "json" && *cfg.format != "csv") {
    throw std::invalid_argument("--format must be json or csv");
  }
  const std::string fmt = cfg.format.value_or(cfg.command == "plotdata" ? "csv" : "json");
  if ((cfg.command == "verify" || cfg.command == "sample") && fmt != "json") {
    throw std::invalid_argument(cfg.command + " reports are JSON only");
  }
  if (cfg.command == "plotdata" && fmt != "csv") throw std::invalid_argument("plotdata emits CSV only");
}

int cmd_series(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  TruncatedSeries<Rational> s = TruncatedSeries<Rational>::zero(0);
  if (cfg.target == "B") {
    s = bseries(cfg.order);
  } else {
    const Extremal kind = cfg.target == "f1" ? Extremal::f1 : cfg.target == "f2" ? Extremal::f2 : Extremal::f3;
    s = extremal(kind, cfg.order);
  }
  std::string text;
  if (cfg.format.value_or("json") == "csv") {
    text = "power,numerator,denominator\n";
    for (int k = 0; k <= s.order(); ++k) {
      text += std::to_string(k) + "," + numerator(s[k]).str() + "," + denominator(s[k]).str() + "\n";
    }
  } else {
    json coeffs = json::array();
    for (int k = 0; k <= s.order(); ++k) {
      json c = rational_json(s[k]);
      c["power"] = k;
      coeffs.push_back(std::move(c));
    }
    text = dump({{"schema_version", kSchemaVersion},
                 {"command", "series"},
                 {"target", cfg.target},
                 {"order", s.order()},
                 {"exact", true},
                 {"coefficients", std::move(coeffs)}});
  }
  return emit(cfg, text, out, err) ? kPass : kUsage;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  Suite s;
  const std::string& which = cfg.target;
  identity_suite(s, which);
  if (which == "hankel" || which == "all") hankel_suite(s, cfg);
  if (which == "toeplitz" || which == "all") toeplitz_suite(s, cfg);
  if (which == "hermitian" || which == "all") hermitian_suite(s, cfg);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const json report{{"schema_version", kSchemaVersion},
                    {"command", "verify"},
                    {"suite", which},
                    {"config", config_json(cfg)},
                    {"pass", s.pass},
                    {"wall_seconds", wall},
                    {"identity_checks", s.identities},
                    {"exact_checks", s.exact},
                    {"determinant_reports", s.determinants},
                    {"scan_reports", s.scans},
                    {"warnings", s.warnings}};
  if (!emit(cfg, dump(report), out, err)) return kUsage;
  for (const auto& w : s.warnings) err << "WARNING " << w["id"].get<std::string>() << ": " << w["message"].get<std::string>() << "\n";
  for (const auto& r : s.scans) {
    if (r["severity"] == "check" && !r["pass"].get<bool>()) {
      err << "FAIL " << r["id"].get<std::string>() << ": refined value " << r["refined_value"].get<double>()
          << " at " << r["refined_point"].dump() << "\n";
    }
  }
  return s.pass ? kPass : kCheckFailed;
}

int cmd_plotdata(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ostringstream os;
  const auto& grid = cfg.grid;
  auto count = [&](std::size_t dflt) { return grid ? (*grid)[0] : dflt; };
  if (cfg.target == "y0_curve") {
    // Interior critical y on the face p = 0, as printed in the face analysis.
    const std::size_t n = count(1001);
    os << "x,y0\n";
    for (std::size_t i = 0; i < n; ++i) {
      const double x = static_cast<double>(i + 1) / static_cast<double>(n + 1);
      const double y0 = x * (5 + 2 * x) / (4 * (9 * x - 17 * x * x - 8));
      os << csv_number(x) << ',' << csv_number(y0) << '\n';
    }
  } else if (cfg.target == "h3_curve") {
    const std::size_t n = count(2001);
    os << "p,h3\n";
    for (std::size_t i = 0; i < n; ++i) {
      const double p = opt::grid_coordinate({0.0, 2.0}, i, n);
      os << csv_number(p) << ',' << csv_number(opt::eval_F(p, 1.0, 1.0)) << '\n';
    }
  } else if (cfg.target == "h_surface") {
    const std::size_t np = grid ? (*grid)[0] : 101;
    const std::size_t nx = grid && grid->size() >= 2 ? (*grid)[1] : 51;
    os << "p,x,h\n";
    for (std::size_t i = 0; i < np; ++i) {
      const double p = opt::grid_coordinate({0.0, 2.0}, i, np);
      for (std::size_t j = 0; j < nx; ++j) {
        const double x = opt::grid_coordinate({0.0, 1.0}, j, nx);
        os << csv_number(p) << ',' << csv_number(x) << ',' << csv_number(hermitian_surface(p, x)) << '\n';
      }
    }
  } else {
    const std::size_t n = count(720);
    const auto pts = balloon_boundary(static_cast<int>(n));
    os << "theta,re,im\n";
    const double lo = -std::numbers::pi + kBoundaryThetaMargin;
    const double hi = std::numbers::pi - kBoundaryThetaMargin;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double theta = opt::grid_coordinate({lo, hi}, i, pts.size());
      os << csv_number(theta) << ',' << csv_number(pts[i].real()) << ',' << csv_number(pts[i].imag()) << '\n';
    }
  }
  return emit(cfg, os.str(), out, err) ? kPass : kUsage;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  constexpr int kMaxAtoms = 4;
  Extremes members;
  Extremes params;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const KernelMix mix = sample_mix(stream_seed(cfg.seed, 2 * i), kMaxAtoms);
    members.add(coeff_vector(coeffs_from_p(kernel_series(mix, 4), 5)), i);
    const CaratheodoryParams prm = sample_params(stream_seed(cfg.seed, 2 * i + 1));
    const auto l = expand_lemma(prm);
    params.add(closed_form_coeffs(Complex(prm.p1()), l.p2, l.p3, l.p4), i);
  }
  bool pass = true;
  const json report{{"schema_version", kSchemaVersion},
                    {"command", "sample"},
                    {"config", config_json(cfg)},
                    {"max_atoms", kMaxAtoms},
                    {"class_members", extremes_json(members, cfg.tol, pass)},
                    {"parametrization", extremes_json(params, cfg.tol, pass)},
                    {"pass", pass},
                    {"wall_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
  if (!emit(cfg, dump(report), out, err)) return kUsage;
  if (!pass) err << "FAIL: sampled values outside the claimed bounds (see report)\n";
  return pass ? kPass : kCheckFailed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coefficient functional checks for the balloon-domain starlike class"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string grid_text;
  std::string format;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--order", cfg.order, "truncation order");
    sub->add_option("--grid", grid_text, "grid sizes p,x,y");
    sub->add_option("--samples", cfg.samples, "number of random draws");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--tol", cfg.tol, "bound tolerance");
    sub->add_option("--chain-tol", cfg.chain_tol, "tolerance for |H31| <= F");
    sub->add_option("--paper-tol", cfg.paper_tol, "tolerance for printed decimal constants");
    sub->add_option("--threads", cfg.threads, "scan threads (0 = all cores)");
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--format", format, "json or csv");
  };
  CLI::App* series = app.add_subcommand("series", "exact coefficients of B or an extremal function");
  series->add_option("target", cfg.target, "B, f1, f2 or f3")->required();
  common(series);
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.target, "hankel, toeplitz, hermitian, identities or all")->required();
  common(verify);
  CLI::App* plot = app.add_subcommand("plotdata", "emit figure data as CSV");
  plot->add_option("figure", cfg.target, "y0_curve, h3_curve, h_surface or balloon")->required();
  common(plot);
  CLI::App* sample = app.add_subcommand("sample", "sampled extremes of the three functionals");
  common(sample);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  for (CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();
  try {
    if (!grid_text.empty()) cfg.grid = parse_grid(grid_text);
    if (!format.empty()) cfg.format = format;
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (cfg.command == "series") return cmd_series(cfg, out, err);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "plotdata") return cmd_plotdata(cfg, out, err);
    return cmd_sample(cfg, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"balloon"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace balloon::cli
