// curvar: curvature corrections to Gaussian-smeared field variance and the
// induced detector state. Geometric units (c = hbar = 1); one global length
// unit; curvature components carry 1/length^2.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "curvar/detector.hpp"
#include "curvar/errors.hpp"
#include "curvar/geodesics.hpp"
#include "curvar/oracles.hpp"
#include "curvar/report.hpp"

namespace {

using namespace curvar;

struct RunConfig {
  std::string preset;
  std::string curvature_file;
  double hubble = 0.1, mass = 1.0, radius = 10.0, k = 0.0;
  double T = 1.0, sigma = 1.0, l0 = 1.0;
  double coupling = 1.0, gap = 0.0, state_term = 0.0;
  double tolerance = 1e-10;
  std::uint64_t seed = 1;
  std::string out;  // CSV destination; empty = stdout
  std::string log_variant = "sq_l0";
};

LogVariant variant_of(const RunConfig& c) {
  if (c.log_variant == "sq_l0") return LogVariant::SqL0;
  if (c.log_variant == "two_sq_l0") return LogVariant::TwoSqL0;
  throw ConfigError("unknown log variant: " + c.log_variant);
}

PresetSpec preset_of(const RunConfig& c) {
  PresetSpec p;
  p.name = preset_name_from_string(c.preset);
  p.hubble = c.hubble;
  p.mass = c.mass;
  p.radius = c.radius;
  p.k = c.k;
  p.validate();
  return p;
}

CurvatureData parse_curvature_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open curvature file: " + path);
  std::vector<RiemannComponent> comps;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key, eq;
    double value;
    if (!(ls >> key)) continue;  // blank line
    if (!(ls >> eq >> value) || eq != "=")
      throw ConfigError("curvature file line " + std::to_string(lineno) +
                        ": expected `R_abcd = value`");
    if (key.size() != 6 || key.rfind("R_", 0) != 0)
      throw ConfigError("curvature file line " + std::to_string(lineno) +
                        ": bad key `" + key + "`");
    RiemannComponent rc;
    int idx[4];
    for (int i = 0; i < 4; ++i) {
      const char ch = key[2 + i];
      if (ch < '0' || ch > '3')
        throw ConfigError("curvature file line " + std::to_string(lineno) +
                          ": index out of range in `" + key + "`");
      idx[i] = ch - '0';
    }
    rc.a = idx[0];
    rc.b = idx[1];
    rc.c = idx[2];
    rc.d = idx[3];
    rc.value = value;
    comps.push_back(rc);
  }
  return CurvatureData::from_components(comps);
}

CurvatureData curvature_of(const RunConfig& c) {
  const bool has_preset = !c.preset.empty();
  const bool has_file = !c.curvature_file.empty();
  if (has_preset == has_file)
    throw ConfigError("exactly one of --preset and --curvature-file is required");
  if (has_file) return parse_curvature_file(c.curvature_file);
  return preset_curvature(preset_of(c));
}

GaussianSmearing smearing_of(const RunConfig& c) {
  GaussianSmearing s{c.T, c.sigma, c.l0};
  s.validate();
  return s;
}

Json inputs_echo(const RunConfig& c, const std::string& subcommand) {
  Json j;
  j["subcommand"] = subcommand;
  if (!c.preset.empty()) {
    j["preset"] = c.preset;
    if (c.preset == "de_sitter") j["hubble"] = c.hubble;
    if (c.preset == "schwarzschild") {
      j["mass"] = c.mass;
      j["radius"] = c.radius;
    }
    if (c.preset == "constant_curvature") j["k"] = c.k;
  }
  if (!c.curvature_file.empty()) j["curvature_file"] = c.curvature_file;
  j["T"] = c.T;
  j["sigma"] = c.sigma;
  j["l0"] = c.l0;
  j["coupling"] = c.coupling;
  j["state_term"] = c.state_term;
  j["seed"] = c.seed;
  j["log_variant"] = c.log_variant;
  j["units"] = "geometric (c = hbar = 1), one global length unit";
  return j;
}

std::vector<std::string> warnings_of(const VarianceBreakdown& b) {
  std::vector<std::string> w;
  if (b.validity_warning)
    w.push_back("expansion validity: ell * sqrt(|R|) = " +
                std::to_string(b.ell_times_sqrt_curvature) +
                " exceeds 0.1; corrections may be unreliable");
  return w;
}

void emit_csv(const RunConfig& c, const std::string& csv) {
  if (c.out.empty()) {
    std::cout << csv;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw ConfigError("cannot write --out file: " + c.out);
  f << csv;
}

int run_variance(const RunConfig& c) {
  const VarianceBreakdown b =
      variance_breakdown(curvature_of(c), smearing_of(c), c.state_term, variant_of(c));
  Json diag;
  diag["ell_times_sqrt_curvature"] = b.ell_times_sqrt_curvature;
  std::cout << dump_deterministic(
      make_report(inputs_echo(c, "variance"), breakdown_to_json(b), diag, warnings_of(b)));
  return 0;
}

int run_detector(const RunConfig& c) {
  const DetectorResult r =
      curvature_corrected_state(c.coupling, smearing_of(c), curvature_of(c),
                                c.state_term, QubitState::ground(), variant_of(c));
  Json res;
  res["breakdown"] = breakdown_to_json(r.breakdown);
  res["xi"] = r.strength.xi;
  Json rho = Json::array();
  for (int i = 0; i < 2; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 2; ++j)
      row.push_back(Json::array({r.final.rho(i, j).real(), r.final.rho(i, j).imag()}));
    rho.push_back(row);
  }
  res["rho_final"] = rho;
  res["excited_population"] = r.final.rho(1, 1).real();
  if (c.gap > 0.0)
    res["gapped_probability_minkowski"] =
        gapped_probability_minkowski(c.coupling, c.gap, smearing_of(c));
  Json diag;
  diag["ell_times_sqrt_curvature"] = r.breakdown.ell_times_sqrt_curvature;
  std::cout << dump_deterministic(make_report(inputs_echo(c, "detector"), res, diag,
                                              warnings_of(r.breakdown)));
  return 0;
}

int run_validate(const RunConfig& c) {
  QuadratureOptions q;
  q.tolerance = 1e-10;
  q.seed = c.seed;
  const std::vector<CoefficientCheck> checks = validate_coefficients(c.T, c.sigma, q);

  bool all_pass = true;
  Json rows = Json::array();
  for (const CoefficientCheck& ch : checks) {
    Json row;
    row["coefficient"] = ch.coefficient;
    row["closed_form"] = ch.closed_form;
    row["oracle"] = ch.oracle;
    row["rel_diff"] = ch.rel_diff;
    row["tolerance"] = ch.tolerance;
    row["pass"] = ch.pass;
    rows.push_back(row);
    all_pass = all_pass && ch.pass;
  }

  // P_ln: deterministic quadrature vs Monte-Carlo oracle, both variants.
  QuadratureOptions qmc = q;
  qmc.method = QuadratureOptions::Method::monte_carlo;
  Json plns = Json::array();
  for (LogVariant v : {LogVariant::SqL0, LogVariant::TwoSqL0}) {
    const double det = p_ln(c.T, c.sigma, c.l0, 1e-9, v);
    const McEstimate mc = pln_oracle(c.T, c.sigma, c.l0, qmc, 10000000, v);
    const bool pass = std::abs(det - mc.value) <= 3.0 * mc.std_error;
    Json row;
    row["variant"] = v == LogVariant::SqL0 ? "sq_l0" : "two_sq_l0";
    row["deterministic"] = det;
    row["monte_carlo"] = mc.value;
    row["mc_std_error"] = mc.std_error;
    row["pass"] = pass;
    plns.push_back(row);
    all_pass = all_pass && pass;
  }

  Json res;
  res["coefficients"] = rows;
  res["p_ln"] = plns;
  res["all_pass"] = all_pass;
  Json diag;
  diag["quadrature_tolerance"] = q.tolerance;
  diag["mc_samples"] = 10000000;
  std::cout << dump_deterministic(make_report(inputs_echo(c, "validate"), res, diag, {}));
  return all_pass ? 0 : 1;
}

int run_synge(const RunConfig& c) {
  if (c.preset.empty()) throw ConfigError("synge requires --preset with a chart");
  const PresetSpec spec = preset_of(c);
  if (spec.name == PresetSpec::Name::constant_curvature)
    throw ConfigError("constant_curvature has no chart; use de_sitter or schwarzschild");
  const MetricChart chart = preset_chart(spec);
  const Vec4 base = preset_base_event(spec);
  const Mat4 frame = orthonormal_frame(chart, base);
  const Riemann4 riemann = chart_curvature_in_frame(chart, base, frame, 1e-5);

  const Vec4 xi_a(0.05, 0.03, -0.02, 0.01);
  const Vec4 xi_b(-0.02, -0.04, 0.05, 0.02);
  std::vector<double> scales;
  for (int i = 0; i < 5; ++i) scales.push_back(std::pow(0.5, i));
  const ScalingResult r = sigma_scaling_test(chart, base, frame, riemann, xi_a, xi_b, scales);
  emit_csv(c, scaling_csv(r));
  return 0;
}

int run_sweep(const RunConfig& c, double ell_min, double ell_max, int steps) {
  if (!(ell_min > 0.0) || !(ell_max > ell_min) || steps < 2)
    throw ConfigError("sweep needs 0 < --ell-min < --ell-max and --ell-steps >= 2");
  const CurvatureData curv = curvature_of(c);
  std::ostringstream os;
  os.precision(17);
  os << "ell,minkowski,ricci_term,riemann_term,log_term,state_term,total,validity_warning\n";
  for (int i = 0; i < steps; ++i) {
    const double ell =
        ell_min * std::pow(ell_max / ell_min, static_cast<double>(i) / (steps - 1));
    GaussianSmearing s{ell, ell, ell};
    const VarianceBreakdown b = variance_breakdown(curv, s, c.state_term, variant_of(c));
    os << ell << ',' << b.minkowski << ',' << b.ricci_term << ',' << b.riemann_term
       << ',' << b.log_term << ',' << b.state_term << ',' << b.total << ','
       << (b.validity_warning ? 1 : 0) << '\n';
  }
  emit_csv(c, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "curvar: leading-order curvature corrections to the variance of a\n"
      "Gaussian-smeared massless scalar field, and the induced detector state.\n"
      "Units: geometric (c = hbar = 1) with one global length unit;\n"
      "curvature components are 1/length^2."};
  app.require_subcommand(1);

  RunConfig c;
  double ell_min = 0.05, ell_max = 1.0;
  int ell_steps = 20;

  auto add_common = [&](CLI::App* s, bool needs_curvature) {
    if (needs_curvature) {
      s->add_option("--preset", c.preset,
                    "minkowski | de_sitter | schwarzschild | constant_curvature");
      s->add_option("--curvature-file", c.curvature_file,
                    "key-value file: lines like `R_0101 = -2.0e-3`");
      s->add_option("--hubble", c.hubble, "de Sitter H");
      s->add_option("--mass", c.mass, "Schwarzschild M");
      s->add_option("--radius", c.radius, "Schwarzschild event radius");
      s->add_option("--k", c.k, "constant curvature K");
    }
    s->add_option("--T", c.T, "temporal Gaussian width");
    s->add_option("--sigma", c.sigma, "spatial Gaussian width");
    s->add_option("--l0", c.l0, "Hadamard log scale");
    s->add_option("--state-term", c.state_term, "state-dependent constant term");
    s->add_option("--seed", c.seed, "random seed for stochastic oracles");
    s->add_option("--log-variant", c.log_variant, "sq_l0 | two_sq_l0");
    s->add_option("--out", c.out, "CSV output path (default stdout)");
  };

  CLI::App* variance = app.add_subcommand("variance", "variance breakdown as JSON");
  add_common(variance, true);

  CLI::App* detector = app.add_subcommand("detector", "final detector state + breakdown");
  add_common(detector, true);
  detector->add_option("--coupling", c.coupling, "coupling lambda");
  detector->add_option("--gap", c.gap, "detector gap Omega (flat-space probability)");

  CLI::App* validate =
      app.add_subcommand("validate", "closed forms vs quadrature / MC oracles");
  add_common(validate, false);

  CLI::App* synge =
      app.add_subcommand("synge", "world-function scaling test CSV + fitted exponent");
  add_common(synge, true);

  CLI::App* sweep = app.add_subcommand("sweep", "breakdowns over an ell grid (CSV)");
  add_common(sweep, true);
  sweep->add_option("--ell-min", ell_min, "smallest probe size");
  sweep->add_option("--ell-max", ell_max, "largest probe size");
  sweep->add_option("--ell-steps", ell_steps, "number of grid points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }

  try {
    if (variance->parsed()) return run_variance(c);
    if (detector->parsed()) return run_detector(c);
    if (validate->parsed()) return run_validate(c);
    if (synge->parsed()) return run_synge(c);
    if (sweep->parsed()) return run_sweep(c, ell_min, ell_max, ell_steps);
  } catch (const ConfigError& e) {
    curvar::Json err;
    err["error"] = {{"type", "ConfigError"}, {"message", e.what()}};
    std::cerr << dump_deterministic(err);
    return 2;
  } catch (const DomainError& e) {
    curvar::Json err;
    err["error"] = {{"type", "DomainError"}, {"message", e.what()}};
    std::cerr << dump_deterministic(err);
    return 2;
  } catch (const std::exception& e) {
    curvar::Json err;
    err["error"] = {{"type", "ComputeError"}, {"message", e.what()}};
    std::cerr << dump_deterministic(err);
    return 1;
  }
  return 2;
}
