// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here and intentionally not shared with the
// unit tests.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <vector>

#include "curvar/detector.hpp"
#include "curvar/expansions.hpp"
#include "curvar/geodesics.hpp"
#include "curvar/oracles.hpp"
#include "curvar/presets.hpp"
#include "test_util.hpp"

using namespace curvar;

namespace {

constexpr double kPi2 = M_PI * M_PI;
int failures = 0;

void report(int criterion, const char* label, bool pass, const std::string& detail) {
  std::printf("%s  criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion,
              label, detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

double rel(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

// 1. Minkowski variance vs momentum quadrature, 1e-8 relative on the grid.
void criterion1() {
  QuadratureOptions q;
  q.tolerance = 1e-12;
  double worst = 0.0;
  for (double T : {0.5, 1.0, 2.0})
    for (double s : {0.5, 1.0, 2.0}) {
      GaussianSmearing g{T, s, 1.0};
      worst = std::max(worst, rel(variance_momentum_quadrature(g, q),
                                  minkowski_variance(T, s)));
    }
  report(1, "Minkowski variance quadrature (1e-8 rel, 3x3 grid)", worst <= 1e-8,
         fmt("worst rel err %.3e", worst));
}

// 2. Appendix coefficient closed forms vs deterministic oracles.
void criterion2() {
  QuadratureOptions q;
  q.tolerance = 1e-10;
  bool pass = true;
  double worst = 0.0;
  std::string worst_name;
  for (double T : {0.5, 1.0, 2.0})
    for (double s : {0.5, 1.0, 2.0})
      for (const CoefficientCheck& ch : validate_coefficients(T, s, q)) {
        pass = pass && ch.pass;
        if (ch.rel_diff > worst) {
          worst = ch.rel_diff;
          worst_name = ch.coefficient;
        }
      }
  report(2, "coefficient oracles (1e-6 rel nonzero, 1e-8 zero)", pass,
         fmt("worst rel diff %.3e (%s)", worst, worst_name.c_str()));
}

// 3. P_ln against the quoted constant and the MC oracle.
void criterion3() {
  const double quoted = -0.84961;
  QuadratureOptions q;
  q.method = QuadratureOptions::Method::monte_carlo;
  q.seed = 42;

  bool quoted_pass = false;
  std::string variant_used;
  double det_used = 0.0;
  for (LogVariant v : {kDefaultLogVariant,
                       kDefaultLogVariant == LogVariant::SqL0 ? LogVariant::TwoSqL0
                                                              : LogVariant::SqL0}) {
    const double det = p_ln(1.0, 1.0, 1.0, 1e-9, v);
    if (std::abs(det - quoted) <= 5e-4) {
      quoted_pass = true;
      variant_used = v == LogVariant::SqL0 ? "sq_l0" : "two_sq_l0";
      det_used = det;
      break;
    }
    if (variant_used.empty()) {
      variant_used = v == LogVariant::SqL0 ? "sq_l0" : "two_sq_l0";
      det_used = det;
    }
  }

  const McEstimate mc = pln_oracle(1.0, 1.0, 1.0, q, 10000000, kDefaultLogVariant);
  const double det_default = p_ln(1.0, 1.0, 1.0, 1e-9, kDefaultLogVariant);
  const bool mc_pass = std::abs(mc.value - det_default) <= 3.0 * mc.std_error;

  report(3, "P_ln reproduces the quoted -0.84961 (5e-4) and the MC oracle (3 sigma)",
         quoted_pass && mc_pass,
         fmt("deterministic=%.6f (variant %s), MC=%.6f +/- %.6f; quoted %.5f; "
             "both log variants evaluate to 1-gamma+ln2=1.11593 and 1-gamma=0.42278, "
             "neither near the quoted value",
             det_used, variant_used.c_str(), mc.value, mc.std_error, quoted));
}

// 4. T = sigma reduction over 1000 random tensors, 1e-12 relative.
void criterion4() {
  std::mt19937_64 rng(271828);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const CurvatureData c = testutil::random_curvature(rng);
    const CurvatureCorrections corr = curvature_corrections(c, 1.3, 1.3, 1.0);
    const double got = corr.ricci_term + corr.riemann_term;
    // at T = sigma the widths scale out of the combination only through the
    // overall closed form; the identity is width-independent
    const double want = -(5.0 * c.scalar() + 3.0 * c.ricci(0, 0)) / (576.0 * kPi2);
    worst = std::max(worst, rel(got, want));
  }
  report(4, "T=sigma reduction to -(5R+3R00)/576pi^2 (1e-12 rel, 1000 tensors)",
         worst <= 1e-12, fmt("worst rel err %.3e", worst));
}

// 5. Vacuum nulling for the Schwarzschild preset.
void criterion5() {
  PresetSpec p;
  p.name = PresetSpec::Name::schwarzschild;
  p.mass = 1.0;
  p.radius = 7.0;
  const CurvatureData c = preset_curvature(p);
  double worst = 0.0;
  for (double T : {0.25, 0.8, 1.7, 3.0})
    for (double s : {0.3, 1.0, 2.4}) {
      const CurvatureCorrections corr = curvature_corrections(c, T, s, 1.0);
      worst = std::max({worst, std::abs(corr.ricci_term),
                        std::abs(corr.riemann_term), std::abs(corr.log_term)});
    }
  report(5, "vacuum nulling for Schwarzschild (1e-12)", worst <= 1e-12,
         fmt("largest |correction| %.3e", worst));
}

// 6. de Sitter end-to-end at T = sigma = l0.
void criterion6() {
  const double H = 0.1;
  PresetSpec p;
  p.name = PresetSpec::Name::de_sitter;
  p.hubble = H;
  const CurvatureData c = preset_curvature(p);
  GaussianSmearing s{0.1, 0.1, 0.1};
  const VarianceBreakdown b = variance_breakdown(c, s);

  // independent arithmetic: R = 12 H^2, R00 = -3 H^2
  const double want_geom = -51.0 * H * H / (576.0 * kPi2);
  const double want_log = H * H * p_ln(0.1, 0.1, 0.1);
  const double got = b.ricci_term + b.riemann_term + b.log_term;
  const double err = rel(got, want_geom + want_log);
  report(6, "de Sitter end-to-end correction -51H^2/576pi^2 + H^2 P_ln", err <= 1e-10,
         fmt("rel err %.3e", err));
}

// 7. Synge world-function scaling.
void criterion7() {
  const std::vector<double> scales{1.0, 0.5, 0.25, 0.125, 0.0625};
  const Vec4 xi_a(0.05, 0.03, -0.02, 0.01), xi_b(-0.02, -0.04, 0.05, 0.02);

  // flat space exactness
  PresetSpec mink;
  const MetricChart mc = preset_chart(mink);
  const Vec4 a(0.1, 0.4, -0.3, 0.2), bpt(0.9, -0.5, 0.6, -0.1);
  const Vec4 d = bpt - a;
  const double flat_exact =
      0.5 * (-d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + d[3] * d[3]);
  const double flat_err = std::abs(world_function_numeric(mc, a, bpt) - flat_exact);

  auto run = [&](const PresetSpec& p, double sep_scale) {
    const MetricChart chart = preset_chart(p);
    const Vec4 base = preset_base_event(p);
    const Mat4 frame = orthonormal_frame(chart, base);
    const Riemann4 riemann = chart_curvature_in_frame(chart, base, frame, 1e-5);
    return sigma_scaling_test(chart, base, frame, riemann, sep_scale * xi_a,
                              sep_scale * xi_b, scales);
  };

  PresetSpec ds;
  ds.name = PresetSpec::Name::de_sitter;
  ds.hubble = 0.5;
  const ScalingResult rds = run(ds, 1.0);

  // larger separations keep the O(s^5) curvature-gradient remainder above the
  // geodesic-solver noise floor
  PresetSpec sw;
  sw.name = PresetSpec::Name::schwarzschild;
  sw.mass = 1.0;
  sw.radius = 10.0;
  const ScalingResult rsw = run(sw, 6.0);

  const ScalingSample& small_ds = rds.samples.back();
  const bool small_ok =
      small_ds.residual < 0.01 * std::abs(small_ds.sigma_numeric);

  const bool pass = rds.fitted_exponent >= 5.5 && rsw.fitted_exponent >= 4.5 &&
                    small_ok && flat_err <= 1e-9;
  report(7, "Synge scaling (dS >= 5.5, Schw >= 4.5, flat 1e-9)", pass,
         fmt("exponents dS=%.2f Schw=%.2f, flat err %.2e", rds.fitted_exponent,
             rsw.fitted_exponent, flat_err));
}

// 8. Van Vleck / determinant expansion orders.
void criterion8() {
  PresetSpec ds;
  ds.name = PresetSpec::Name::de_sitter;
  ds.hubble = 0.5;
  const MetricChart chart = preset_chart(ds);
  const Vec4 base = preset_base_event(ds);
  const Mat4 frame = orthonormal_frame(chart, base);
  const Riemann4 riemann = chart_curvature_in_frame(chart, base, frame, 1e-5);
  RncChart rnc(chart, base, frame);

  const Vec4 xi0(0.04, 0.10, -0.06, 0.08);
  std::vector<double> ss, dev_prod, dev_g;
  for (double s : {1.0, 0.7, 0.5, 0.35, 0.25}) {
    const Vec4 xi = s * xi0;
    ss.push_back(s);
    dev_prod.push_back(std::abs(expansion_vanvleck(riemann, Vec4::Zero(), xi) *
                                    expansion_sqrtg(riemann, xi) -
                                1.0));
    dev_g.push_back(std::abs(sqrtg_numeric(chart, rnc, xi, 1e-4) -
                             expansion_sqrtg(riemann, xi)));
  }
  const double order_prod = loglog_slope(ss, dev_prod);
  const double order_g = loglog_slope(ss, dev_g);
  report(8, "Van Vleck x sqrt(-g) and sqrt(-g) numeric orders >= 3.5",
         order_prod >= 3.5 && order_g >= 3.5,
         fmt("orders: product %.2f, sqrt(-g) %.2f", order_prod, order_g));
}

// 9. Detector channel properties.
void criterion9() {
  std::mt19937_64 rng(314159);
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> xi_dist(0.0, 20.0);
  double worst = 0.0;
  bool ok = true;
  for (int trial = 0; trial < 1000; ++trial) {
    Eigen::Matrix2cd A;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) A(i, j) = std::complex<double>(n(rng), n(rng));
    QubitState in;
    in.rho = A * A.adjoint();
    in.rho /= in.rho.trace();

    const double x1 = xi_dist(rng), x2 = xi_dist(rng);
    const QubitState out = gapless_channel(in, x1);
    // invariants
    worst = std::max(worst, (out.rho - out.rho.adjoint()).cwiseAbs().maxCoeff());
    worst = std::max(worst, std::abs(out.rho.trace().real() - 1.0));
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(out.rho);
    worst = std::max(worst, std::max(0.0, -es.eigenvalues().minCoeff()));
    // composition
    const QubitState two = gapless_channel(out, x2);
    const QubitState one = gapless_channel(in, x1 + x2);
    worst = std::max(worst, (two.rho - one.rho).cwiseAbs().maxCoeff());
    // weight identity: e^-xi cosh xi + e^-xi sinh xi == 1
    const double wsum = std::exp(-x1) * std::cosh(x1) + std::exp(-x1) * std::sinh(x1);
    worst = std::max(worst, std::abs(wsum - 1.0));
  }
  ok = worst <= 1e-12;

  GaussianSmearing s{0.9, 1.2, 1.0};
  const double p0 = gapped_probability_minkowski(1.0, 0.0, s, 1e-11);
  const double gap_err = rel(p0, minkowski_variance(0.9, 1.2));
  ok = ok && gap_err <= 1e-9;
  report(9, "detector channel invariants, composition, gapped Omega=0 link", ok,
         fmt("worst channel dev %.3e, gapped rel err %.3e", worst, gap_err));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
