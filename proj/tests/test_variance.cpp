#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "curvar/presets.hpp"
#include "curvar/variance.hpp"
#include "test_util.hpp"

using namespace curvar;

namespace {
constexpr double kPi2 = M_PI * M_PI;
}

TEST_CASE("Minkowski variance closed form") {
  CHECK(minkowski_variance(0.1, 0.1) == doctest::Approx(1.0 / (16.0 * kPi2 * 0.01)));
  CHECK(minkowski_variance(1.0, 2.0) == doctest::Approx(1.0 / (40.0 * kPi2)));
}

TEST_CASE("coefficient closed forms at sample widths") {
  const double T = 0.7, s = 1.3;
  const double S = T * T + s * s;
  const CoefficientSet c = closed_form_coefficients(T, s);

  CHECK(c.L2[0][0] == doctest::Approx(T * T / (4.0 * kPi2 * S)));
  CHECK(c.L2[2][2] == doctest::Approx(s * s / (4.0 * kPi2 * S)));
  CHECK(c.L2[0][1] == 0.0);

  CHECK(c.A2[0][0] == doctest::Approx(T * T * s * s / (8.0 * kPi2 * S * S)));
  CHECK(c.A2[1][1] == doctest::Approx((3 * T * T * s * s + 2 * std::pow(s, 4)) /
                                      (24.0 * kPi2 * S * S)));

  CHECK(c.B4[0][1][0][1] ==
        doctest::Approx(T * T * std::pow(s, 4) / (12.0 * kPi2 * std::pow(S, 3))));
  CHECK(c.B4[1][0][0][1] ==
        doctest::Approx(-T * T * s * s * (2 * T * T + s * s) /
                        (12.0 * kPi2 * std::pow(S, 3))));
  CHECK(c.B4[0][1][1][0] ==
        doctest::Approx(std::pow(s, 4) * (2 * T * T + s * s) /
                        (12.0 * kPi2 * std::pow(S, 3))));
  // B^{ijkl} with i=l, j=k, i != j  ->  -(s^2/120 pi^2 S^3)(15T^4+20T^2s^2+7s^4)
  CHECK(c.B4[1][2][2][1] ==
        doctest::Approx(-s * s *
                        (15 * std::pow(T, 4) + 20 * T * T * s * s + 7 * std::pow(s, 4)) /
                        (120.0 * kPi2 * std::pow(S, 3))));
  // i=k, j=l, i != j  ->  -(s^2/120 pi^2 S^3)(2 s^4)
  CHECK(c.B4[1][2][1][2] ==
        doctest::Approx(-2.0 * std::pow(s, 6) / (120.0 * kPi2 * std::pow(S, 3))));

  // Ltilde assembly uses the Kronecker delta: Lt^{abcd} = (B + delta^{ad} A^{bc})/8pi^2
  CHECK(c.Ltilde4[1][0][0][1] ==
        doctest::Approx((c.B4[1][0][0][1] + c.A2[0][0]) / (8.0 * kPi2)));
  CHECK(c.Ltilde4[0][1][1][0] ==
        doctest::Approx((c.B4[0][1][1][0] + c.A2[1][1]) / (8.0 * kPi2)));
  CHECK(c.Ltilde4[0][1][0][1] == doctest::Approx(c.B4[0][1][0][1] / (8.0 * kPi2)));
}

TEST_CASE("riemann trace formula equals dense Ltilde contraction") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const CurvatureData c = testutil::random_curvature(rng);
    const double T = 0.5 + 0.1 * trial * 0.01, s = 1.4;
    const CoefficientSet k = closed_form_coefficients(T, s);
    const CurvatureCorrections corr = curvature_corrections(c, T, s, 1.0);
    const double dense = riemann_term_contraction(c, k);
    CHECK(corr.riemann_term == doctest::Approx(dense).epsilon(1e-10));
  }
}

TEST_CASE("T = sigma reduction to -(5R + 3R00)/576 pi^2") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const CurvatureData c = testutil::random_curvature(rng);
    const CurvatureCorrections corr = curvature_corrections(c, 1.0, 1.0, 1.0);
    const double got = corr.ricci_term + corr.riemann_term;
    const double want =
        -(5.0 * c.scalar() + 3.0 * c.ricci(0, 0)) / (576.0 * kPi2);
    CHECK(got == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("vacuum nulling for Ricci-flat curvature") {
  PresetSpec p;
  p.name = PresetSpec::Name::schwarzschild;
  p.mass = 1.0;
  p.radius = 6.0;
  const CurvatureData c = preset_curvature(p);
  for (double T : {0.3, 1.0, 2.5})
    for (double s : {0.4, 1.0, 1.7}) {
      const CurvatureCorrections corr = curvature_corrections(c, T, s, 1.0);
      CHECK(std::abs(corr.ricci_term) < 1e-12);
      CHECK(std::abs(corr.riemann_term) < 1e-12);
      CHECK(std::abs(corr.log_term) < 1e-12);
    }
}

TEST_CASE("de Sitter breakdown assembles consistently") {
  const double H = 0.1;
  PresetSpec p;
  p.name = PresetSpec::Name::de_sitter;
  p.hubble = H;
  const CurvatureData c = preset_curvature(p);
  GaussianSmearing s{0.1, 0.1, 0.1};
  const VarianceBreakdown b = variance_breakdown(c, s);

  CHECK(b.minkowski == doctest::Approx(1.0 / (16.0 * kPi2 * 0.01)));
  // T = sigma: ricci + riemann = -51 H^2 / (576 pi^2); log = H^2 P_ln
  CHECK(b.ricci_term + b.riemann_term ==
        doctest::Approx(-51.0 * H * H / (576.0 * kPi2)).epsilon(1e-12));
  CHECK(b.log_term == doctest::Approx(H * H * p_ln(0.1, 0.1, 0.1)).epsilon(1e-9));
  CHECK(b.total == doctest::Approx(b.minkowski + b.ricci_term + b.riemann_term +
                                   b.log_term + b.state_term));
  CHECK_FALSE(b.validity_warning);
}

TEST_CASE("p_ln deterministic value and scale dependence") {
  // At T = sigma = l0 the exact value of E[ln((Dx)^2/l0^2)] is
  // 1 - gamma + ln 2; the /2l0^2 variant subtracts ln 2.
  const double euler_gamma = 0.57721566490153286;
  const double v1 = p_ln(1.0, 1.0, 1.0, 1e-10, LogVariant::SqL0);
  CHECK(v1 == doctest::Approx(1.0 - euler_gamma + std::log(2.0)).epsilon(1e-8));
  const double v2 = p_ln(1.0, 1.0, 1.0, 1e-10, LogVariant::TwoSqL0);
  CHECK(v2 == doctest::Approx(1.0 - euler_gamma).epsilon(1e-8));
  // l0 only shifts by -2 ln l0
  const double shifted = p_ln(1.0, 1.0, 2.0, 1e-10, LogVariant::SqL0);
  CHECK(shifted == doctest::Approx(v1 - 2.0 * std::log(2.0)).epsilon(1e-8));
}

TEST_CASE("validity warning trips") {
  std::mt19937_64 rng(5);
  const CurvatureData c = testutil::random_curvature(rng, 10.0);
  GaussianSmearing s{1.0, 1.0, 1.0};
  const VarianceBreakdown b = variance_breakdown(c, s);
  CHECK(b.validity_warning);
  CHECK(b.ell_times_sqrt_curvature > 0.1);
}
