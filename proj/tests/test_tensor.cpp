#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvar/errors.hpp"
#include "curvar/tensor.hpp"
#include "test_util.hpp"

using namespace curvar;

TEST_CASE("symmetry fill from one component") {
  const auto c = CurvatureData::from_components({{0, 1, 0, 1, 2.0}});
  CHECK(c.riemann(0, 1, 0, 1) == doctest::Approx(2.0));
  CHECK(c.riemann(1, 0, 0, 1) == doctest::Approx(-2.0));
  CHECK(c.riemann(0, 1, 1, 0) == doctest::Approx(-2.0));
  CHECK(c.riemann(1, 0, 1, 0) == doctest::Approx(2.0));
  CHECK(c.riemann(0, 0, 1, 1) == 0.0);
}

TEST_CASE("contradictory inputs are rejected") {
  CHECK_THROWS_AS(CurvatureData::from_components(
                      {{0, 1, 0, 1, 1.0}, {1, 0, 0, 1, 1.0}}),
                  SymmetryViolation);
}

TEST_CASE("Bianchi violation is rejected") {
  // R_{0123} + R_{0231} + R_{0312} must vanish; set only one of them.
  CHECK_THROWS_AS(CurvatureData::from_components({{0, 1, 2, 3, 1.0}}),
                  BianchiViolation);
}

TEST_CASE("Ricci and scalar for a known tensor") {
  // Constant curvature R_{abab} = K eta_aa eta_bb (a != b) has
  // R_{ab} = 3 K eta_ab and R = 12 K.
  const double K = 0.25;
  std::vector<RiemannComponent> comps;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      comps.push_back({a, b, a, b, K * eta(a, a) * eta(b, b)});
  const auto c = CurvatureData::from_components(comps);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(c.ricci(a, b) == doctest::Approx(3.0 * K * eta(a, b)).epsilon(1e-12));
  CHECK(c.scalar() == doctest::Approx(12.0 * K).epsilon(1e-12));
}

TEST_CASE("trace identities of the sums") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const CurvatureData c = testutil::random_curvature(rng);
    const CurvatureSums s = c.sums();
    CHECK(s.sum_0i0i == doctest::Approx(s.r00).epsilon(1e-12));
    CHECK(s.sum_ijij ==
          doctest::Approx(s.r_spatial_trace + s.r00).epsilon(1e-12));
    const auto [ric, scal] = ricci_and_scalar(c);
    CHECK(scal == doctest::Approx(-s.r00 + s.r_spatial_trace).epsilon(1e-12));
  }
}

TEST_CASE("random generator produces valid tensors") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial)
    CHECK_NOTHROW(testutil::random_curvature(rng));
}
