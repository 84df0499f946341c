#pragma once

// Independent brute-force evaluation of the momentum-space integrals behind
// every closed-form coefficient, plus Monte-Carlo cross-checks. These stay
// deliberately separate from the closed forms they validate.

#include <cstdint>
#include <vector>

#include "curvar/smearing.hpp"
#include "curvar/variance.hpp"

namespace curvar {

struct QuadratureOptions {
  enum class Method { deterministic_radial, monte_carlo };
  Method method = Method::deterministic_radial;
  double tolerance = 1e-9;  // relative
  std::int64_t max_evaluations = 4'000'000;
  std::uint64_t seed = 0;                 // monte_carlo only
  std::vector<double> epsilon_sequence{}; // position-space regulator, descending

  void validate() const;
};

/// (1/(2pi)^3) int d^3k/(2|k|) |Lt(|k|,k)|^2, reduced to the 1D radial
/// integral (k / 4pi^2) exp(-(T^2+sigma^2) k^2).
double variance_momentum_quadrature(const GaussianSmearing& s,
                                    const QuadratureOptions& q);

enum class CoefficientTarget { L2, A2, B4 };

/// Momentum-space oracle for one component of L^{ab}, A^{bc} or B^{abcd}.
/// L2 is assembled as the sum of the four monomial placements of
/// (x+x')^a (x+x')^b.
double coefficient_oracle(double T, double sigma, CoefficientTarget target,
                          const std::vector<int>& indices,
                          const QuadratureOptions& q);

/// Generic reduced integral (1/(2pi)^3) int d^3k/(2|k|) Lt1 conj(Lt2); the
/// angular part is a low-degree polynomial in the direction and is integrated
/// exactly by fixed-order product quadrature, the radial part adaptively.
double momentum_pair_integral(const EffectiveSmearing& e1,
                              const EffectiveSmearing& e2,
                              const QuadratureOptions& q);

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
};

/// Monte-Carlo estimate of P_ln by direct sampling of the Gaussian difference
/// distribution. Deterministic for a fixed seed, independent of threading
/// (chunked substreams).
McEstimate pln_oracle(double T, double sigma, double l0, const QuadratureOptions& q,
                      std::int64_t samples = 10'000'000,
                      LogVariant variant = kDefaultLogVariant);

enum class PositionKernel { W0, W0_times_monomials };

/// Position-space Monte-Carlo of int int L(x) L(x') Re W0 d4x d4x' with the
/// i-epsilon regulator, Richardson-extrapolated over q.epsilon_sequence.
/// For W0_times_monomials the insertion is (x+x')^a (x+x')^b with the index
/// pair (a, b).
McEstimate position_space_mc(const GaussianSmearing& s, PositionKernel kernel,
                             const QuadratureOptions& q,
                             std::int64_t samples = 4'000'000, int a = 0, int b = 0);

struct CoefficientCheck {
  std::string coefficient;
  double closed_form = 0.0;
  double oracle = 0.0;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Machine-readable oracle-vs-closed-form report over every independent
/// nonzero component plus representative paper-zero components.
std::vector<CoefficientCheck> validate_coefficients(double T, double sigma,
                                                    const QuadratureOptions& q);

}  // namespace curvar
