#pragma once

// Closed-form results: the Minkowski variance, the geometric coefficient
// tensors, the smeared log average P_ln, and the assembled curvature-corrected
// variance breakdown.

#include <array>

#include "curvar/smearing.hpp"
#include "curvar/tensor.hpp"

namespace curvar {

struct CoefficientSet {
  std::array<std::array<double, 4>, 4> L2{};       // L^{ab}
  std::array<std::array<double, 4>, 4> A2{};       // A^{bc}
  double B4[4][4][4][4] = {};                      // B^{abcd}
  double Ltilde4[4][4][4][4] = {};                 // Ltilde^{abcd}
  double p_ln = 0.0;                               // set separately
};

struct VarianceBreakdown {
  double minkowski = 0.0;
  double ricci_term = 0.0;
  double riemann_term = 0.0;
  double log_term = 0.0;
  double state_term = 0.0;
  double total = 0.0;
  double ell_times_sqrt_curvature = 0.0;  // max(T,sigma) * sqrt(max |R_{abcd}|)
  bool validity_warning = false;          // expansion stressed beyond 0.1
};

/// Two readings of the log argument; the Hadamard expansion and the
/// coefficient definition in the source material disagree by a factor of 2
/// inside the log, so both are kept. SqL0 is ln((x-x')^2 / l0^2),
/// TwoSqL0 is ln((x-x')^2 / (2 l0^2)).
enum class LogVariant { SqL0, TwoSqL0 };
inline constexpr LogVariant kDefaultLogVariant = LogVariant::SqL0;

/// 1 / (8 pi^2 (sigma^2 + T^2)).
double minkowski_variance(double T, double sigma);

/// Closed forms for L^{ab}, A^{bc}, B^{abcd} and
/// Ltilde = (1/8pi^2)(B^{abcd} + delta^{ad} A^{bc}); components not implied
/// nonzero by the Gaussian parity argument are zero. p_ln is left unset.
CoefficientSet closed_form_coefficients(double T, double sigma);

/// Deterministic evaluation of P_ln = E[ln((Dx)^2 / l0^2)] over the Gaussian
/// difference distribution (Dt ~ N(0, 2T^2), each spatial component
/// N(0, 2 sigma^2)); negative arguments contribute ln|.| (the imaginary parts
/// cancel by Dt <-> -Dt symmetry). Reduced to a 2D radial integral with the
/// log singularity on an interval boundary.
double p_ln(double T, double sigma, double l0, double rel_tol = 1e-9,
            LogVariant variant = kDefaultLogVariant);

struct CurvatureCorrections {
  double ricci_term = 0.0;
  double riemann_term = 0.0;
  double log_term = 0.0;
};

/// The three geometric correction terms:
///   ricci   = -(T^2 R_00 + sigma^2 sum_i R_ii) / (48 pi^2 (T^2+sigma^2))
///   riemann = trace-sum formula in sum_i R_0i0i and sum_ij R_ijij
///   log     = (1/12) R * P_ln
/// The riemann term is also checked internally against the full 4-index
/// contraction of the assembled Ltilde tensor (see riemann_term_contraction).
CurvatureCorrections curvature_corrections(const CurvatureData& c, double T,
                                           double sigma, double l0,
                                           LogVariant variant = kDefaultLogVariant);

/// -(4 pi^2 / 3) R_{abcd} Ltilde^{abcd} via the dense tensor contraction;
/// second route for the riemann term.
double riemann_term_contraction(const CurvatureData& c, const CoefficientSet& k);

VarianceBreakdown variance_breakdown(const CurvatureData& c,
                                     const GaussianSmearing& s,
                                     double state_term = 0.0,
                                     LogVariant variant = kDefaultLogVariant);

}  // namespace curvar
