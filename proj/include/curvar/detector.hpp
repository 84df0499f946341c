#pragma once

// Qubit detector dephasing from the smeared field variance. In the gapless
// limit the interaction acts as a bit-flip channel whose flip parameter is
// xi = lambda^2 <phi(Lambda)^2>.

#include <Eigen/Dense>
#include <complex>

#include "curvar/variance.hpp"

namespace curvar {

struct QubitState {
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Identity() * 0.5;

  /// Throws InvalidState unless rho is Hermitian, unit trace, and positive
  /// semidefinite (all to tolerance tol).
  void validate(double tol = 1e-12) const;

  static QubitState ground();   // |0><0|
  static QubitState excited();  // |1><1|
  static QubitState plus();     // |+><+|
};

/// Bit-flip channel with flip weight derived from xi >= 0:
///   rho -> p_keep rho + p_flip X rho X,
///   p_keep = (1 + e^{-2 xi}) / 2, p_flip = (1 - e^{-2 xi}) / 2.
QubitState gapless_channel(const QubitState& in, double xi);

struct ChannelStrength {
  double xi = 0.0;       // dimensionless flip strength, >= 0
  double coupling = 0.0; // lambda
};

/// xi = coupling^2 * variance; throws NegativeVariance if the (truncated)
/// variance argument is negative.
ChannelStrength xi_from_variance(double coupling, const VarianceBreakdown& v);

struct DetectorResult {
  QubitState final;
  VarianceBreakdown breakdown;
  ChannelStrength strength;
};

/// Full pipeline: curvature-corrected variance -> xi -> channel (single code
/// path through gapless_channel).
DetectorResult curvature_corrected_state(double coupling, const GaussianSmearing& s,
                                         const CurvatureData& curvature,
                                         double state_term, const QubitState& rho0,
                                         LogVariant variant = kDefaultLogVariant);

/// Flat-space excitation probability of a gapped detector (gap Omega,
/// Gaussian smearing), ground start, first nonvanishing order in the
/// coupling: lambda^2/(4 pi^2) int_0^inf k e^{-T^2 (k + Omega)^2 - sigma^2 k^2} dk.
double gapped_probability_minkowski(double coupling, double gap,
                                    const GaussianSmearing& s,
                                    double rel_tol = 1e-10);

}  // namespace curvar
