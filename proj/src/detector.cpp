#include "curvar/detector.hpp"

#include <cmath>

#include "curvar/errors.hpp"
#include "curvar/quadrature.hpp"

namespace curvar {

namespace {
const Eigen::Matrix2cd kPauliX = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
}

void QubitState::validate(double tol) const {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw InvalidState("qubit state is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > tol || std::abs(rho.trace().imag()) > tol)
    throw InvalidState("qubit state trace differs from 1");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho);
  if (es.eigenvalues().minCoeff() < -tol)
    throw InvalidState("qubit state has a negative eigenvalue");
}

QubitState QubitState::ground() {
  QubitState s;
  s.rho << 1, 0, 0, 0;
  return s;
}

QubitState QubitState::excited() {
  QubitState s;
  s.rho << 0, 0, 0, 1;
  return s;
}

QubitState QubitState::plus() {
  QubitState s;
  s.rho << 0.5, 0.5, 0.5, 0.5;
  return s;
}

QubitState gapless_channel(const QubitState& in, double xi) {
  if (!(xi >= 0.0)) throw InvalidState("channel strength xi must be >= 0");
  in.validate();
  // e^{-xi} cosh xi and e^{-xi} sinh xi, written to stay exact for large xi.
  const double p_flip = 0.5 * (-std::expm1(-2.0 * xi));
  const double p_keep = 1.0 - p_flip;
  QubitState out;
  out.rho = p_keep * in.rho + p_flip * (kPauliX * in.rho * kPauliX);
  return out;
}

ChannelStrength xi_from_variance(double coupling, const VarianceBreakdown& v) {
  if (v.total < 0.0)
    throw NegativeVariance("total variance is negative; expansion out of regime");
  return {coupling * coupling * v.total, coupling};
}

DetectorResult curvature_corrected_state(double coupling, const GaussianSmearing& s,
                                         const CurvatureData& curvature,
                                         double state_term, const QubitState& rho0,
                                         LogVariant variant) {
  DetectorResult r;
  r.breakdown = variance_breakdown(curvature, s, state_term, variant);
  r.strength = xi_from_variance(coupling, r.breakdown);
  r.final = gapless_channel(rho0, r.strength.xi);
  return r;
}

double gapped_probability_minkowski(double coupling, double gap,
                                    const GaussianSmearing& s, double rel_tol) {
  if (!(gap >= 0.0)) throw ConfigError("detector gap must be >= 0");
  s.validate();
  const double c = s.T * s.T + s.sigma * s.sigma;
  const double kmax = std::sqrt(80.0 / c) + 5.0 * gap;
  auto f = [&](double k) {
    const double kg = k + gap;
    return k * std::exp(-s.T * s.T * kg * kg - s.sigma * s.sigma * k * k);
  };
  const QuadResult r = integrate_adaptive(f, 0.0, kmax, 0.0, rel_tol, 200000);
  return coupling * coupling / (4.0 * M_PI * M_PI) * r.value;
}

}  // namespace curvar
