#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "curvar/presets.hpp"

namespace curvar {

struct GeodesicSolution {
  std::vector<double> lambdas;           // affine parameter samples in [0, 1]
  std::vector<std::array<double, 8>> states;  // (x^mu, dx^mu/dlambda)
  Vec4 initial_velocity{};               // dx/dlambda at lambda = 0
  int newton_iterations = 0;
  int rhs_evaluations = 0;

  Vec4 position_at(double lambda) const;
  Vec4 velocity_at(double lambda) const;
};

struct SolverOptions {
  double ode_tol = 1e-12;
  double newton_tol = 1e-12;
  int max_newton_iterations = 60;
  int max_ode_steps = 200000;
};

// Integrate the geodesic equation from (x0, v0) over lambda in [0, 1].
GeodesicSolution integrate_geodesic(const MetricChart& chart, const Vec4& x0,
                                    const Vec4& v0, const SolverOptions& opts = {});

// Shooting solve for the geodesic with x(0) = x0, x(1) = x1.
GeodesicSolution geodesic_connect(const MetricChart& chart, const Vec4& x0,
                                  const Vec4& x1, const SolverOptions& opts = {});

// Synge world function sigma(x0, x1) = (1/2) g(v0, v0) along the connecting
// geodesic with unit affine span.
double world_function_numeric(const MetricChart& chart, const Vec4& x0,
                              const Vec4& x1, const SolverOptions& opts = {});

// Riemann normal coordinates about a base event, frame legs given as the
// columns of an orthonormal tetrad (first leg timelike).
class RncChart {
 public:
  RncChart(MetricChart chart, Vec4 base, Mat4 frame, SolverOptions opts = {});

  // xi -> chart coordinates of exp_base(xi^a e_a).
  Vec4 to_chart(const Vec4& xi) const;
  // chart coordinates -> xi (shooting solve).
  Vec4 from_chart(const Vec4& x) const;

  const Vec4& base() const { return base_; }
  const Mat4& frame() const { return frame_; }

 private:
  MetricChart chart_;
  Vec4 base_;
  Mat4 frame_;  // column a = leg e_a in chart components
  SolverOptions opts_;
};

struct ScalingSample {
  double s = 0.0;            // separation scale factor
  double sigma_numeric = 0.0;
  double sigma_flat = 0.0;   // (1/2) eta_{ab} xi^a xi^b in the frame
  double sigma_expansion = 0.0;  // flat + leading curvature correction
  double residual = 0.0;     // |numeric - expansion|
};

struct ScalingResult {
  std::vector<ScalingSample> samples;
  double fitted_exponent = 0.0;  // least-squares slope of log|residual| vs log s
};

// Shrink a fixed frame-space separation pair by factors s and fit the order of
// the remainder after subtracting the known expansion terms.
ScalingResult sigma_scaling_test(const MetricChart& chart, const Vec4& base,
                                 const Mat4& frame, const Riemann4& frame_riemann,
                                 const Vec4& xi_a, const Vec4& xi_b,
                                 const std::vector<double>& scales,
                                 const SolverOptions& opts = {});

std::string scaling_csv(const ScalingResult& r);

// Least-squares slope of log(y) against log(x); used for convergence-order fits.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace curvar
