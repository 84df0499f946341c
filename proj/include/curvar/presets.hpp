#pragma once

// Analytic spacetimes: curvature at an event (orthonormal frame) and full
// metric charts for the geodesic solver.
//
// Charts:
//   minkowski           inertial coordinates (t, x, y, z)
//   de_sitter           static patch in "Cartesian" form, domain H|x| < 1,
//                       g_00 = -(1 - H^2 r^2), g_ij = d_ij + H^2 x_i x_j / (1 - H^2 r^2)
//   schwarzschild       Schwarzschild coordinates (t, r, theta, phi), r > 2M
//   constant_curvature  curvature data only (no chart)
//
// The orthonormal frame at an event is the coordinate-aligned Gram-Schmidt
// frame with the time leg along d/dt.

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <string>

#include "curvar/tensor.hpp"

namespace curvar {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

struct PresetSpec {
  enum class Name { minkowski, de_sitter, schwarzschild, constant_curvature };
  Name name = Name::minkowski;
  double hubble = 0.0;  // de_sitter: H > 0                   [1/length]
  double mass = 0.0;    // schwarzschild: M                   [length]
  double radius = 0.0;  // schwarzschild: r of the event      [length]
  double k = 0.0;       // constant_curvature: K, any sign    [1/length^2]

  void validate() const;  // throws DomainError / ConfigError
};

PresetSpec::Name preset_name_from_string(const std::string& s);

/// Christoffel symbols Gamma^mu_{nu rho}, gamma[mu](nu, rho).
using Christoffel = std::array<Mat4, 4>;

struct MetricChart {
  std::function<Mat4(const Vec4&)> metric;
  std::function<Christoffel(const Vec4&)> christoffel;
  std::function<bool(const Vec4&)> in_domain;
};

/// Orthonormal-frame Riemann components at the event implied by the spec
/// (de Sitter / constant curvature: any static event; Schwarzschild: radius r,
/// with frame leg 1 radial).
CurvatureData preset_curvature(const PresetSpec& spec);

MetricChart preset_chart(const PresetSpec& spec);

/// Natural base event for the chart: origin, except Schwarzschild where it is
/// (t=0, r=spec.radius, theta=pi/2, phi=0).
Vec4 preset_base_event(const PresetSpec& spec);

/// Coordinate-aligned Gram-Schmidt frame at z, time leg along d/dt.
/// Columns of the result are the frame legs e_a (a = 0..3).
Mat4 orthonormal_frame(const MetricChart& chart, const Vec4& z);

/// Central-finite-difference Christoffels from the metric alone; test oracle
/// for the analytic christoffel path.
Christoffel christoffel_fd(const MetricChart& chart, const Vec4& x, double h);

using Riemann4 = std::array<std::array<std::array<std::array<double, 4>, 4>, 4>, 4>;

/// Curvature at z from finite differences of the Christoffels, expressed in
/// the given orthonormal frame (columns = legs). Cross-validates
/// preset_curvature against the chart; carries finite-difference noise, so it
/// is returned raw instead of as validated CurvatureData.
Riemann4 chart_curvature_in_frame(const MetricChart& chart, const Vec4& z,
                                  const Mat4& frame, double h);

}  // namespace curvar
