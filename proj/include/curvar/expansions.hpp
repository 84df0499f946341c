#pragma once

// Near-coincidence expansions in Riemann normal coordinates about a base
// event, together with the slow numeric paths used to cross-check them.
// All tensors are frame components at the base event; xi, xi' are normal
// coordinates of the two points.

#include "curvar/geodesics.hpp"
#include "curvar/presets.hpp"
#include "curvar/tensor.hpp"

namespace curvar {

/// sigma(xi, xi') = (1/2) eta_{ab} dxi^a dxi^b
///                  - (1/6) R_{acbd} xi^a xi^b xi'^c xi'^d + O(5)
/// (sign fixed by the constant-curvature closed form under the conventions in
/// tensor.hpp; verified numerically by the scaling tests)
double expansion_sigma(const Riemann4& riemann, const Vec4& xi, const Vec4& xi_p);

/// Van Vleck determinant Delta = 1 + (1/6) R_{ab} s^a s^b + O(3),
/// s = xi' - xi (Ricci of the riemann argument, frame components).
double expansion_vanvleck(const Riemann4& riemann, const Vec4& xi, const Vec4& xi_p);

/// sqrt(-g) in normal coordinates: 1 - (1/6) R_{ab} xi^a xi^b + O(3).
double expansion_sqrtg(const Riemann4& riemann, const Vec4& xi);

/// Ricci frame components of a raw frame Riemann tensor (all indices down):
/// R_{bd} = eta^{ac} R_{abcd}.
Mat4 ricci_from_riemann(const Riemann4& riemann);

/// Numeric Van Vleck determinant via mixed second differences of the numeric
/// world function: Delta = -det(-d^2 sigma / dx dx') / sqrt(g g').
/// In normal coordinates about the base, with metric determinant factors from
/// the chart. Slow; test / validation path only.
double vanvleck_numeric(const MetricChart& chart, const RncChart& rnc,
                        const Vec4& xi, const Vec4& xi_p, double h,
                        const SolverOptions& opts = {});

/// Numeric sqrt(-g) in normal coordinates via finite-difference Jacobian of
/// the exponential map.
double sqrtg_numeric(const MetricChart& chart, const RncChart& rnc,
                     const Vec4& xi, double h);

}  // namespace curvar
