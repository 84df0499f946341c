#pragma once

// Point curvature data in an orthonormal frame, signature (-,+,+,+).
//
// Conventions used throughout the library:
//   eta_{ab} = diag(-1,+1,+1,+1)
//   R^a_{bcd} = d_c Gamma^a_{bd} - d_d Gamma^a_{bc} + Gamma Gamma
//   R_{ab}   = eta^{cd} R_{cadb},   R = eta^{ab} R_{ab}
// With these choices sum_i R_{0i0i} = R_{00} and
// sum_{ij} R_{ijij} = R^i_i + R_{00}.

#include <array>
#include <cstddef>
#include <vector>

namespace curvar {

/// eta_{ab} (== eta^{ab}): nonzero only on the diagonal.
inline double eta(int a, int b) {
  if (a != b) return 0.0;
  return a == 0 ? -1.0 : 1.0;
}

/// One independent Riemann component R_{abcd} = value, indices in {0..3}.
struct RiemannComponent {
  int a, b, c, d;
  double value;
};

struct CurvatureSums {
  double sum_0i0i;          // sum_i R_{0i0i}
  double sum_ijij;          // sum_{ij} R_{ijij}
  double r00;               // R_{00}
  double r_spatial_trace;   // sum_i R_{ii}
};

/// Fully symmetrized Riemann tensor at a point plus derived Ricci data.
/// Immutable after construction; all accessors are pure.
class CurvatureData {
 public:
  /// Builds the dense tensor from a list of independent components,
  /// filling everything related by antisymmetry and pair symmetry.
  /// Throws SymmetryViolation if given components contradict each other
  /// (relative to the largest magnitude, tolerance 1e-12) and
  /// BianchiViolation if the first Bianchi identity fails beyond 1e-10.
  static CurvatureData from_components(const std::vector<RiemannComponent>& components);

  /// All-zero tensor (Minkowski).
  static CurvatureData zero();

  double riemann(int a, int b, int c, int d) const {
    return riemann_[idx(a, b, c, d)];
  }
  double ricci(int a, int b) const { return ricci_[a * 4 + b]; }
  double scalar() const { return scalar_; }

  CurvatureSums sums() const;
  double max_abs_riemann() const;

 private:
  CurvatureData() = default;
  static std::size_t idx(int a, int b, int c, int d) {
    return static_cast<std::size_t>(((a * 4 + b) * 4 + c) * 4 + d);
  }
  void derive_ricci();

  std::array<double, 256> riemann_{};
  std::array<double, 16> ricci_{};
  double scalar_ = 0.0;
};

/// R_{ab} = eta^{cd} R_{cadb} and R = eta^{ab} R_{ab}, recomputed by brute
/// force from the stored Riemann components.
std::pair<std::array<double, 16>, double> ricci_and_scalar(const CurvatureData& c);

CurvatureSums curvature_sums(const CurvatureData& c);

}  // namespace curvar
