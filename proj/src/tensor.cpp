#include "curvar/tensor.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "curvar/errors.hpp"

namespace curvar {

namespace {
constexpr double kSymmetryTol = 1e-12;
constexpr double kBianchiTol = 1e-10;
}  // namespace

CurvatureData CurvatureData::zero() {
  CurvatureData c;
  return c;
}

CurvatureData CurvatureData::from_components(
    const std::vector<RiemannComponent>& components) {
  CurvatureData c;
  std::array<bool, 256> set{};
  double max_abs = 0.0;
  for (const auto& comp : components) max_abs = std::max(max_abs, std::abs(comp.value));
  const double tol = kSymmetryTol * std::max(max_abs, 1.0);

  auto assign = [&](int a, int b, int cc, int d, double v) {
    const std::size_t i = idx(a, b, cc, d);
    if (set[i]) {
      if (std::abs(c.riemann_[i] - v) > tol) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "R_%d%d%d%d: %.17g contradicts symmetry-related value %.17g",
                      a, b, cc, d, v, c.riemann_[i]);
        throw SymmetryViolation(buf);
      }
      return;
    }
    set[i] = true;
    c.riemann_[i] = v;
  };

  for (const auto& comp : components) {
    if (comp.a < 0 || comp.a > 3 || comp.b < 0 || comp.b > 3 || comp.c < 0 ||
        comp.c > 3 || comp.d < 0 || comp.d > 3) {
      throw SymmetryViolation("Riemann index out of range");
    }
    if (!std::isfinite(comp.value)) throw SymmetryViolation("non-finite Riemann component");
    const int a = comp.a, b = comp.b, cc = comp.c, d = comp.d;
    const double v = comp.value;
    // antisymmetry in (ab) and (cd), symmetry under pair exchange
    assign(a, b, cc, d, v);
    assign(b, a, cc, d, -v);
    assign(a, b, d, cc, -v);
    assign(b, a, d, cc, v);
    assign(cc, d, a, b, v);
    assign(d, cc, a, b, -v);
    assign(cc, d, b, a, -v);
    assign(d, cc, b, a, v);
  }

  // first Bianchi identity R_{a[bcd]} = 0
  const double bianchi_tol = kBianchiTol * std::max(c.max_abs_riemann(), 1.0);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int cc = 0; cc < 4; ++cc)
        for (int d = 0; d < 4; ++d) {
          const double r = c.riemann(a, b, cc, d) + c.riemann(a, cc, d, b) +
                           c.riemann(a, d, b, cc);
          if (std::abs(r) > bianchi_tol) {
            char buf[128];
            std::snprintf(buf, sizeof(buf),
                          "first Bianchi residual %.3e at (%d%d%d%d)", r, a, b, cc, d);
            throw BianchiViolation(buf);
          }
        }

  c.derive_ricci();
  return c;
}

void CurvatureData::derive_ricci() {
  scalar_ = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double r = 0.0;
      for (int c = 0; c < 4; ++c) r += eta(c, c) * riemann(c, a, c, b);
      ricci_[a * 4 + b] = r;
      scalar_ += eta(a, b) * r * (a == b ? 1.0 : 0.0);
    }
}

CurvatureSums CurvatureData::sums() const { return curvature_sums(*this); }

double CurvatureData::max_abs_riemann() const {
  double m = 0.0;
  for (double v : riemann_) m = std::max(m, std::abs(v));
  return m;
}

std::pair<std::array<double, 16>, double> ricci_and_scalar(const CurvatureData& c) {
  std::array<double, 16> ricci{};
  double scalar = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double r = 0.0;
      for (int d = 0; d < 4; ++d) r += eta(d, d) * c.riemann(d, a, d, b);
      ricci[a * 4 + b] = r;
      if (a == b) scalar += eta(a, b) * r;
    }
  return {ricci, scalar};
}

CurvatureSums curvature_sums(const CurvatureData& c) {
  CurvatureSums s{0.0, 0.0, 0.0, 0.0};
  for (int i = 1; i < 4; ++i) {
    s.sum_0i0i += c.riemann(0, i, 0, i);
    s.r_spatial_trace += c.ricci(i, i);
    for (int j = 1; j < 4; ++j) s.sum_ijij += c.riemann(i, j, i, j);
  }
  s.r00 = c.ricci(0, 0);
  return s;
}

}  // namespace curvar
