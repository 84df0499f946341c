#include "curvar/expansions.hpp"

#include <cmath>

#include "curvar/errors.hpp"

namespace curvar {

double expansion_sigma(const Riemann4& riemann, const Vec4& xi, const Vec4& xi_p) {
  const Vec4 d = xi_p - xi;
  double s = 0.5 * (-d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + d[3] * d[3]);
  double corr = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int e = 0; e < 4; ++e)
          corr += riemann[a][c][b][e] * xi[a] * xi[b] * xi_p[c] * xi_p[e];
  return s - corr / 6.0;
}

Mat4 ricci_from_riemann(const Riemann4& riemann) {
  Mat4 ric = Mat4::Zero();
  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d)
      for (int a = 0; a < 4; ++a)
        ric(b, d) += eta(a, a) * riemann[a][b][a][d];
  return ric;
}

double expansion_vanvleck(const Riemann4& riemann, const Vec4& xi, const Vec4& xi_p) {
  const Mat4 ric = ricci_from_riemann(riemann);
  const Vec4 s = xi_p - xi;
  return 1.0 + s.dot(ric * s) / 6.0;
}

double expansion_sqrtg(const Riemann4& riemann, const Vec4& xi) {
  const Mat4 ric = ricci_from_riemann(riemann);
  return 1.0 - xi.dot(ric * xi) / 6.0;
}

double vanvleck_numeric(const MetricChart& chart, const RncChart& rnc,
                        const Vec4& xi, const Vec4& xi_p, double h,
                        const SolverOptions& opts) {
  auto sigma_xi = [&](const Vec4& a, const Vec4& b) {
    return world_function_numeric(chart, rnc.to_chart(a), rnc.to_chart(b), opts);
  };

  // Mixed second differences in the normal coordinates themselves; since the
  // exponential map has unit Jacobian at the base and the frame is
  // orthonormal, det g factors at both points reduce to sqrt(-g) in normal
  // coordinates, handled via sqrtg_numeric.
  Mat4 m;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      Vec4 ap = xi, am = xi, bp = xi_p, bm = xi_p;
      ap[a] += h;
      am[a] -= h;
      bp[b] += h;
      bm[b] -= h;
      const double spp = sigma_xi(ap, bp), spm = sigma_xi(ap, bm);
      const double smp = sigma_xi(am, bp), smm = sigma_xi(am, bm);
      m(a, b) = -(spp - spm - smp + smm) / (4.0 * h * h);
    }
  }
  const double det = m.determinant();
  const double ga = sqrtg_numeric(chart, rnc, xi, h);
  const double gb = sqrtg_numeric(chart, rnc, xi_p, h);
  return -det / (ga * gb);
}

double sqrtg_numeric(const MetricChart& chart, const RncChart& rnc,
                     const Vec4& xi, double h) {
  // Metric in normal coordinates: pull the chart metric back through the
  // finite-difference Jacobian of the exponential map.
  Mat4 J;
  for (int a = 0; a < 4; ++a) {
    Vec4 p = xi, m = xi;
    p[a] += h;
    m[a] -= h;
    J.col(a) = (rnc.to_chart(p) - rnc.to_chart(m)) / (2.0 * h);
  }
  const Mat4 g = chart.metric(rnc.to_chart(xi));
  const Mat4 g_rnc = J.transpose() * g * J;
  const double det = g_rnc.determinant();
  if (det >= 0.0) throw InvalidState("metric determinant lost Lorentzian sign");
  return std::sqrt(-det);
}

}  // namespace curvar
