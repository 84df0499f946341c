#include "curvar/variance.hpp"

#include <cmath>

#include "curvar/quadrature.hpp"

namespace curvar {

namespace {
constexpr double kPi2 = M_PI * M_PI;
}

double minkowski_variance(double T, double sigma) {
  GaussianSmearing{T, sigma, 1.0}.validate();
  return 1.0 / (8.0 * kPi2 * (sigma * sigma + T * T));
}

CoefficientSet closed_form_coefficients(double T, double sigma) {
  GaussianSmearing{T, sigma, 1.0}.validate();
  CoefficientSet k;
  const double T2 = T * T, s2 = sigma * sigma;
  const double S = T2 + s2, S2 = S * S, S3 = S2 * S;

  k.L2[0][0] = T2 / (4.0 * kPi2 * S);
  for (int i = 1; i < 4; ++i) k.L2[i][i] = s2 / (4.0 * kPi2 * S);

  k.A2[0][0] = T2 * s2 / (8.0 * kPi2 * S2);
  for (int i = 1; i < 4; ++i)
    k.A2[i][i] = (3.0 * T2 * s2 + 2.0 * s2 * s2) / (24.0 * kPi2 * S2);

  const double b_0i0j = T2 * s2 * s2 / (12.0 * kPi2 * S3);
  const double b_i00j = -T2 * s2 * (2.0 * T2 + s2) / (12.0 * kPi2 * S3);
  const double b_0ij0 = s2 * s2 * (2.0 * T2 + s2) / (12.0 * kPi2 * S3);
  const double b_ilkj = -s2 * (15.0 * T2 * T2 + 20.0 * T2 * s2 + 7.0 * s2 * s2) /
                        (120.0 * kPi2 * S3);                 // delta^il delta^jk part
  const double b_ikjl = -2.0 * s2 * s2 * s2 / (120.0 * kPi2 * S3);  // delta^ik delta^jl part
  // The delta^ij delta^kl structure carries the same 2 sigma^4 weight; its
  // contraction with the Riemann tensor vanishes by antisymmetry, so source
  // listings drop it, but it is needed for the componentwise oracle identity
  // (e.g. B^{1111}, B^{1122}).
  const double b_ijkl = b_ikjl;
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j) {
      if (i == j) {
        k.B4[0][i][0][j] = b_0i0j;
        k.B4[i][0][0][j] = b_i00j;
        k.B4[0][i][j][0] = b_0ij0;
      }
      for (int kk = 1; kk < 4; ++kk)
        for (int l = 1; l < 4; ++l) {
          double v = 0.0;
          if (i == l && j == kk) v += b_ilkj;
          if (i == kk && j == l) v += b_ikjl;
          if (i == j && kk == l) v += b_ijkl;
          k.B4[i][j][kk][l] = v;
        }
    }

  // Ltilde = (1/8pi^2)(B + delta^{ad} A^{bc}), restricted to the slot
  // patterns whose contraction with the Riemann tensor survives; everything
  // else is zero by the Gaussian parity argument.
  const double pref = 1.0 / (8.0 * kPi2);
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j) {
      if (i == j) {
        k.Ltilde4[0][i][0][j] = pref * k.B4[0][i][0][j];
        k.Ltilde4[i][0][0][j] = pref * (k.B4[i][0][0][j] + k.A2[0][0]);
        k.Ltilde4[0][i][j][0] = pref * (k.B4[0][i][j][0] + k.A2[i][j]);
      }
      for (int kk = 1; kk < 4; ++kk)
        for (int l = 1; l < 4; ++l) {
          double v = k.B4[i][j][kk][l];
          if (i == l) v += k.A2[j][kk];
          k.Ltilde4[i][j][kk][l] = pref * v;
        }
    }
  return k;
}

double p_ln(double T, double sigma, double l0, double rel_tol, LogVariant variant) {
  GaussianSmearing{T, sigma, l0}.validate();
  // Dt ~ N(0, su^2), |Dx| Maxwell with per-component std ss.
  const double su = std::sqrt(2.0) * T;
  const double ss = std::sqrt(2.0) * sigma;
  const double norm_u = std::sqrt(2.0 / M_PI) / su;
  const double norm_r = std::sqrt(2.0 / M_PI) / (ss * ss * ss);
  const double u_max = 12.0 * su;

  auto inner = [&](double r) {
    auto f = [&](double u) {
      const double q = std::abs(r * r - u * u);
      if (q == 0.0) return 0.0;
      return norm_u * std::exp(-u * u / (2.0 * su * su)) * std::log(q);
    };
    const QuadResult q = integrate_adaptive(f, 0.0, u_max + r, 1e-14,
                                            0.1 * rel_tol, 400'000, {r});
    return q.value;
  };
  auto outer = [&](double r) {
    return norm_r * r * r * std::exp(-r * r / (2.0 * ss * ss)) * inner(r);
  };
  const QuadResult q =
      integrate_adaptive(outer, 0.0, 12.0 * ss, 1e-13, rel_tol, 4'000'000);

  double value = q.value - 2.0 * std::log(l0);
  if (variant == LogVariant::TwoSqL0) value -= std::log(2.0);
  return value;
}

CurvatureCorrections curvature_corrections(const CurvatureData& c, double T,
                                           double sigma, double l0,
                                           LogVariant variant) {
  const CurvatureSums s = c.sums();
  const double T2 = T * T, s2 = sigma * sigma;
  const double S = T2 + s2;

  CurvatureCorrections out;
  out.ricci_term = -(T2 * s.r00 + s2 * s.r_spatial_trace) / (48.0 * kPi2 * S);
  out.riemann_term =
      s2 * (T2 * T2 + 4.0 * T2 * s2 + 2.0 * s2 * s2) / (72.0 * kPi2 * S * S * S) *
          s.sum_0i0i +
      s2 * s2 / (144.0 * kPi2 * S * S) * s.sum_ijij;
  const double scalar = c.scalar();
  out.log_term = scalar == 0.0 ? 0.0
                               : scalar / 12.0 * p_ln(T, sigma, l0, 1e-9, variant);
  return out;
}

double riemann_term_contraction(const CurvatureData& c, const CoefficientSet& k) {
  double s = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int cc = 0; cc < 4; ++cc)
        for (int d = 0; d < 4; ++d)
          s += c.riemann(a, b, cc, d) * k.Ltilde4[a][b][cc][d];
  return -4.0 * kPi2 / 3.0 * s;
}

VarianceBreakdown variance_breakdown(const CurvatureData& c,
                                     const GaussianSmearing& s,
                                     double state_term, LogVariant variant) {
  s.validate();
  VarianceBreakdown b;
  b.minkowski = minkowski_variance(s.T, s.sigma);
  const CurvatureCorrections corr =
      curvature_corrections(c, s.T, s.sigma, s.l0, variant);
  b.ricci_term = corr.ricci_term;
  b.riemann_term = corr.riemann_term;
  b.log_term = corr.log_term;
  b.state_term = state_term;
  b.total = b.minkowski + b.ricci_term + b.riemann_term + b.log_term + b.state_term;
  b.ell_times_sqrt_curvature =
      std::max(s.T, s.sigma) * std::sqrt(c.max_abs_riemann());
  b.validity_warning = b.ell_times_sqrt_curvature > 0.1;
  return b;
}

}  // namespace curvar
