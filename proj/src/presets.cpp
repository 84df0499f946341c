#include "curvar/presets.hpp"

#include <cmath>

#include "curvar/dual.hpp"
#include "curvar/errors.hpp"

namespace curvar {

namespace {

// Metric components templated on the scalar type so the same expressions
// serve values (double) and first derivatives (Dual4).
template <typename T>
std::array<std::array<T, 4>, 4> metric_components(const PresetSpec& spec,
                                                  const std::array<T, 4>& x) {
  std::array<std::array<T, 4>, 4> g{};
  switch (spec.name) {
    case PresetSpec::Name::minkowski: {
      g[0][0] = T(-1.0);
      g[1][1] = g[2][2] = g[3][3] = T(1.0);
      break;
    }
    case PresetSpec::Name::de_sitter: {
      const double H2 = spec.hubble * spec.hubble;
      T r2 = x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
      T f = T(1.0) - T(H2) * r2;
      g[0][0] = -f;
      for (int i = 1; i < 4; ++i)
        for (int j = 1; j < 4; ++j) {
          g[i][j] = T(H2) * x[i] * x[j] / f;
          if (i == j) g[i][j] = g[i][j] + T(1.0);
        }
      break;
    }
    case PresetSpec::Name::schwarzschild: {
      const double M = spec.mass;
      T r = x[1];
      T theta = x[2];
      using std::sin;
      T f = T(1.0) - T(2.0 * M) / r;
      T st = sin(theta);
      g[0][0] = -f;
      g[1][1] = T(1.0) / f;
      g[2][2] = r * r;
      g[3][3] = r * r * st * st;
      break;
    }
    case PresetSpec::Name::constant_curvature:
      throw DomainError("constant_curvature preset has no metric chart");
  }
  return g;
}

}  // namespace

void PresetSpec::validate() const {
  switch (name) {
    case Name::minkowski:
      break;
    case Name::de_sitter:
      if (!(hubble > 0.0) || !std::isfinite(hubble))
        throw ConfigError("de_sitter requires hubble H > 0");
      break;
    case Name::schwarzschild:
      if (!(mass > 0.0) || !std::isfinite(mass))
        throw ConfigError("schwarzschild requires mass M > 0");
      if (!(radius > 2.0 * mass))
        throw DomainError("schwarzschild requires r > 2M");
      break;
    case Name::constant_curvature:
      if (!std::isfinite(k)) throw ConfigError("constant_curvature requires finite K");
      break;
  }
}

PresetSpec::Name preset_name_from_string(const std::string& s) {
  if (s == "minkowski") return PresetSpec::Name::minkowski;
  if (s == "de_sitter") return PresetSpec::Name::de_sitter;
  if (s == "schwarzschild") return PresetSpec::Name::schwarzschild;
  if (s == "constant_curvature") return PresetSpec::Name::constant_curvature;
  throw ConfigError("unknown preset '" + s + "'");
}

CurvatureData preset_curvature(const PresetSpec& spec) {
  spec.validate();
  switch (spec.name) {
    case PresetSpec::Name::minkowski:
      return CurvatureData::zero();
    case PresetSpec::Name::de_sitter:
    case PresetSpec::Name::constant_curvature: {
      const double K = spec.name == PresetSpec::Name::de_sitter
                           ? spec.hubble * spec.hubble
                           : spec.k;
      std::vector<RiemannComponent> comps;
      // R_{abcd} = K (eta_ac eta_bd - eta_ad eta_bc); independent entries a<b.
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
          comps.push_back({a, b, a, b, K * (eta(a, a) * eta(b, b))});
      return CurvatureData::from_components(comps);
    }
    case PresetSpec::Name::schwarzschild: {
      const double m_r3 = spec.mass / (spec.radius * spec.radius * spec.radius);
      return CurvatureData::from_components({
          {0, 1, 0, 1, -2.0 * m_r3},
          {0, 2, 0, 2, m_r3},
          {0, 3, 0, 3, m_r3},
          {1, 2, 1, 2, -m_r3},
          {1, 3, 1, 3, -m_r3},
          {2, 3, 2, 3, 2.0 * m_r3},
      });
    }
  }
  throw ConfigError("unreachable preset");
}

MetricChart preset_chart(const PresetSpec& spec) {
  spec.validate();
  if (spec.name == PresetSpec::Name::constant_curvature)
    throw DomainError("constant_curvature preset has no metric chart");

  MetricChart chart;
  chart.metric = [spec](const Vec4& x) {
    std::array<double, 4> xv{x[0], x[1], x[2], x[3]};
    auto g = metric_components<double>(spec, xv);
    Mat4 m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = g[i][j];
    return m;
  };
  chart.christoffel = [spec](const Vec4& x) {
    std::array<Dual4, 4> xd;
    for (int i = 0; i < 4; ++i) xd[i] = Dual4::variable(x[i], i);
    auto g = metric_components<Dual4>(spec, xd);
    Mat4 gval;
    double dg[4][4][4];  // dg[l][m][n] = d_l g_{mn}
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        gval(m, n) = g[m][n].v;
        for (int l = 0; l < 4; ++l) dg[l][m][n] = g[m][n].d[l];
      }
    const Mat4 ginv = gval.inverse();
    Christoffel gamma;
    for (int mu = 0; mu < 4; ++mu) {
      gamma[mu].setZero();
      for (int nu = 0; nu < 4; ++nu)
        for (int rho = 0; rho < 4; ++rho) {
          double s = 0.0;
          for (int si = 0; si < 4; ++si)
            s += ginv(mu, si) *
                 (dg[nu][si][rho] + dg[rho][si][nu] - dg[si][nu][rho]);
          gamma[mu](nu, rho) = 0.5 * s;
        }
    }
    return gamma;
  };
  switch (spec.name) {
    case PresetSpec::Name::minkowski:
      chart.in_domain = [](const Vec4&) { return true; };
      break;
    case PresetSpec::Name::de_sitter: {
      const double H = spec.hubble;
      chart.in_domain = [H](const Vec4& x) {
        const double r = std::sqrt(x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
        return H * r < 1.0;
      };
      break;
    }
    case PresetSpec::Name::schwarzschild: {
      const double M = spec.mass;
      chart.in_domain = [M](const Vec4& x) {
        return x[1] > 2.0 * M && x[2] > 1e-6 && x[2] < M_PI - 1e-6;
      };
      break;
    }
    default:
      break;
  }
  return chart;
}

Vec4 preset_base_event(const PresetSpec& spec) {
  if (spec.name == PresetSpec::Name::schwarzschild)
    return Vec4(0.0, spec.radius, M_PI / 2.0, 0.0);
  return Vec4::Zero();
}

Mat4 orthonormal_frame(const MetricChart& chart, const Vec4& z) {
  const Mat4 g = chart.metric(z);
  Mat4 e = Mat4::Identity();  // columns: candidate legs, time first
  for (int a = 0; a < 4; ++a) {
    Vec4 v = e.col(a);
    for (int b = 0; b < a; ++b) {
      const double proj = eta(b, b) * (e.col(b).transpose() * g * v)(0);
      v -= proj * e.col(b);
    }
    const double norm2 = (v.transpose() * g * v)(0);
    e.col(a) = v / std::sqrt(std::abs(norm2));
  }
  return e;
}

Christoffel christoffel_fd(const MetricChart& chart, const Vec4& x, double h) {
  double dg[4][4][4];
  for (int l = 0; l < 4; ++l) {
    Vec4 xp = x, xm = x;
    xp[l] += h;
    xm[l] -= h;
    const Mat4 gp = chart.metric(xp), gm = chart.metric(xm);
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) dg[l][m][n] = (gp(m, n) - gm(m, n)) / (2.0 * h);
  }
  const Mat4 ginv = chart.metric(x).inverse();
  Christoffel gamma;
  for (int mu = 0; mu < 4; ++mu) {
    gamma[mu].setZero();
    for (int nu = 0; nu < 4; ++nu)
      for (int rho = 0; rho < 4; ++rho) {
        double s = 0.0;
        for (int si = 0; si < 4; ++si)
          s += ginv(mu, si) * (dg[nu][si][rho] + dg[rho][si][nu] - dg[si][nu][rho]);
        gamma[mu](nu, rho) = 0.5 * s;
      }
  }
  return gamma;
}

Riemann4 chart_curvature_in_frame(const MetricChart& chart, const Vec4& z,
                                  const Mat4& frame, double h) {
  // dG[l][mu][nu][rho] = d_l Gamma^mu_{nu rho}
  static thread_local double dG[4][4][4][4];
  for (int l = 0; l < 4; ++l) {
    Vec4 xp = z, xm = z;
    xp[l] += h;
    xm[l] -= h;
    const Christoffel gp = chart.christoffel(xp), gm = chart.christoffel(xm);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        for (int rho = 0; rho < 4; ++rho)
          dG[l][mu][nu][rho] = (gp[mu](nu, rho) - gm[mu](nu, rho)) / (2.0 * h);
  }
  const Christoffel G = chart.christoffel(z);
  const Mat4 g = chart.metric(z);

  // R^rho_{sig mu nu} = d_mu G^rho_{nu sig} - d_nu G^rho_{mu sig} + GG - GG
  double Rup[4][4][4][4];
  for (int rho = 0; rho < 4; ++rho)
    for (int sig = 0; sig < 4; ++sig)
      for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
          double r = dG[mu][rho][nu][sig] - dG[nu][rho][mu][sig];
          for (int l = 0; l < 4; ++l)
            r += G[rho](mu, l) * G[l](nu, sig) - G[rho](nu, l) * G[l](mu, sig);
          Rup[rho][sig][mu][nu] = r;
        }

  double Rdown[4][4][4][4];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double r = 0.0;
          for (int rho = 0; rho < 4; ++rho) r += g(a, rho) * Rup[rho][b][c][d];
          Rdown[a][b][c][d] = r;
        }

  Riemann4 out{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double r = 0.0;
          for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
              for (int rho = 0; rho < 4; ++rho)
                for (int si = 0; si < 4; ++si)
                  r += Rdown[mu][nu][rho][si] * frame(mu, a) * frame(nu, b) *
                       frame(rho, c) * frame(si, d);
          out[a][b][c][d] = r;
        }
  return out;
}

}  // namespace curvar
