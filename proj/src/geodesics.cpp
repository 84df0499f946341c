#include "curvar/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "curvar/errors.hpp"
#include "curvar/expansions.hpp"

namespace curvar {

namespace {

using State = Eigen::Matrix<double, 8, 1>;

State geodesic_rhs(const MetricChart& chart, const State& s) {
  const Vec4 x = s.head<4>();
  const Vec4 v = s.tail<4>();
  const Christoffel gamma = chart.christoffel(x);
  State ds;
  ds.head<4>() = v;
  for (int mu = 0; mu < 4; ++mu) ds[4 + mu] = -v.dot(gamma[mu] * v);
  return ds;
}

// Dormand-Prince RK45 coefficients.
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
constexpr double kC[7] = {0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kE[7] = {71.0 / 57600,    0.0,          -71.0 / 16695,
                          71.0 / 1920,     -17253.0 / 339200,
                          22.0 / 525,      -1.0 / 40};

}  // namespace

Vec4 GeodesicSolution::position_at(double lambda) const {
  // Linear interpolation between stored samples; exact at sample points,
  // only used for diagnostics between them.
  auto it = std::lower_bound(lambdas.begin(), lambdas.end(), lambda);
  if (it == lambdas.begin()) return Eigen::Map<const State>(states.front().data()).head<4>();
  if (it == lambdas.end()) return Eigen::Map<const State>(states.back().data()).head<4>();
  const std::size_t i = static_cast<std::size_t>(it - lambdas.begin());
  const double w = (lambda - lambdas[i - 1]) / (lambdas[i] - lambdas[i - 1]);
  const State s0 = Eigen::Map<const State>(states[i - 1].data());
  const State s1 = Eigen::Map<const State>(states[i].data());
  return ((1.0 - w) * s0 + w * s1).head<4>();
}

Vec4 GeodesicSolution::velocity_at(double lambda) const {
  auto it = std::lower_bound(lambdas.begin(), lambdas.end(), lambda);
  if (it == lambdas.begin()) return Eigen::Map<const State>(states.front().data()).tail<4>();
  if (it == lambdas.end()) return Eigen::Map<const State>(states.back().data()).tail<4>();
  const std::size_t i = static_cast<std::size_t>(it - lambdas.begin());
  const double w = (lambda - lambdas[i - 1]) / (lambdas[i] - lambdas[i - 1]);
  const State s0 = Eigen::Map<const State>(states[i - 1].data());
  const State s1 = Eigen::Map<const State>(states[i].data());
  return ((1.0 - w) * s0 + w * s1).tail<4>();
}

GeodesicSolution integrate_geodesic(const MetricChart& chart, const Vec4& x0,
                                    const Vec4& v0, const SolverOptions& opts) {
  if (!chart.in_domain(x0)) throw DomainExit("geodesic start outside chart domain");

  GeodesicSolution sol;
  sol.initial_velocity = v0;

  State y;
  y.head<4>() = x0;
  y.tail<4>() = v0;
  double t = 0.0, h = 0.05;
  const double scale = std::max(1.0, v0.norm());

  auto record = [&](double lambda, const State& s) {
    sol.lambdas.push_back(lambda);
    std::array<double, 8> row;
    Eigen::Map<State>(row.data()) = s;
    sol.states.push_back(row);
  };
  record(0.0, y);

  State k[7];
  int steps = 0;
  while (t < 1.0) {
    if (++steps > opts.max_ode_steps)
      throw NoConvergence("geodesic integrator exceeded step budget");
    h = std::min(h, 1.0 - t);

    k[0] = geodesic_rhs(chart, y);
    for (int i = 1; i < 7; ++i) {
      State yi = y;
      for (int j = 0; j < i; ++j) yi += h * kA[i][j] * k[j];
      if (!chart.in_domain(yi.head<4>())) throw DomainExit("geodesic left chart domain");
      k[i] = geodesic_rhs(chart, yi);
    }
    sol.rhs_evaluations += 7;

    State err = State::Zero();
    for (int i = 0; i < 7; ++i) err += h * kE[i] * k[i];
    const double err_norm = err.norm() / scale;
    const double tol = opts.ode_tol;

    if (err_norm <= tol || h < 1e-14) {
      State ynew = y;
      for (int j = 0; j < 6; ++j) ynew += h * kA[6][j] * k[j];
      t += h;
      y = ynew;
      record(t, y);
    }
    const double factor =
        err_norm > 0.0 ? 0.9 * std::pow(tol / err_norm, 0.2) : 5.0;
    h *= std::clamp(factor, 0.2, 5.0);
  }
  return sol;
}

GeodesicSolution geodesic_connect(const MetricChart& chart, const Vec4& x0,
                                  const Vec4& x1, const SolverOptions& opts) {
  // Chord seed: straight coordinate line.
  Vec4 v = x1 - x0;
  const double target_scale = std::max(1.0, (x1 - x0).norm());

  GeodesicSolution sol;
  for (int it = 0; it < opts.max_newton_iterations; ++it) {
    sol = integrate_geodesic(chart, x0, v, opts);
    const Vec4 end = Eigen::Map<const State>(sol.states.back().data()).head<4>();
    const Vec4 r = end - x1;
    sol.newton_iterations = it;
    sol.initial_velocity = v;
    if (r.norm() <= opts.newton_tol * target_scale) return sol;

    // Finite-difference Jacobian d end / d v.
    Mat4 J;
    const double h = 1e-7 * std::max(1.0, v.norm());
    for (int j = 0; j < 4; ++j) {
      Vec4 vp = v;
      vp[j] += h;
      const GeodesicSolution sp = integrate_geodesic(chart, x0, vp, opts);
      const Vec4 endp = Eigen::Map<const State>(sp.states.back().data()).head<4>();
      J.col(j) = (endp - end) / h;
    }
    Vec4 dv = J.fullPivLu().solve(r);

    // Damped update: back off until the residual actually decreases.
    double alpha = 1.0;
    bool accepted = false;
    for (int back = 0; back < 8; ++back) {
      const Vec4 vt = v - alpha * dv;
      try {
        const GeodesicSolution st = integrate_geodesic(chart, x0, vt, opts);
        const Vec4 endt = Eigen::Map<const State>(st.states.back().data()).head<4>();
        if ((endt - x1).norm() < r.norm()) {
          v = vt;
          accepted = true;
          break;
        }
      } catch (const DomainExit&) {
        // the trial left the chart; shrink the step
      }
      alpha *= 0.5;
    }
    if (!accepted) throw NoConvergence("geodesic shooting stalled");
  }
  throw NoConvergence("geodesic shooting did not converge");
}

double world_function_numeric(const MetricChart& chart, const Vec4& x0,
                              const Vec4& x1, const SolverOptions& opts) {
  const GeodesicSolution sol = geodesic_connect(chart, x0, x1, opts);
  const Mat4 g = chart.metric(x0);
  return 0.5 * sol.initial_velocity.dot(g * sol.initial_velocity);
}

RncChart::RncChart(MetricChart chart, Vec4 base, Mat4 frame, SolverOptions opts)
    : chart_(std::move(chart)), base_(std::move(base)), frame_(std::move(frame)),
      opts_(opts) {}

Vec4 RncChart::to_chart(const Vec4& xi) const {
  if (xi.norm() == 0.0) return base_;
  const Vec4 v0 = frame_ * xi;
  const GeodesicSolution sol = integrate_geodesic(chart_, base_, v0, opts_);
  return Eigen::Map<const State>(sol.states.back().data()).head<4>();
}

Vec4 RncChart::from_chart(const Vec4& x) const {
  const GeodesicSolution sol = geodesic_connect(chart_, base_, x, opts_);
  return frame_.fullPivLu().solve(sol.initial_velocity);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw InvalidState("loglog_slope needs at least two matched samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(std::max(y[i], 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ScalingResult sigma_scaling_test(const MetricChart& chart, const Vec4& base,
                                 const Mat4& frame, const Riemann4& frame_riemann,
                                 const Vec4& xi_a, const Vec4& xi_b,
                                 const std::vector<double>& scales,
                                 const SolverOptions& opts) {
  RncChart rnc(chart, base, frame, opts);
  ScalingResult out;
  std::vector<double> ss, rr;
  for (double s : scales) {
    const Vec4 xa = s * xi_a, xb = s * xi_b;
    const Vec4 pa = rnc.to_chart(xa), pb = rnc.to_chart(xb);

    ScalingSample row;
    row.s = s;
    row.sigma_numeric = world_function_numeric(chart, pa, pb, opts);

    const Vec4 d = xb - xa;
    row.sigma_flat = 0.5 * (-d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + d[3] * d[3]);

    row.sigma_expansion = expansion_sigma(frame_riemann, xa, xb);
    row.residual = std::abs(row.sigma_numeric - row.sigma_expansion);
    out.samples.push_back(row);
    ss.push_back(s);
    rr.push_back(row.residual);
  }
  out.fitted_exponent = loglog_slope(ss, rr);
  return out;
}

std::string scaling_csv(const ScalingResult& r) {
  std::ostringstream os;
  os.precision(17);
  os << "s,sigma_numeric,sigma_flat,sigma_expansion,residual\n";
  for (const ScalingSample& row : r.samples)
    os << row.s << ',' << row.sigma_numeric << ',' << row.sigma_flat << ','
       << row.sigma_expansion << ',' << row.residual << '\n';
  os << "# fitted_exponent," << r.fitted_exponent << '\n';
  return os.str();
}

}  // namespace curvar
