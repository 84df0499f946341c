#include "curvar/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "curvar/errors.hpp"
#include "curvar/quadrature.hpp"

namespace curvar {

namespace {
constexpr double kPi2 = M_PI * M_PI;

// Deterministic substream seeds so chunked sampling is independent of the
// execution order.
std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
  std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL + chunk * 0xbf58476d1ce4e5b9ULL);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}
}  // namespace

void QuadratureOptions::validate() const {
  if (!(tolerance > 0.0)) throw ConfigError("tolerance must be > 0");
  for (std::size_t i = 0; i + 1 < epsilon_sequence.size(); ++i)
    if (!(epsilon_sequence[i] > epsilon_sequence[i + 1]))
      throw ConfigError("epsilon_sequence must be strictly decreasing");
  for (double e : epsilon_sequence)
    if (!(e > 0.0)) throw ConfigError("epsilon values must be positive");
}

double variance_momentum_quadrature(const GaussianSmearing& s,
                                    const QuadratureOptions& q) {
  s.validate();
  q.validate();
  const double c = s.T * s.T + s.sigma * s.sigma;
  const double kmax = std::sqrt(80.0 / c);
  auto f = [c](double k) { return k / (4.0 * kPi2) * std::exp(-c * k * k); };
  const QuadResult r =
      integrate_adaptive(f, 0.0, kmax, 0.0, q.tolerance, q.max_evaluations);
  return r.value;
}

double momentum_pair_integral(const EffectiveSmearing& e1,
                              const EffectiveSmearing& e2,
                              const QuadratureOptions& q) {
  q.validate();
  const KPoly p1 = transform_poly(e1);
  const KPoly p2 = transform_poly(e2);
  const double T = e1.base.T, sigma = e1.base.sigma;
  const double c = T * T + sigma * sigma;

  // Fixed-order angular quadrature, exact for the polynomial integrand
  // (total degree <= 8 in the direction components).
  static std::vector<double> ct_nodes, ct_weights;
  if (ct_nodes.empty()) gauss_legendre(8, ct_nodes, ct_weights);
  const int n_phi = 12;

  auto angular = [&](double k) {
    double sum = 0.0;
    for (std::size_t it = 0; it < ct_nodes.size(); ++it) {
      const double ct = ct_nodes[it], st = std::sqrt(1.0 - ct * ct);
      for (int ip = 0; ip < n_phi; ++ip) {
        const double phi = 2.0 * M_PI * ip / n_phi;
        const std::array<double, 3> kv{k * st * std::cos(phi),
                                       k * st * std::sin(phi), k * ct};
        const std::complex<double> v = p1.eval(k, kv) * std::conj(p2.eval(k, kv));
        sum += ct_weights[it] * v.real();
      }
    }
    return sum * (2.0 * M_PI / n_phi);
  };

  const double kmax = std::sqrt(120.0 / c);
  auto radial = [&](double k) {
    // d^3k/(2|k|) / (2pi)^3 = k dOmega dk / (2 (2pi)^3)
    return k / (2.0 * std::pow(2.0 * M_PI, 3)) * std::exp(-c * k * k) * angular(k);
  };
  const QuadResult r =
      integrate_adaptive(radial, 0.0, kmax, 1e-16, q.tolerance, q.max_evaluations);
  return r.value;
}

double coefficient_oracle(double T, double sigma, CoefficientTarget target,
                          const std::vector<int>& indices,
                          const QuadratureOptions& q) {
  GaussianSmearing base{T, sigma, 1.0};
  for (int i : indices)
    if (i < 0 || i > 3) throw ConfigError("coefficient index out of range");

  auto mono = [&](std::initializer_list<int> axes) {
    EffectiveSmearing e{base, {0, 0, 0, 0}, std::nullopt};
    for (int a : axes) ++e.monomial[a];
    return e;
  };

  switch (target) {
    case CoefficientTarget::L2: {
      if (indices.size() != 2) throw ConfigError("L2 needs two indices");
      const int a = indices[0], b = indices[1];
      // (x+x')^a (x+x')^b -> four monomial placements
      double v = 0.0;
      v += momentum_pair_integral(mono({a, b}), mono({}), q);  // x^a x^b
      v += momentum_pair_integral(mono({a}), mono({b}), q);    // x^a x'^b
      v += momentum_pair_integral(mono({b}), mono({a}), q);    // x'^a x^b
      v += momentum_pair_integral(mono({}), mono({a, b}), q);  // x'^a x'^b
      return v;
    }
    case CoefficientTarget::A2: {
      if (indices.size() != 2) throw ConfigError("A2 needs two indices");
      return momentum_pair_integral(mono({}), mono({indices[0], indices[1]}), q);
    }
    case CoefficientTarget::B4: {
      if (indices.size() != 4) throw ConfigError("B4 needs four indices");
      const int a = indices[0], b = indices[1], c = indices[2], d = indices[3];
      // B^{abcd} = int d^a Lambda(x) x^d Lambda(x') x'^b x'^c W0
      EffectiveSmearing e1{base, {0, 0, 0, 0}, a};
      ++e1.monomial[d];
      return momentum_pair_integral(e1, mono({b, c}), q);
    }
  }
  throw ConfigError("unreachable coefficient target");
}

McEstimate pln_oracle(double T, double sigma, double l0, const QuadratureOptions& q,
                      std::int64_t samples, LogVariant variant) {
  GaussianSmearing{T, sigma, l0}.validate();
  q.validate();
  if (q.method != QuadratureOptions::Method::monte_carlo)
    throw ConfigError("pln_oracle requires the monte_carlo method");

  const double su = std::sqrt(2.0) * T, ss = std::sqrt(2.0) * sigma;
  const std::int64_t chunk_size = 1 << 20;
  const std::int64_t n_chunks = (samples + chunk_size - 1) / chunk_size;

  double sum = 0.0, sum2 = 0.0;
  std::int64_t n = 0;
  for (std::int64_t c = 0; c < n_chunks; ++c) {
    std::mt19937_64 rng(chunk_seed(q.seed, static_cast<std::uint64_t>(c)));
    std::normal_distribution<double> nd(0.0, 1.0);
    const std::int64_t m = std::min(chunk_size, samples - c * chunk_size);
    for (std::int64_t i = 0; i < m; ++i) {
      const double dt = su * nd(rng);
      const double x = ss * nd(rng), y = ss * nd(rng), z = ss * nd(rng);
      const double arg = std::abs(-dt * dt + x * x + y * y + z * z);
      if (arg == 0.0) continue;
      const double v = std::log(arg);
      sum += v;
      sum2 += v * v;
      ++n;
    }
  }
  McEstimate est;
  est.samples = n;
  const double mean = sum / n;
  est.value = mean - 2.0 * std::log(l0);
  if (variant == LogVariant::TwoSqL0) est.value -= std::log(2.0);
  est.std_error = std::sqrt((sum2 / n - mean * mean) / n);
  return est;
}

namespace {

// One Monte-Carlo pass of the smeared Re W0 at fixed epsilon, using common
// random numbers across the epsilon sequence (same seed).
McEstimate position_mc_at_eps(const GaussianSmearing& s, PositionKernel kernel,
                              double eps, std::uint64_t seed,
                              std::int64_t samples, int a, int b) {
  const std::int64_t chunk_size = 1 << 20;
  const std::int64_t n_chunks = (samples + chunk_size - 1) / chunk_size;
  double sum = 0.0, sum2 = 0.0;
  std::int64_t n = 0;
  for (std::int64_t c = 0; c < n_chunks; ++c) {
    std::mt19937_64 rng(chunk_seed(seed, static_cast<std::uint64_t>(c)));
    std::normal_distribution<double> nd(0.0, 1.0);
    const std::int64_t m = std::min(chunk_size, samples - c * chunk_size);
    for (std::int64_t i = 0; i < m; ++i) {
      std::array<double, 4> x, xp;
      x[0] = s.T * nd(rng);
      xp[0] = s.T * nd(rng);
      for (int j = 1; j < 4; ++j) {
        x[j] = s.sigma * nd(rng);
        xp[j] = s.sigma * nd(rng);
      }
      const double dt = x[0] - xp[0];
      double rho2 = 0.0;
      for (int j = 1; j < 4; ++j) {
        const double d = x[j] - xp[j];
        rho2 += d * d;
      }
      // Re 1/(4pi^2(-(dt - i eps)^2 + rho^2))
      const double qre = rho2 - dt * dt + eps * eps;
      const double qim = 2.0 * eps * dt;
      double v = qre / (4.0 * kPi2 * (qre * qre + qim * qim));
      if (kernel == PositionKernel::W0_times_monomials)
        v *= (x[a] + xp[a]) * (x[b] + xp[b]);
      sum += v;
      sum2 += v * v;
      ++n;
    }
  }
  McEstimate est;
  est.samples = n;
  est.value = sum / n;
  est.std_error = std::sqrt((sum2 / n - est.value * est.value) / n);
  return est;
}

}  // namespace

McEstimate position_space_mc(const GaussianSmearing& s, PositionKernel kernel,
                             const QuadratureOptions& q, std::int64_t samples,
                             int a, int b) {
  s.validate();
  q.validate();
  if (q.epsilon_sequence.empty())
    throw ConfigError("position_space_mc needs a nonempty epsilon_sequence");

  std::vector<McEstimate> at_eps;
  for (double eps : q.epsilon_sequence)
    at_eps.push_back(position_mc_at_eps(s, kernel, eps, q.seed, samples, a, b));
  if (at_eps.size() == 1) return at_eps.front();

  // With common random numbers the epsilon-dependence is smooth; require the
  // successive differences to shrink (up to noise) before extrapolating.
  for (std::size_t i = 0; i + 2 < at_eps.size(); ++i) {
    const double d1 = std::abs(at_eps[i + 1].value - at_eps[i].value);
    const double d2 = std::abs(at_eps[i + 2].value - at_eps[i + 1].value);
    const double noise =
        3.0 * (at_eps[i].std_error + 2.0 * at_eps[i + 1].std_error +
               at_eps[i + 2].std_error);
    if (d2 > d1 + noise)
      throw ExtrapolationUnstable("epsilon sequence not contracting");
  }

  // Neville extrapolation to eps = 0 in powers of eps.
  std::vector<double> p(at_eps.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = at_eps[i].value;
  const std::vector<double>& e = q.epsilon_sequence;
  for (std::size_t m = 1; m < p.size(); ++m)
    for (std::size_t i = 0; i + m < p.size(); ++i)
      p[i] = (e[i + m] * p[i] - e[i] * p[i + 1]) / (e[i + m] - e[i]);

  McEstimate est;
  est.value = p[0];
  est.std_error = at_eps.back().std_error * 3.0;  // crude amplification bound
  est.samples = at_eps.back().samples;
  return est;
}

std::vector<CoefficientCheck> validate_coefficients(double T, double sigma,
                                                    const QuadratureOptions& q) {
  const CoefficientSet cf = closed_form_coefficients(T, sigma);
  std::vector<CoefficientCheck> out;
  const double scale = 1.0 / (8.0 * kPi2 * (T * T + sigma * sigma));

  auto add = [&](const std::string& name, double closed, double oracle, double tol) {
    CoefficientCheck ch;
    ch.coefficient = name;
    ch.closed_form = closed;
    ch.oracle = oracle;
    ch.abs_diff = std::abs(closed - oracle);
    ch.rel_diff = closed == 0.0 ? ch.abs_diff / scale : ch.abs_diff / std::abs(closed);
    ch.tolerance = tol;
    ch.pass = ch.rel_diff <= tol;
    out.push_back(ch);
  };

  add("L^00", cf.L2[0][0], coefficient_oracle(T, sigma, CoefficientTarget::L2, {0, 0}, q), 1e-6);
  add("L^11", cf.L2[1][1], coefficient_oracle(T, sigma, CoefficientTarget::L2, {1, 1}, q), 1e-6);
  add("L^01 (zero)", 0.0, coefficient_oracle(T, sigma, CoefficientTarget::L2, {0, 1}, q), 1e-8);
  add("A^00", cf.A2[0][0], coefficient_oracle(T, sigma, CoefficientTarget::A2, {0, 0}, q), 1e-6);
  add("A^11", cf.A2[1][1], coefficient_oracle(T, sigma, CoefficientTarget::A2, {1, 1}, q), 1e-6);
  add("A^01 (zero)", 0.0, coefficient_oracle(T, sigma, CoefficientTarget::A2, {0, 1}, q), 1e-8);
  add("B^0101", cf.B4[0][1][0][1], coefficient_oracle(T, sigma, CoefficientTarget::B4, {0, 1, 0, 1}, q), 1e-6);
  add("B^1001", cf.B4[1][0][0][1], coefficient_oracle(T, sigma, CoefficientTarget::B4, {1, 0, 0, 1}, q), 1e-6);
  add("B^0110", cf.B4[0][1][1][0], coefficient_oracle(T, sigma, CoefficientTarget::B4, {0, 1, 1, 0}, q), 1e-6);
  add("B^1221", cf.B4[1][2][2][1], coefficient_oracle(T, sigma, CoefficientTarget::B4, {1, 2, 2, 1}, q), 1e-6);
  add("B^1212", cf.B4[1][2][1][2], coefficient_oracle(T, sigma, CoefficientTarget::B4, {1, 2, 1, 2}, q), 1e-6);
  add("B^1111", cf.B4[1][1][1][1], coefficient_oracle(T, sigma, CoefficientTarget::B4, {1, 1, 1, 1}, q), 1e-6);
  add("B^0102 (zero)", 0.0, coefficient_oracle(T, sigma, CoefficientTarget::B4, {0, 1, 0, 2}, q), 1e-8);
  add("B^1213 (zero)", 0.0, coefficient_oracle(T, sigma, CoefficientTarget::B4, {1, 2, 1, 3}, q), 1e-8);

  // Ltilde identity (1/8pi^2)(B + delta A) against the closed forms.
  auto ltilde_oracle = [&](int a, int b, int c, int d) {
    double v = coefficient_oracle(T, sigma, CoefficientTarget::B4, {a, b, c, d}, q);
    if (a == d) v += coefficient_oracle(T, sigma, CoefficientTarget::A2, {b, c}, q);
    return v / (8.0 * kPi2);
  };
  add("Lt^0101", cf.Ltilde4[0][1][0][1], ltilde_oracle(0, 1, 0, 1), 1e-6);
  add("Lt^1001", cf.Ltilde4[1][0][0][1], ltilde_oracle(1, 0, 0, 1), 1e-6);
  add("Lt^0110", cf.Ltilde4[0][1][1][0], ltilde_oracle(0, 1, 1, 0), 1e-6);
  add("Lt^1221", cf.Ltilde4[1][2][2][1], ltilde_oracle(1, 2, 2, 1), 1e-6);
  add("Lt^1212", cf.Ltilde4[1][2][1][2], ltilde_oracle(1, 2, 1, 2), 1e-6);
  add("Lt^1111", cf.Ltilde4[1][1][1][1], ltilde_oracle(1, 1, 1, 1), 1e-6);
  return out;
}

}  // namespace curvar
