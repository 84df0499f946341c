#include "curvar/smearing.hpp"

#include <cmath>

namespace curvar {

double gaussian_value(const GaussianSmearing& s, const std::array<double, 4>& x) {
  s.validate();
  const double t = x[0] - s.center[0];
  double r2 = 0.0;
  for (int i = 1; i < 4; ++i) {
    const double d = x[i] - s.center[i];
    r2 += d * d;
  }
  const double temporal =
      std::exp(-t * t / (2.0 * s.T * s.T)) / (std::sqrt(2.0 * M_PI) * s.T);
  const double spatial = std::exp(-r2 / (2.0 * s.sigma * s.sigma)) /
                         std::pow(2.0 * M_PI * s.sigma * s.sigma, 1.5);
  return temporal * spatial;
}

void EffectiveSmearing::validate() const {
  base.validate();
  int deg = 0;
  for (int a = 0; a < 4; ++a) {
    if (monomial[a] < 0) throw ConfigError("negative monomial power");
    deg += monomial[a];
  }
  if (deg > 2) throw ConfigError("monomial total degree must be <= 2");
  if (derivative && (*derivative < 0 || *derivative > 3))
    throw ConfigError("derivative index out of range");
  for (int a = 0; a < 4; ++a)
    if (base.center[a] != 0.0)
      throw ConfigError("effective transforms are defined for center = origin");
}

KPoly KPoly::times_k(int axis, std::complex<double> c) const {
  KPoly out;
  for (const auto& [key, coef] : terms_) {
    Key k = key;
    ++k[axis];
    out.terms_[k] += c * coef;
  }
  return out;
}

KPoly KPoly::apply_monomial(int axis, double T, double sigma) const {
  // x^0 factor: P -> i (dP/dk0 - T^2 k0 P)
  // x^j factor: P -> -i (dP/dkj - sigma^2 kj P)
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> pref = axis == 0 ? i : -i;
  const double w2 = axis == 0 ? T * T : sigma * sigma;

  KPoly out;
  for (const auto& [key, coef] : terms_) {
    if (key[axis] > 0) {  // derivative term
      Key k = key;
      --k[axis];
      out.terms_[k] += pref * coef * static_cast<double>(key[axis]);
    }
    Key k = key;
    ++k[axis];
    out.terms_[k] += -pref * w2 * coef;
  }
  return out;
}

std::complex<double> KPoly::eval(double k0, const std::array<double, 3>& k) const {
  std::complex<double> s = 0.0;
  for (const auto& [key, coef] : terms_) {
    double m = 1.0;
    for (int p = 0; p < key[0]; ++p) m *= k0;
    for (int a = 1; a < 4; ++a)
      for (int p = 0; p < key[a]; ++p) m *= k[a - 1];
    s += coef * m;
  }
  return s;
}

KPoly transform_poly(const EffectiveSmearing& e) {
  e.validate();
  KPoly p = KPoly::one();
  if (e.derivative) {
    // d^a Lambda <-> -i k^a Lt(k), with k^0 = k0 and k^j = k_j.
    p = p.times_k(*e.derivative, std::complex<double>(0.0, -1.0));
  }
  for (int axis = 0; axis < 4; ++axis)
    for (int rep = 0; rep < e.monomial[axis]; ++rep)
      p = p.apply_monomial(axis, e.base.T, e.base.sigma);
  return p;
}

std::complex<double> fourier_eff(const EffectiveSmearing& e,
                                 const std::array<double, 3>& k) {
  const KPoly p = transform_poly(e);
  const double kn = std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
  const double T = e.base.T, s = e.base.sigma;
  const double gauss = std::exp(-0.5 * (T * T * kn * kn + s * s * kn * kn));
  return p.eval(kn, k) * gauss;
}

}  // namespace curvar
