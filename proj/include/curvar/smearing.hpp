#pragma once

// Gaussian spacetime smearing Lambda(x) and the closed-form Fourier data of
// its polynomial-weighted / differentiated variants.
//
// Fourier convention: Lt(k) = int d^4x Lambda(x) e^{i k.x} with
// k.x = eta_{mu nu} k^mu x^nu and on-shell k^0 = |k|. For the bare Gaussian
// centered at the origin, Lt(k) = exp(-(T^2 (k^0)^2 + sigma^2 |k|^2)/2).

#include <array>
#include <complex>
#include <map>
#include <optional>

#include "curvar/errors.hpp"

namespace curvar {

struct GaussianSmearing {
  double T = 1.0;      // temporal width      [length]
  double sigma = 1.0;  // spatial width       [length]
  double l0 = 1.0;     // Hadamard log scale  [length]
  std::array<double, 4> center{0.0, 0.0, 0.0, 0.0};

  void validate() const {
    if (!(T > 0.0) || !(sigma > 0.0) || !(l0 > 0.0))
      throw ConfigError("GaussianSmearing requires T, sigma, l0 > 0");
  }
};

/// Lambda(x), normalized so that int Lambda d^4x = 1.
double gaussian_value(const GaussianSmearing& s, const std::array<double, 4>& x);

/// monomial[a] = power of coordinate a (total degree <= 2); derivative, if
/// set, is a contravariant index a of d^a applied to Lambda *before* the
/// monomial factors multiply it: Lambda_eff = x^monomial * d^a Lambda.
struct EffectiveSmearing {
  GaussianSmearing base;
  std::array<int, 4> monomial{0, 0, 0, 0};
  std::optional<int> derivative;

  void validate() const;
};

/// Complex polynomial in (k^0, k_1, k_2, k_3); the Fourier transform of an
/// EffectiveSmearing is KPoly(k) * exp(-(T^2 (k^0)^2 + sigma^2 |k|^2)/2).
class KPoly {
 public:
  using Key = std::array<int, 4>;  // powers of k^0, k_1, k_2, k_3

  static KPoly one() {
    KPoly p;
    p.terms_[{0, 0, 0, 0}] = 1.0;
    return p;
  }
  /// Multiply by c * k_axis^1.
  KPoly times_k(int axis, std::complex<double> c) const;
  /// Apply the operator corresponding to a factor of coordinate `axis` in
  /// position space: time axis   P -> i(dP/dk0 - T^2 k0 P),
  ///                 space axis  P -> -i(dP/dkj - sigma^2 kj P).
  KPoly apply_monomial(int axis, double T, double sigma) const;

  std::complex<double> eval(double k0, const std::array<double, 3>& k) const;

  const std::map<Key, std::complex<double>>& terms() const { return terms_; }

 private:
  std::map<Key, std::complex<double>> terms_;
};

/// Polynomial prefactor of the transform of e (Gaussian factor excluded).
KPoly transform_poly(const EffectiveSmearing& e);

/// Closed-form transform of e at on-shell momentum (k^0 = |k|).
std::complex<double> fourier_eff(const EffectiveSmearing& e,
                                 const std::array<double, 3>& k);

}  // namespace curvar
