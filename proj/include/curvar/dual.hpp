#pragma once

// Minimal forward-mode dual number with four partials, used to obtain
// machine-accurate first derivatives of analytic metric components.

#include <array>
#include <cmath>

namespace curvar {

struct Dual4 {
  double v = 0.0;
  std::array<double, 4> d{0.0, 0.0, 0.0, 0.0};

  Dual4() = default;
  Dual4(double value) : v(value) {}  // NOLINT: implicit by design
  static Dual4 variable(double value, int slot) {
    Dual4 x(value);
    x.d[slot] = 1.0;
    return x;
  }
};

inline Dual4 operator+(const Dual4& a, const Dual4& b) {
  Dual4 r(a.v + b.v);
  for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] + b.d[i];
  return r;
}
inline Dual4 operator-(const Dual4& a, const Dual4& b) {
  Dual4 r(a.v - b.v);
  for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] - b.d[i];
  return r;
}
inline Dual4 operator-(const Dual4& a) {
  Dual4 r(-a.v);
  for (int i = 0; i < 4; ++i) r.d[i] = -a.d[i];
  return r;
}
inline Dual4 operator*(const Dual4& a, const Dual4& b) {
  Dual4 r(a.v * b.v);
  for (int i = 0; i < 4; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return r;
}
inline Dual4 operator/(const Dual4& a, const Dual4& b) {
  Dual4 r(a.v / b.v);
  for (int i = 0; i < 4; ++i) r.d[i] = (a.d[i] - r.v * b.d[i]) / b.v;
  return r;
}
inline Dual4 sin(const Dual4& a) {
  Dual4 r(std::sin(a.v));
  const double c = std::cos(a.v);
  for (int i = 0; i < 4; ++i) r.d[i] = c * a.d[i];
  return r;
}
inline Dual4 cos(const Dual4& a) {
  Dual4 r(std::cos(a.v));
  const double s = -std::sin(a.v);
  for (int i = 0; i < 4; ++i) r.d[i] = s * a.d[i];
  return r;
}

}  // namespace curvar
