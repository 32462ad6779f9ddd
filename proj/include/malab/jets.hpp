#pragma once

// Second-order forward-mode jets: value, first and second derivative with
// respect to a single real parameter.  Closed-form one-variable profiles
// (radial coefficient branches, radial Laplacian checks) are pushed through
// this arithmetic to obtain exact derivatives without finite differencing.

#include <cmath>
#include <complex>

namespace malab {

struct Jet2 {
  double v = 0.0;   // f
  double d1 = 0.0;  // f'
  double d2 = 0.0;  // f''

  static Jet2 variable(double t) { return {t, 1.0, 0.0}; }
  static Jet2 constant(double c) { return {c, 0.0, 0.0}; }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
}
inline Jet2 operator-(const Jet2& a, const Jet2& b) {
  return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
}
inline Jet2 operator-(const Jet2& a) { return {-a.v, -a.d1, -a.d2}; }
inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1,
          a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}
inline Jet2 operator/(const Jet2& a, const Jet2& b) {
  const double q = a.v / b.v;
  const double q1 = (a.d1 - q * b.d1) / b.v;
  const double q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.v;
  return {q, q1, q2};
}
inline Jet2 operator+(const Jet2& a, double c) { return {a.v + c, a.d1, a.d2}; }
inline Jet2 operator+(double c, const Jet2& a) { return a + c; }
inline Jet2 operator-(const Jet2& a, double c) { return {a.v - c, a.d1, a.d2}; }
inline Jet2 operator-(double c, const Jet2& a) { return (-a) + c; }
inline Jet2 operator*(const Jet2& a, double c) {
  return {a.v * c, a.d1 * c, a.d2 * c};
}
inline Jet2 operator*(double c, const Jet2& a) { return a * c; }
inline Jet2 operator/(const Jet2& a, double c) { return a * (1.0 / c); }
inline Jet2 operator/(double c, const Jet2& a) {
  return Jet2::constant(c) / a;
}

// Chain rule for f(g): f'(g) g', f''(g) g'^2 + f'(g) g''.
inline Jet2 compose(double f, double fp, double fpp, const Jet2& g) {
  return {f, fp * g.d1, fpp * g.d1 * g.d1 + fp * g.d2};
}

inline Jet2 exp(const Jet2& g) {
  const double e = std::exp(g.v);
  return compose(e, e, e, g);
}
inline Jet2 log(const Jet2& g) {
  return compose(std::log(g.v), 1.0 / g.v, -1.0 / (g.v * g.v), g);
}
inline Jet2 sqrt(const Jet2& g) {
  const double s = std::sqrt(g.v);
  return compose(s, 0.5 / s, -0.25 / (s * g.v), g);
}
inline Jet2 pow(const Jet2& g, double p) {
  const double f = std::pow(g.v, p);
  return compose(f, p * f / g.v, p * (p - 1.0) * f / (g.v * g.v), g);
}
inline Jet2 sin(const Jet2& g) {
  return compose(std::sin(g.v), std::cos(g.v), -std::sin(g.v), g);
}
inline Jet2 cos(const Jet2& g) {
  return compose(std::cos(g.v), -std::sin(g.v), -std::cos(g.v), g);
}
inline Jet2 tan(const Jet2& g) {
  const double t = std::tan(g.v), s2 = 1.0 + t * t;
  return compose(t, s2, 2.0 * t * s2, g);
}
inline Jet2 sec(const Jet2& g) {
  const double s = 1.0 / std::cos(g.v), t = std::tan(g.v);
  return compose(s, s * t, s * (2.0 * t * t + 1.0), g);
}

// Complex-valued jet over one real parameter: a pair of real jets.
struct CJet2 {
  Jet2 re, im;

  static CJet2 constant(std::complex<double> c) {
    return {Jet2::constant(c.real()), Jet2::constant(c.imag())};
  }
  static CJet2 from_real(const Jet2& r) { return {r, Jet2::constant(0.0)}; }
  std::complex<double> value() const { return {re.v, im.v}; }
  std::complex<double> deriv1() const { return {re.d1, im.d1}; }
  std::complex<double> deriv2() const { return {re.d2, im.d2}; }
};

inline CJet2 operator+(const CJet2& a, const CJet2& b) {
  return {a.re + b.re, a.im + b.im};
}
inline CJet2 operator-(const CJet2& a, const CJet2& b) {
  return {a.re - b.re, a.im - b.im};
}
inline CJet2 operator*(const CJet2& a, const CJet2& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline CJet2 operator*(std::complex<double> c, const CJet2& a) {
  return CJet2::constant(c) * a;
}
inline CJet2 operator*(const Jet2& r, const CJet2& a) {
  return {r * a.re, r * a.im};
}
inline CJet2 conj(const CJet2& a) { return {a.re, -a.im}; }

}  // namespace malab
