#include "malab/radial.hpp"

#include <cmath>

namespace malab {

namespace {

constexpr double kDegenerate = 1e-9;

double mag(Complex z) { return std::abs(z); }

void require_finite(const Jet2& a, const char* what) {
  if (!std::isfinite(a.v) || !std::isfinite(a.d1) || !std::isfinite(a.d2))
    throw OutOfValidity(std::string(what) + " is singular at this t");
}

}  // namespace

const char* branch_name(RadialBranch b) {
  switch (b) {
    case RadialBranch::CaseI: return "case-i";
    case RadialBranch::CaseIIPos: return "case-ii-pos";
    case RadialBranch::CaseIIZero: return "case-ii-zero";
    case RadialBranch::CaseIINeg: return "case-ii-neg";
  }
  return "?";
}

RadialParams RadialParams::case_i(double a_scale, double exponent,
                                  Complex b_const, Complex c_coeff,
                                  Complex c_offset, double d_linear,
                                  double d_offset) {
  if (!(a_scale > 0.0))
    throw UnsupportedParams("CaseI requires a positive coefficient scale");
  const double gap = std::abs(1.0 - exponent);
  if (gap != 0.0 && gap < kDegenerate)
    throw UnsupportedParams(
        "CaseI exponent too close to the resonant value 1");
  RadialParams p;
  p.branch = RadialBranch::CaseI;
  p.k = Complex(0.0);
  p.C1 = a_scale;
  p.C2 = exponent;
  p.C3 = b_const;
  p.C4 = c_coeff;
  p.C5 = c_offset;
  p.C6 = d_linear;
  p.C7 = d_offset;
  return p;
}

RadialParams RadialParams::case_ii(Complex k, double first_integral_c1,
                                   double C2, Complex c_seed, Complex c_offset,
                                   double d_linear, double d_offset,
                                   Complex b_offset) {
  if (k == Complex(0.0))
    throw UnsupportedParams("CaseII requires a nonzero coupling k");
  RadialParams p;
  p.k = k;
  p.k0 = b_offset;
  p.C1 = first_integral_c1;
  p.C2 = C2;
  p.C3 = c_seed;
  p.C4 = c_offset;
  p.C5 = Complex(d_linear);
  p.C6 = d_offset;
  if (first_integral_c1 > 0.0) {
    p.branch = RadialBranch::CaseIIPos;
    if (C2 == 0.0)
      throw UnsupportedParams("CaseIIPos requires a nonzero C2");
    if (p.supports_cd()) {
      const double ks = k.real() * std::sqrt(first_integral_c1);
      if (std::abs(1.0 - 2.0 * ks) < kDegenerate ||
          std::abs(1.0 + 2.0 * ks) < kDegenerate)
        throw UnsupportedParams(
            "CaseIIPos is resonant at 2 k sqrt(C1) = +-1; the d closed form "
            "degenerates");
    }
  } else if (first_integral_c1 == 0.0) {
    p.branch = RadialBranch::CaseIIZero;
  } else {
    p.branch = RadialBranch::CaseIINeg;
  }
  return p;
}

bool RadialParams::supports_cd() const {
  if (branch == RadialBranch::CaseI) return true;
  return k.imag() == 0.0 && k.real() > 0.0;
}

namespace {

RadialAB eval_ab(const RadialParams& p, double t) {
  const Jet2 T = Jet2::variable(t);
  const double K = mag(p.k);
  RadialAB r;
  switch (p.branch) {
    case RadialBranch::CaseI: {
      r.a = p.C1 * exp(p.C2 * T);
      r.b = CJet2::constant(p.C3);
      break;
    }
    case RadialBranch::CaseIIPos: {
      const double s = std::sqrt(p.C1);
      const Jet2 E2 = exp(2.0 * K * s * T);
      const Jet2 E4 = E2 * E2;
      r.a = 2.0 * s * p.C2 * E2 / (1.0 - p.C2 * p.C2 * E4);
      const Complex unit = p.k / K;
      r.b = (s / (1.0 - p.C2 * p.C2 * E4)) * CJet2::constant(unit) +
            CJet2::constant(p.k0);
      break;
    }
    case RadialBranch::CaseIIZero: {
      const Jet2 L = 2.0 * K * T + p.C2;
      r.a = -1.0 / L;
      const Complex unit = p.k / K;
      r.b = (-0.5 / L) * CJet2::constant(unit) + CJet2::constant(p.k0);
      break;
    }
    case RadialBranch::CaseIINeg: {
      const double sig = std::sqrt(-p.C1);
      const Jet2 th = 2.0 * K * sig * T + p.C2;
      r.a = sig * sec(th);
      const Complex unit = p.k / K;
      r.b = (0.5 * sig * tan(th)) * CJet2::constant(unit) +
            CJet2::constant(p.k0);
      break;
    }
  }
  require_finite(r.a, "coefficient a");
  require_finite(r.b.re, "coefficient b");
  require_finite(r.b.im, "coefficient b");
  return r;
}

}  // namespace

RadialAB radial_ab(const RadialParams& p, double t) { return eval_ab(p, t); }

RadialCoeffs radial_coeffs(const RadialParams& p, double t) {
  if (!p.supports_cd())
    throw UnsupportedParams(
        "the c/d closed forms are transcribed for real k > 0 (or CaseI)");
  const RadialAB ab = eval_ab(p, t);
  RadialCoeffs r;
  r.a = ab.a;
  r.b = ab.b;
  const Jet2 T = Jet2::variable(t);
  switch (p.branch) {
    case RadialBranch::CaseI: {
      const Jet2 E = exp(p.C2 * T);
      r.c = E * CJet2::constant(p.C4) + CJet2::constant(p.C5);
      Jet2 mid;
      if (p.C2 == 1.0)
        mid = T * T / (2.0 * p.C1);
      else
        mid = exp((1.0 - p.C2) * T) /
              ((1.0 - p.C2) * (1.0 - p.C2) * p.C1);
      r.d = (std::norm(p.C4) / p.C1) * E + mid + p.C6 * T + p.C7;
      break;
    }
    case RadialBranch::CaseIIPos: {
      const double k = p.k.real();
      const double s = std::sqrt(p.C1);
      const Jet2 E2 = exp(2.0 * k * s * T);
      const Jet2 E4 = E2 * E2;
      const Jet2 den = (2.0 * k * s * p.C2) * (1.0 - p.C2 * p.C2 * E4);
      const CJet2 num = CJet2::constant(std::conj(p.C3)) +
                        (p.C2 * E2) * CJet2::constant(p.C3);
      r.c = (1.0 / den) * num + CJet2::constant(p.C4);
      const double c31 = p.C3.real(), c32 = p.C3.imag();
      const Jet2 epart =
          exp((1.0 - 2.0 * k * s) * T) /
              (2.0 * s * p.C2 * (1.0 - 2.0 * k * s) * (1.0 - 2.0 * k * s)) -
          p.C2 * exp((1.0 + 2.0 * k * s) * T) /
              (2.0 * s * (1.0 + 2.0 * k * s) * (1.0 + 2.0 * k * s));
      const Jet2 cpart =
          (1.0 / (8.0 * k * k * p.C1 * s * p.C2)) *
          (c31 * c31 / (1.0 - p.C2 * E2) - c32 * c32 / (1.0 + p.C2 * E2));
      r.d = epart + cpart + p.C5.real() * T + p.C6;
      break;
    }
    case RadialBranch::CaseIIZero: {
      const double k = p.k.real();
      const Jet2 L = 2.0 * k * T + p.C2;
      r.c = CJet2::from_real((-p.C3.real() / (2.0 * k)) * (1.0 / L)) +
            T * CJet2::constant(Complex(0.0, p.C3.imag())) +
            CJet2::constant(p.C4);
      const double c31 = p.C3.real(), c32 = p.C3.imag();
      r.d = -((2.0 * k * T + (p.C2 - 4.0 * k)) * exp(T)) -
            (c31 * c31 / (8.0 * k * k)) * (1.0 / L) -
            c32 * c32 * (k * T * T * T / 3.0 + p.C2 * T * T / 2.0) +
            p.C5.real() * T + p.C6;
      break;
    }
    case RadialBranch::CaseIINeg: {
      const double k = p.k.real();
      const double sig = std::sqrt(-p.C1);
      const Jet2 th = 2.0 * k * sig * T + p.C2;
      r.c = (1.0 / (2.0 * sig * k)) *
                (sec(th) * CJet2::constant(std::conj(p.C3)) +
                 tan(th) * CJet2::constant(p.C3)) +
            CJet2::constant(p.C4);
      const double c31 = p.C3.real(), c32 = p.C3.imag();
      const double q = 4.0 * k * k * p.C1;  // negative
      // a d'' = |c'|^2 + e^t forces the (-C1)^{3/2} normalization on the
      // tangent/secant part (mirroring the C1^{3/2} of the C1 > 0 branch).
      r.d = exp(T) * ((1.0 + q) * cos(th) + (4.0 * k * sig) * sin(th)) /
                (sig * (1.0 - q) * (1.0 - q)) +
            ((c31 * c31 - c32 * c32) * tan(th) +
             (c31 * c31 + c32 * c32) * sec(th)) /
                (4.0 * k * k * sig * sig * sig) +
            p.C5.real() * T + p.C6;
      break;
    }
  }
  require_finite(r.c.re, "coefficient c");
  require_finite(r.c.im, "coefficient c");
  require_finite(r.d, "coefficient d");
  return r;
}

double radial_u(const RadialParams& p, Complex z, Complex w) {
  if (w == Complex(0.0))
    throw OutOfValidity("radial potentials live on the punctured plane");
  const double t = std::log(std::norm(w));
  const RadialCoeffs rc = radial_coeffs(p, t);
  return rc.a.v * std::norm(z) + 2.0 * (rc.b.value() * z * z).real() +
         2.0 * (rc.c.value() * z).real() + rc.d.v;
}

std::array<double, 2> ab_residual(const RadialParams& p, double t) {
  const RadialAB r = radial_ab(p, t);
  const Complex b1 = r.b.deriv1(), b2 = r.b.deriv2();
  return {std::abs(r.a.v * r.a.d2 - r.a.d1 * r.a.d1 - 4.0 * std::norm(b1)),
          std::abs(r.a.v * b2 - 2.0 * r.a.d1 * b1)};
}

std::array<double, 4> ode_residual(const RadialParams& p, double t) {
  const RadialCoeffs r = radial_coeffs(p, t);
  const Complex b1 = r.b.deriv1(), b2 = r.b.deriv2();
  const Complex c1 = r.c.deriv1(), c2 = r.c.deriv2();
  return {std::abs(r.a.v * r.a.d2 - r.a.d1 * r.a.d1 - 4.0 * std::norm(b1)),
          std::abs(r.a.v * b2 - 2.0 * r.a.d1 * b1),
          std::abs(r.a.v * c2 - r.a.d1 * c1 - 2.0 * b1 * std::conj(c1)),
          std::abs(r.a.v * r.d.d2 - std::norm(c1) - std::exp(t))};
}

double mae_residual(const RadialParams& p, Complex z, Complex w) {
  if (w == Complex(0.0))
    throw OutOfValidity("radial potentials live on the punctured plane");
  const double t = std::log(std::norm(w));
  const RadialCoeffs r = radial_coeffs(p, t);
  const double h11 = r.a.v;
  const Complex h12 =
      (r.a.d1 * std::conj(z) + 2.0 * r.b.deriv1() * z + r.c.deriv1()) /
      std::conj(w);
  const double h22 = (r.a.d2 * std::norm(z) +
                      2.0 * (r.b.deriv2() * z * z).real() +
                      2.0 * (r.c.deriv2() * z).real() + r.d.d2) /
                     std::norm(w);
  return std::abs(h11 * h22 - std::norm(h12) - 1.0);
}

std::vector<std::pair<double, double>> domain_of_validity(
    const RadialParams& p, double lo, double hi) {
  std::vector<std::pair<double, double>> out;
  if (!(lo < hi)) return out;
  const double K = mag(p.k);
  switch (p.branch) {
    case RadialBranch::CaseI:
      out.push_back({lo, hi});
      break;
    case RadialBranch::CaseIIPos: {
      const double s = std::sqrt(p.C1);
      const double tstar = -std::log(std::abs(p.C2)) / (2.0 * K * s);
      if (p.C2 > 0.0) {
        if (lo < std::min(hi, tstar)) out.push_back({lo, std::min(hi, tstar)});
      } else {
        if (std::max(lo, tstar) < hi) out.push_back({std::max(lo, tstar), hi});
      }
      break;
    }
    case RadialBranch::CaseIIZero: {
      const double tend = -p.C2 / (2.0 * K);
      if (lo < std::min(hi, tend)) out.push_back({lo, std::min(hi, tend)});
      break;
    }
    case RadialBranch::CaseIINeg: {
      const double sig = std::sqrt(-p.C1);
      const double rate = 2.0 * K * sig;
      // cos(theta) > 0 on (-pi/2 + 2 pi n, pi/2 + 2 pi n).
      const double th_lo = rate * lo + p.C2;
      const long n0 = std::lround(std::floor((th_lo + M_PI_2) / (2.0 * M_PI)));
      for (long n = n0;; ++n) {
        const double a = (-M_PI_2 + 2.0 * M_PI * double(n) - p.C2) / rate;
        const double b = (M_PI_2 + 2.0 * M_PI * double(n) - p.C2) / rate;
        if (a >= hi) break;
        const double clo = std::max(a, lo), chi = std::min(b, hi);
        if (clo < chi) out.push_back({clo, chi});
      }
      break;
    }
  }
  return out;
}

double first_integral_constant(const RadialParams& p) {
  if (p.branch == RadialBranch::CaseI) return p.C2 * p.C2;
  return 4.0 * std::norm(p.k) * p.C1;
}

const std::vector<RadialCatalogEntry>& radial_catalog() {
  static const std::vector<RadialCatalogEntry> entries = [] {
    std::vector<RadialCatalogEntry> v;
    const auto re2 = [](Complex z) { return (z * z).real(); };

    v.push_back({"case1-sqrt",
                 RadialParams::case_i(1.0, 0.5, Complex(1.0)), -2.0, 2.0,
                 "u = |w| |z|^2 + 2 Re z^2 + 4 |w|; continuous but not "
                 "smooth across w = 0; u(1,1) = 7",
                 [re2](Complex z, Complex w) {
                   const double aw = std::abs(w);
                   return aw * std::norm(z) + 2.0 * re2(z) + 4.0 * aw;
                 }});

    v.push_back({"case1-flat-exponent",
                 RadialParams::case_i(1.0, 0.0, Complex(1.0)), -2.0, 2.0,
                 "u = |z|^2 + 2 Re z^2 + |w|^2; restriction of a smooth "
                 "potential on the whole plane pair",
                 [re2](Complex z, Complex w) {
                   return std::norm(z) + 2.0 * re2(z) + std::norm(w);
                 }});

    v.push_back({"case1-blowup",
                 RadialParams::case_i(1.0, 1.5, Complex(1.0)), -2.0, 2.0,
                 "u = |w|^3 |z|^2 + 2 Re z^2 + 4/|w|; d blows up at the "
                 "puncture",
                 [re2](Complex z, Complex w) {
                   const double aw = std::abs(w);
                   return aw * aw * aw * std::norm(z) + 2.0 * re2(z) +
                          4.0 / aw;
                 }});

    v.push_back({"case2pos-quarter",
                 RadialParams::case_ii(Complex(0.25), 1.0, 1.0), -3.0, -0.05,
                 "u = 2|w|/(1-|w|^2) |z|^2 + 2 Re z^2/(1-|w|^2) + 2|w| - "
                 "2|w|^3/9 on the punctured unit disc; degenerates at "
                 "|w| = 1",
                 [re2](Complex z, Complex w) {
                   const double x = std::norm(w), aw = std::abs(w);
                   return 2.0 * aw / (1.0 - x) * std::norm(z) +
                          2.0 * re2(z) / (1.0 - x) + 2.0 * aw -
                          2.0 * aw * aw * aw / 9.0;
                 }});

    v.push_back({"case2pos-one",
                 RadialParams::case_ii(Complex(1.0), 1.0, 1.0), -1.5, -0.05,
                 "u = 2|w|^4/(1-|w|^8) |z|^2 + 2 Re z^2/(1-|w|^8) + "
                 "1/(2|w|^2) - |w|^6/18 on the punctured unit disc",
                 [re2](Complex z, Complex w) {
                   const double x = std::norm(w);
                   const double x4 = x * x * x * x;
                   return 2.0 * x * x / (1.0 - x4) * std::norm(z) +
                          2.0 * re2(z) / (1.0 - x4) + 0.5 / x -
                          x * x * x / 18.0;
                 }});

    v.push_back({"case2zero-log",
                 RadialParams::case_ii(Complex(1.0), 0.0, 0.0), -3.0, -0.05,
                 "u = -|z|^2/(2 ln|w|^2) - Re z^2/(2 ln|w|^2) - "
                 "(2 ln|w|^2 - 4) |w|^2 on the punctured unit disc",
                 [re2](Complex z, Complex w) {
                   const double T = std::log(std::norm(w));
                   return -std::norm(z) / (2.0 * T) - re2(z) / (2.0 * T) -
                          (2.0 * T - 4.0) * std::norm(w);
                 }});

    v.push_back({"case2neg-trig",
                 RadialParams::case_ii(Complex(1.0), -1.0, 0.0), -0.7, 0.7,
                 "u = sec(2t) |z|^2 + tan(2t) Re z^2 + e^t (-3 cos 2t + "
                 "4 sin 2t)/25, t = ln|w|^2; singular on the circles "
                 "|w| = exp(pi/8 + n pi/4); positivity fails where "
                 "sec(2t) < 0",
                 [re2](Complex z, Complex w) {
                   const double T = std::log(std::norm(w));
                   return std::norm(z) / std::cos(2.0 * T) +
                          std::tan(2.0 * T) * re2(z) +
                          std::exp(T) *
                              (-3.0 * std::cos(2.0 * T) +
                               4.0 * std::sin(2.0 * T)) /
                              25.0;
                 }});
    return v;
  }();
  return entries;
}

}  // namespace malab
