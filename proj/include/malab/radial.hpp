#pragma once

// Closed-form solution branches whose coefficients depend on w only through
// t = ln|w|^2.  The reduced system on (a, b, c, d) as functions of t is
//
//   a a'' - a'^2 - 4 |b'|^2          = 0
//   a b'' - 2 a' b'                  = 0
//   a c'' - a' c' - 2 b' conj(c')    = 0
//   a d'' - |c'|^2 - e^t             = 0
//
// and b' = k a^2 for a constant k (the quotient b'/a^2 is a first integral
// of the second equation).  The branch split is by k and by the sign of the
// constant C1 in (a'/a)^2 - 4|k|^2 a^2 = const:
//
//   CaseI     k = 0          a = C1 e^{C2 t}, first integral C2^2
//   CaseIIPos k != 0, C1 > 0 a = 2 s C2 E / (1 - C2^2 E^2), s = sqrt(C1),
//                            E = e^{2|k|s t}, first integral 4|k|^2 C1
//   CaseIIZero k != 0, C1 = 0 a = -1/L, L = 2|k|t + C2 (valid on L < 0)
//   CaseIINeg k != 0, C1 < 0 a = sigma sec(theta), sigma = sqrt(-C1),
//                            theta = 2|k| sigma t + C2
//
// The c and d closed forms are transcribed for real k > 0; for other k the
// a, b pair is still available but c/d accessors throw UnsupportedParams.
// Evaluation is jet-based, so exact first and second t-derivatives come out
// with the values.

#include <array>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "malab/errors.hpp"
#include "malab/jets.hpp"

namespace malab {

using Complex = std::complex<double>;

enum class RadialBranch { CaseI, CaseIIPos, CaseIIZero, CaseIINeg };
const char* branch_name(RadialBranch b);

// Constants are named after their place in the printed formulas; the factory
// parameter lists give their roles.  CaseI:
//   a = C1 e^{C2 t}; b = C3; c = C4 e^{C2 t} + C5;
//   d = |C4|^2 e^{C2 t}/C1 + e^{(1-C2)t}/((1-C2)^2 C1) + C6 t + C7
//       (the middle term becomes t^2/(2 C1) when C2 = 1).
// CaseII (sign of C1 picks the sub-branch):
//   b carries the additive constant k0; C3 seeds c, C4 shifts c;
//   C5 and C6 are the linear/constant integration constants of d.
struct RadialParams {
  RadialBranch branch = RadialBranch::CaseI;
  Complex k;   // b' = k a^2
  Complex k0;  // additive constant of b (CaseII)
  double C1 = 1.0;
  double C2 = 0.0;
  Complex C3;
  Complex C4;
  Complex C5;
  double C6 = 0.0;
  double C7 = 0.0;

  static RadialParams case_i(double a_scale, double exponent, Complex b_const,
                             Complex c_coeff = Complex(0.0),
                             Complex c_offset = Complex(0.0),
                             double d_linear = 0.0, double d_offset = 0.0);
  // Sub-branch dispatch is by the sign of first_integral_c1.
  static RadialParams case_ii(Complex k, double first_integral_c1, double C2,
                              Complex c_seed = Complex(0.0),
                              Complex c_offset = Complex(0.0),
                              double d_linear = 0.0, double d_offset = 0.0,
                              Complex b_offset = Complex(0.0));

  // True when the transcribed c/d closed forms apply (CaseI, or real k > 0).
  bool supports_cd() const;
};

struct RadialAB {
  Jet2 a;   // real coefficient of |z|^2
  CJet2 b;  // coefficient of z^2
};
struct RadialCoeffs {
  Jet2 a;
  CJet2 b;
  CJet2 c;
  Jet2 d;
};

// Throw OutOfValidity when a formula evaluates non-finite at t.
RadialAB radial_ab(const RadialParams& p, double t);
RadialCoeffs radial_coeffs(const RadialParams& p, double t);  // needs c/d

// u(z, w) = a |z|^2 + 2 Re(b z^2) + 2 Re(c z) + d at t = ln|w|^2.
// Throws OutOfValidity at the puncture w = 0.
double radial_u(const RadialParams& p, Complex z, Complex w);

// Defects of the four reduced equations at t (absolute values).
std::array<double, 4> ode_residual(const RadialParams& p, double t);
std::array<double, 2> ab_residual(const RadialParams& p, double t);

// |det of the complex Hessian - 1| assembled through the chain rule
// F_w = F_t / w, F_wbar_w = F_tt / |w|^2.
double mae_residual(const RadialParams& p, Complex z, Complex w);

// Sub-intervals of [lo, hi] where the printed coefficient a is positive and
// finite (the necessary positivity condition for the potential).
std::vector<std::pair<double, double>> domain_of_validity(
    const RadialParams& p, double lo, double hi);

// The constant value of (a'/a)^2 - 4 |k|^2 a^2 for the branch.
double first_integral_constant(const RadialParams& p);

struct RadialCatalogEntry {
  std::string id;
  RadialParams params;
  double t_lo = 0.0, t_hi = 0.0;  // recommended sampling window
  std::string notes;
  // Independent transcription of the printed potential for cross-checks.
  std::function<double(Complex, Complex)> closed_u;
};

const std::vector<RadialCatalogEntry>& radial_catalog();

}  // namespace malab
