#pragma once
// Potentials of the ansatz
//   u(z, w) = a(w) |z|^2 + b(w) z^2 + conj(b(w) z^2)
//           + c(w) z + conj(c(w) z) + d(w),
// their z-polynomial fields, complex Hessians, and the square-root branch
// substitution z -> phi(z) = (1 - sqrt(1 - 2 alpha z)) / alpha.

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "malab/series.hpp"

namespace malab {

// The four coefficient functions of one potential. a and d are real-valued,
// a(0) > 0; all four are normalized to a shared truncation order; radius is
// the common disc of validity in w (a large sentinel for entire families).
struct SolutionCoeffs {
  SolutionCoeffs(BiSeries a, BiSeries b, BiSeries c, BiSeries d, double radius);

  BiSeries a, b, c, d;
  double radius;
  int order() const { return a.order(); }
};

// Polynomial in (z, conj(z)) of bounded degree whose coefficients are
// BiSeries in w. Houses u itself (degree 2), metric entries, and Christoffel
// symbols (intermediate products can reach degree 4).
class ZPolyField {
 public:
  ZPolyField() : deg_(0), e_(1) {}
  static ZPolyField zero(int degree, int order);

  int degree() const { return deg_; }
  const BiSeries& entry(int p, int q) const;
  ZPolyField with_entry(int p, int q, BiSeries s) const;

  friend ZPolyField add(const ZPolyField&, const ZPolyField&);
  friend ZPolyField sub(const ZPolyField&, const ZPolyField&);
  friend ZPolyField mul(const ZPolyField&, const ZPolyField&);
  friend ZPolyField scale(const ZPolyField&, Complex);
  // Wirtinger derivatives in the four directions.
  friend ZPolyField dz(const ZPolyField&);
  friend ZPolyField dzbar(const ZPolyField&);
  friend ZPolyField dw(const ZPolyField&);
  friend ZPolyField dwbar(const ZPolyField&);
  // Pointwise complex conjugation: entry'(p,q) = conj-series of entry(q,p).
  friend ZPolyField conj_field(const ZPolyField&);

 private:
  size_t idx(int p, int q) const {
    return size_t(p) * (deg_ + 1) - size_t(p) * (p - 1) / 2 + q;
  }
  int deg_;
  std::vector<BiSeries> e_;
};

Complex evaluate(const ZPolyField& f, Complex z, Complex w);
// Max |entry(p,q) - entry'(p,q)| over shared degrees/orders.
double max_field_diff(const ZPolyField& f, const ZPolyField& g);

// u as a degree-2 field.
ZPolyField assemble_u(const SolutionCoeffs& sc);

// 2x2 Hermitian matrix value of a complex Hessian at a point.
struct Hermitian2 {
  double h11 = 0.0, h22 = 0.0;
  Complex h12;
  Complex h21() const { return std::conj(h12); }
  double det() const { return h11 * h22 - std::norm(h12); }
};

// Fiber coordinate map: identity z, or the square-root branch
// phi(z) = (1 - sqrt(1 - 2 alpha z)) / alpha on |z| < 1/(2|alpha|).
struct PhiMode {
  static PhiMode identity() { return PhiMode{Complex(0.0)}; }
  static PhiMode sqrt_branch(Complex alpha);
  bool is_identity() const { return alpha == Complex(0.0); }
  Complex alpha;
};

Complex phi_value(Complex alpha, Complex z);  // throws OutOfDomain
Complex phi_deriv(Complex alpha, Complex z);  // 1/sqrt(1 - 2 alpha z)

// Precomputes the series derivatives once; evaluates the Hessian pointwise.
class HessianEvaluator {
 public:
  explicit HessianEvaluator(const SolutionCoeffs& sc,
                            PhiMode phi = PhiMode::identity());
  Hermitian2 operator()(Complex z, Complex w) const;
  // Unreduced entries (h11, h12, h21, h22) before the diagonals are coerced
  // to real; used to verify Hermitian symmetry to machine precision.
  std::array<Complex, 4> raw(Complex z, Complex w) const;

 private:
  PhiMode phi_;
  double radius_;
  BiSeries a_, awb_, bwb_, cwb_;         // a, a_wbar, b_wbar, c_wbar
  BiSeries awbw_, bwbw_, cwbw_, dwbw_;   // mixed second derivatives
};

Hermitian2 hessian(const SolutionCoeffs& sc, Complex z, Complex w,
                   PhiMode phi = PhiMode::identity());

// max over points of |det hessian - 1|
double det_residual(const SolutionCoeffs& sc,
                    std::span<const std::pair<Complex, Complex>> points,
                    PhiMode phi = PhiMode::identity());

// Strict plurisubharmonicity at the sample points: h11 > 0 and det > 0.
bool psh_check(const SolutionCoeffs& sc,
               std::span<const std::pair<Complex, Complex>> points,
               PhiMode phi = PhiMode::identity());

// Max defect of the closed-form identity satisfied by the sqrt branch,
//   |phi'|^{-2} = |beta2|^2 |phi|^2
//               + 2 Re( ((3 beta2^2 - beta3)/2) phi^2 ) - 2 Re(beta2 phi) + 1
// with beta2 = phi''(0) = alpha, beta3 = phi'''(0) = 3 alpha^2.
double phi_identity_check(Complex alpha, std::span<const Complex> zs);

// Piecewise-quadratic glued potential |z-1|^2 + |w|^2 (Re z <= 1/2) vs
// |z|^2 + |w|^2 (Re z > 1/2): max |det - 1| off the gluing hypersurface.
double piecewise_residual(std::span<const std::pair<Complex, Complex>> points);

}  // namespace malab
