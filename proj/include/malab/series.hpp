#pragma once
// Truncated bivariate power series in (w, conj(w)) with complex coefficients.
//
// A BiSeries of order N stores coefficients c(i,j) for i + j <= N and
// represents sum c(i,j) w^i conj(w)^j. Two structural properties are tracked
// exactly (bitwise tests on the coefficient table, refreshed after every
// operation):
//   real        c(i,j) == conj(c(j,i)) for all i,j  — the function is
//               real-valued;
//   holomorphic c(i,j) == 0 for all j >= 1          — no conj(w) dependence.
//
// Values are immutable once built; all algebra goes through free functions.
// Binary operations truncate at the minimum input order; antiderivatives
// raise the order (they are exact on every retained term).  An identically
// zero operand counts as an exact zero and never clips the partner's window
// (all-zero series only arise structurally: placeholder field entries, zero
// seeds, derivatives of constants).

#include <complex>
#include <optional>
#include <vector>

#include "malab/errors.hpp"

namespace malab {

using Complex = std::complex<double>;

enum class Dir { W, WBar };

class BiSeries {
 public:
  BiSeries() : order_(0), c_(1, Complex(0.0)) { refresh_flags(); }

  static BiSeries zero(int order);
  static BiSeries constant(Complex value, int order);
  static BiSeries monomial(int i, int j, Complex value, int order);
  // Triangular coefficient table, row-major in i: entries for each i from 0
  // to order, j from 0 to order - i.
  static BiSeries from_coeffs(int order, const std::vector<Complex>& table);
  // Holomorphic polynomial sum coeffs[k] w^k.
  static BiSeries holo_poly(const std::vector<Complex>& coeffs, int order);
  // sum_k (w conj(w))^k up to the order; radius hint 1.
  static BiSeries geometric_ww(int order);

  int order() const { return order_; }
  Complex coeff(int i, int j) const {
    if (i < 0 || j < 0 || i + j > order_) return Complex(0.0);
    return c_[idx(i, j)];
  }
  bool is_real() const { return real_; }
  bool is_holomorphic() const { return holo_; }
  std::optional<double> radius_hint() const { return radius_; }
  BiSeries with_radius_hint(double r) const;

 private:
  friend BiSeries add(const BiSeries&, const BiSeries&);
  friend BiSeries sub(const BiSeries&, const BiSeries&);
  friend BiSeries mul(const BiSeries&, const BiSeries&);
  friend BiSeries scale(const BiSeries&, Complex);
  friend BiSeries conj(const BiSeries&);
  friend BiSeries derive(const BiSeries&, Dir);
  friend BiSeries int_wbar(const BiSeries&);
  friend BiSeries int_mixed(const BiSeries&);
  friend BiSeries truncated(const BiSeries&, int);

  explicit BiSeries(int order)
      : order_(order), c_(size_t(order + 1) * (order + 2) / 2, Complex(0.0)) {}
  size_t idx(int i, int j) const {
    return size_t(i) * (order_ + 1) - size_t(i) * (i - 1) / 2 + j;
  }
  Complex& at(int i, int j) { return c_[idx(i, j)]; }
  void refresh_flags();
  void symmetrize();  // enforce c(i,j) = conj(c(j,i)) by averaging

  int order_;
  std::vector<Complex> c_;
  bool real_ = false;
  bool holo_ = false;
  std::optional<double> radius_;
};

// --- algebra ---------------------------------------------------------------
BiSeries add(const BiSeries& a, const BiSeries& b);
BiSeries sub(const BiSeries& a, const BiSeries& b);
BiSeries mul(const BiSeries& a, const BiSeries& b);
BiSeries scale(const BiSeries& s, Complex factor);
inline BiSeries operator+(const BiSeries& a, const BiSeries& b) { return add(a, b); }
inline BiSeries operator-(const BiSeries& a, const BiSeries& b) { return sub(a, b); }
inline BiSeries operator*(const BiSeries& a, const BiSeries& b) { return mul(a, b); }

// Coefficient conjugation-transposition; realizes pointwise complex
// conjugation of the represented function.
BiSeries conj(const BiSeries& s);
// (s + conj(s)) / 2 — the real part as a function.
BiSeries re_part(const BiSeries& s);

// Wirtinger derivative; order drops by one.
BiSeries derive(const BiSeries& s, Dir d);
// Antiderivative in conj(w) with zero integration constant; order rises by 1.
BiSeries int_wbar(const BiSeries& s);
// Mixed antiderivative: t with d/dw d/dconj(w) t = s, zero constants; +2.
BiSeries int_mixed(const BiSeries& s);
BiSeries truncated(const BiSeries& s, int order);

// exp(s) via exp(c00) * sum (s - c00)^k / k!; exact through the order.
BiSeries exp_series(const BiSeries& s);
// log(s), principal branch anchored at s(0,0); requires s(0,0) != 0.
BiSeries log_series(const BiSeries& s);
// 1/s; requires s(0,0) != 0.
BiSeries inv_series(const BiSeries& s);

// --- evaluation --------------------------------------------------------------
struct Evaluation {
  Complex value;
  // Geometric tail estimate when a radius hint is present:
  // C (N+2) rho^{N+1} / (1-rho)^2 with rho = |w|/radius and
  // C = max |c(i,j)| radius^{i+j}.
  std::optional<double> tail_bound;
};

Complex evaluate(const BiSeries& s, Complex w);  // throws OutOfRadius
Evaluation evaluate_bounded(const BiSeries& s, Complex w);

// --- diagnostics -------------------------------------------------------------
double max_abs_coeff(const BiSeries& s);
// Max |a(i,j) - b(i,j)| over the common range i + j <= min(order_a, order_b).
double max_coeff_diff(const BiSeries& a, const BiSeries& b);

}  // namespace malab
