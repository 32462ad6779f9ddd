#include "malab/series.hpp"

#include <algorithm>
#include <cmath>

namespace malab {

namespace {
std::optional<double> min_radius(const std::optional<double>& a,
                                 const std::optional<double>& b) {
  if (a && b) return std::min(*a, *b);
  return a ? a : b;
}
}  // namespace

void BiSeries::refresh_flags() {
  holo_ = true;
  real_ = true;
  for (int i = 0; i <= order_ && (holo_ || real_); ++i) {
    for (int j = 0; i + j <= order_; ++j) {
      const Complex v = c_[idx(i, j)];
      if (j >= 1 && v != Complex(0.0)) holo_ = false;
      if (v != std::conj(c_[idx(j, i)])) real_ = false;
      if (!holo_ && !real_) break;
    }
  }
}

void BiSeries::symmetrize() {
  for (int i = 0; i <= order_; ++i)
    for (int j = i; i + j <= order_; ++j) {
      const Complex m = 0.5 * (c_[idx(i, j)] + std::conj(c_[idx(j, i)]));
      c_[idx(i, j)] = m;
      c_[idx(j, i)] = std::conj(m);
    }
}

BiSeries BiSeries::zero(int order) {
  BiSeries s(order);
  s.refresh_flags();
  return s;
}

BiSeries BiSeries::constant(Complex value, int order) {
  BiSeries s(order);
  s.at(0, 0) = value;
  s.refresh_flags();
  return s;
}

BiSeries BiSeries::monomial(int i, int j, Complex value, int order) {
  BiSeries s(order);
  s.at(i, j) = value;
  s.refresh_flags();
  return s;
}

BiSeries BiSeries::from_coeffs(int order, const std::vector<Complex>& table) {
  BiSeries s(order);
  if (table.size() != s.c_.size())
    throw Error("from_coeffs: table size does not match order");
  s.c_ = table;
  s.refresh_flags();
  return s;
}

BiSeries BiSeries::holo_poly(const std::vector<Complex>& coeffs, int order) {
  BiSeries s(order);
  for (size_t k = 0; k < coeffs.size() && int(k) <= order; ++k)
    s.at(int(k), 0) = coeffs[k];
  s.refresh_flags();
  return s;
}

BiSeries BiSeries::geometric_ww(int order) {
  BiSeries s(order);
  for (int n = 0; 2 * n <= order; ++n) s.at(n, n) = 1.0;
  s.refresh_flags();
  s.radius_ = 1.0;
  return s;
}

BiSeries BiSeries::with_radius_hint(double r) const {
  if (!(r > 0.0)) throw Error("radius hint must be positive");
  BiSeries s = *this;
  s.radius_ = r;
  return s;
}

namespace {
// Every all-zero series in this library is a structural (exact) zero --
// placeholder entries in derived fields, zero seeds, derivatives of
// constants -- so it must not clip the partner's truncation window.
bool identically_zero(const BiSeries& s) {
  for (int i = 0; i <= s.order(); ++i)
    for (int j = 0; i + j <= s.order(); ++j)
      if (s.coeff(i, j) != Complex(0.0)) return false;
  return true;
}
}  // namespace

BiSeries add(const BiSeries& a, const BiSeries& b) {
  if (a.order_ < b.order_ && identically_zero(a)) {
    BiSeries r = b;
    r.radius_ = min_radius(a.radius_, b.radius_);
    return r;
  }
  if (b.order_ < a.order_ && identically_zero(b)) {
    BiSeries r = a;
    r.radius_ = min_radius(a.radius_, b.radius_);
    return r;
  }
  const int n = std::min(a.order_, b.order_);
  BiSeries r(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) r.at(i, j) = a.coeff(i, j) + b.coeff(i, j);
  r.radius_ = min_radius(a.radius_, b.radius_);
  r.refresh_flags();
  return r;
}

BiSeries sub(const BiSeries& a, const BiSeries& b) {
  if (a.order_ < b.order_ && identically_zero(a)) {
    BiSeries r = scale(b, Complex(-1.0));
    r.radius_ = min_radius(a.radius_, b.radius_);
    return r;
  }
  if (b.order_ < a.order_ && identically_zero(b)) {
    BiSeries r = a;
    r.radius_ = min_radius(a.radius_, b.radius_);
    return r;
  }
  const int n = std::min(a.order_, b.order_);
  BiSeries r(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) r.at(i, j) = a.coeff(i, j) - b.coeff(i, j);
  r.radius_ = min_radius(a.radius_, b.radius_);
  r.refresh_flags();
  return r;
}

BiSeries mul(const BiSeries& a, const BiSeries& b) {
  if (identically_zero(a) || identically_zero(b)) {
    BiSeries r(std::max(a.order_, b.order_));
    r.radius_ = min_radius(a.radius_, b.radius_);
    r.refresh_flags();
    return r;
  }
  const int n = std::min(a.order_, b.order_);
  BiSeries r(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) {
      Complex acc(0.0);
      for (int p = 0; p <= i; ++p)
        for (int q = 0; q <= j; ++q) {
          if (p + q > a.order_ || (i - p) + (j - q) > b.order_) continue;
          acc += a.coeff(p, q) * b.coeff(i - p, j - q);
        }
      r.at(i, j) = acc;
    }
  // Products of real series are real; enforce the coefficient symmetry
  // exactly (summation order would otherwise leave 1-ulp asymmetries).
  if (a.real_ && b.real_) r.symmetrize();
  r.radius_ = min_radius(a.radius_, b.radius_);
  r.refresh_flags();
  return r;
}

BiSeries scale(const BiSeries& s, Complex factor) {
  BiSeries r(s.order());
  for (int i = 0; i <= s.order(); ++i)
    for (int j = 0; i + j <= s.order(); ++j) r.at(i, j) = factor * s.coeff(i, j);
  r.radius_ = s.radius_hint();
  r.refresh_flags();
  return r;
}

BiSeries conj(const BiSeries& s) {
  BiSeries r(s.order());
  for (int i = 0; i <= s.order(); ++i)
    for (int j = 0; i + j <= s.order(); ++j)
      r.at(i, j) = std::conj(s.coeff(j, i));
  r.radius_ = s.radius_hint();
  r.refresh_flags();
  return r;
}

BiSeries re_part(const BiSeries& s) {
  BiSeries r = add(s, conj(s));
  return scale(r, 0.5);
}

BiSeries derive(const BiSeries& s, Dir d) {
  const int n = std::max(0, s.order() - 1);
  BiSeries r(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      r.at(i, j) = (d == Dir::W) ? double(i + 1) * s.coeff(i + 1, j)
                                 : double(j + 1) * s.coeff(i, j + 1);
  r.radius_ = s.radius_hint();
  r.refresh_flags();
  return r;
}

BiSeries int_wbar(const BiSeries& s) {
  const int n = s.order() + 1;
  BiSeries r(n);
  for (int i = 0; i <= s.order(); ++i)
    for (int j = 0; i + j <= s.order(); ++j)
      r.at(i, j + 1) = s.coeff(i, j) / double(j + 1);
  r.radius_ = s.radius_hint();
  r.refresh_flags();
  return r;
}

BiSeries int_mixed(const BiSeries& s) {
  const int n = s.order() + 2;
  BiSeries r(n);
  for (int i = 0; i <= s.order(); ++i)
    for (int j = 0; i + j <= s.order(); ++j)
      r.at(i + 1, j + 1) = s.coeff(i, j) / double((i + 1) * (j + 1));
  r.radius_ = s.radius_hint();
  r.refresh_flags();
  return r;
}

BiSeries truncated(const BiSeries& s, int order) {
  BiSeries r(order);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order; ++j) r.at(i, j) = s.coeff(i, j);
  r.radius_ = s.radius_hint();
  r.refresh_flags();
  return r;
}

BiSeries exp_series(const BiSeries& s) {
  const int n = s.order();
  const Complex c00 = s.coeff(0, 0);
  const BiSeries y = sub(s, BiSeries::constant(c00, n));  // zero constant term
  // Horner form of sum_{k<=n} y^k / k!: r = 1 + y/1 (1 + y/2 (1 + ...)).
  BiSeries r = BiSeries::constant(1.0, n);
  for (int k = n; k >= 1; --k) {
    r = add(BiSeries::constant(1.0, n), scale(mul(y, r), 1.0 / double(k)));
  }
  r = scale(r, std::exp(c00));
  if (s.is_real()) {
    // exp of a real function is real; re-pin the exact symmetry.
    BiSeries sym = add(r, conj(r));
    r = scale(sym, 0.5);
  }
  if (auto rad = s.radius_hint()) r = r.with_radius_hint(*rad);
  return r;
}

BiSeries log_series(const BiSeries& s) {
  const Complex c00 = s.coeff(0, 0);
  if (c00 == Complex(0.0))
    throw Error("log_series requires a nonzero constant term");
  const int n = s.order();
  const BiSeries y =
      sub(scale(s, 1.0 / c00), BiSeries::constant(1.0, n));  // s/c00 - 1
  // log(1+y) = sum (-1)^{k+1} y^k / k, Horner form.
  BiSeries r = BiSeries::zero(n);
  for (int k = n; k >= 1; --k) {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    r = add(BiSeries::constant(sign / double(k), n), mul(y, r));
  }
  r = mul(y, r);
  r = add(r, BiSeries::constant(std::log(c00), n));
  if (s.is_real() && c00.imag() == 0.0 && c00.real() > 0.0) {
    BiSeries sym = add(r, conj(r));
    r = scale(sym, 0.5);
  }
  if (auto rad = s.radius_hint()) r = r.with_radius_hint(*rad);
  return r;
}

BiSeries inv_series(const BiSeries& s) {
  const Complex c00 = s.coeff(0, 0);
  if (c00 == Complex(0.0))
    throw Error("inv_series requires a nonzero constant term");
  const int n = s.order();
  const BiSeries y =
      sub(BiSeries::constant(1.0, n), scale(s, 1.0 / c00));  // 1 - s/c00
  // 1/s = (1/c00) sum y^k, Horner form.
  BiSeries r = BiSeries::constant(1.0, n);
  for (int k = 0; k < n; ++k)
    r = add(BiSeries::constant(1.0, n), mul(y, r));
  r = scale(r, 1.0 / c00);
  if (s.is_real()) {
    BiSeries sym = add(r, conj(r));
    r = scale(sym, 0.5);
  }
  if (auto rad = s.radius_hint()) r = r.with_radius_hint(*rad);
  return r;
}

Complex evaluate(const BiSeries& s, Complex w) {
  if (auto r = s.radius_hint()) {
    if (!(std::abs(w) < *r))
      throw OutOfRadius("evaluation point |w| >= radius hint");
  }
  const int n = s.order();
  std::vector<Complex> wp(n + 1), wq(n + 1);
  wp[0] = wq[0] = Complex(1.0);
  const Complex wb = std::conj(w);
  for (int k = 1; k <= n; ++k) {
    wp[k] = wp[k - 1] * w;
    wq[k] = wq[k - 1] * wb;
  }
  Complex acc(0.0);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) acc += s.coeff(i, j) * wp[i] * wq[j];
  return acc;
}

Evaluation evaluate_bounded(const BiSeries& s, Complex w) {
  Evaluation ev{evaluate(s, w), std::nullopt};
  if (auto r = s.radius_hint()) {
    const double rho = std::abs(w) / *r;
    double cmax = 0.0;
    for (int i = 0; i <= s.order(); ++i)
      for (int j = 0; i + j <= s.order(); ++j)
        cmax = std::max(cmax, std::abs(s.coeff(i, j)) * std::pow(*r, i + j));
    const int n = s.order();
    ev.tail_bound = cmax * double(n + 2) * std::pow(rho, n + 1) /
                    ((1.0 - rho) * (1.0 - rho));
  }
  return ev;
}

double max_abs_coeff(const BiSeries& s) {
  double m = 0.0;
  for (int i = 0; i <= s.order(); ++i)
    for (int j = 0; i + j <= s.order(); ++j)
      m = std::max(m, std::abs(s.coeff(i, j)));
  return m;
}

double max_coeff_diff(const BiSeries& a, const BiSeries& b) {
  const int n = std::min(a.order(), b.order());
  double m = 0.0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      m = std::max(m, std::abs(a.coeff(i, j) - b.coeff(i, j)));
  return m;
}

}  // namespace malab
