#include "malab/potential.hpp"

#include <algorithm>
#include <cmath>

namespace malab {

SolutionCoeffs::SolutionCoeffs(BiSeries a_in, BiSeries b_in, BiSeries c_in,
                               BiSeries d_in, double radius_in)
    : a(std::move(a_in)),
      b(std::move(b_in)),
      c(std::move(c_in)),
      d(std::move(d_in)),
      radius(radius_in) {
  const int n = std::min(std::min(a.order(), b.order()),
                         std::min(c.order(), d.order()));
  a = truncated(a, n).with_radius_hint(radius);
  b = truncated(b, n).with_radius_hint(radius);
  c = truncated(c, n).with_radius_hint(radius);
  d = truncated(d, n).with_radius_hint(radius);
  if (!a.is_real()) throw Error("SolutionCoeffs: a must be real-valued");
  if (!d.is_real()) throw Error("SolutionCoeffs: d must be real-valued");
  const Complex a0 = a.coeff(0, 0);
  if (!(a0.real() > 0.0))
    throw Error("SolutionCoeffs: a(0) must be positive");
  if (!(radius > 0.0)) throw Error("SolutionCoeffs: radius must be positive");
}

// --- ZPolyField --------------------------------------------------------------

ZPolyField ZPolyField::zero(int degree, int order) {
  ZPolyField f;
  f.deg_ = degree;
  f.e_.assign(size_t(degree + 1) * (degree + 2) / 2, BiSeries::zero(order));
  return f;
}

const BiSeries& ZPolyField::entry(int p, int q) const {
  static const BiSeries kZero = BiSeries::zero(0);
  if (p < 0 || q < 0 || p + q > deg_) return kZero;
  return e_[idx(p, q)];
}

ZPolyField ZPolyField::with_entry(int p, int q, BiSeries s) const {
  if (p < 0 || q < 0 || p + q > deg_)
    throw Error("ZPolyField::with_entry: degree bound exceeded");
  ZPolyField f = *this;
  f.e_[idx(p, q)] = std::move(s);
  return f;
}

ZPolyField add(const ZPolyField& a, const ZPolyField& b) {
  const int d = std::max(a.deg_, b.deg_);
  ZPolyField r = ZPolyField::zero(d, 0);
  for (int p = 0; p <= d; ++p)
    for (int q = 0; p + q <= d; ++q) {
      if (p + q <= a.deg_ && p + q <= b.deg_)
        r.e_[r.idx(p, q)] = add(a.entry(p, q), b.entry(p, q));
      else if (p + q <= a.deg_)
        r.e_[r.idx(p, q)] = a.entry(p, q);
      else
        r.e_[r.idx(p, q)] = b.entry(p, q);
    }
  return r;
}

ZPolyField sub(const ZPolyField& a, const ZPolyField& b) {
  return add(a, scale(b, Complex(-1.0)));
}

ZPolyField scale(const ZPolyField& a, Complex f) {
  ZPolyField r = a;
  for (auto& s : r.e_) s = scale(s, f);
  return r;
}

ZPolyField mul(const ZPolyField& a, const ZPolyField& b) {
  const int d = a.deg_ + b.deg_;
  ZPolyField r = ZPolyField::zero(d, 0);
  // Entry orders differ; accumulate with min-order adds starting from a
  // large zero so nothing is clipped before the first contribution lands.
  std::vector<bool> seen(r.e_.size(), false);
  for (int pa = 0; pa <= a.deg_; ++pa)
    for (int qa = 0; pa + qa <= a.deg_; ++qa)
      for (int pb = 0; pb <= b.deg_; ++pb)
        for (int qb = 0; pb + qb <= b.deg_; ++qb) {
          const BiSeries term = mul(a.entry(pa, qa), b.entry(pb, qb));
          const size_t k = r.idx(pa + pb, qa + qb);
          if (!seen[k]) {
            r.e_[k] = term;
            seen[k] = true;
          } else {
            r.e_[k] = add(r.e_[k], term);
          }
        }
  return r;
}

ZPolyField dz(const ZPolyField& a) {
  const int d = std::max(0, a.deg_ - 1);
  ZPolyField r = ZPolyField::zero(d, 0);
  for (int p = 0; p <= d; ++p)
    for (int q = 0; p + q <= d; ++q)
      r.e_[r.idx(p, q)] = scale(a.entry(p + 1, q), double(p + 1));
  return r;
}

ZPolyField dzbar(const ZPolyField& a) {
  const int d = std::max(0, a.deg_ - 1);
  ZPolyField r = ZPolyField::zero(d, 0);
  for (int p = 0; p <= d; ++p)
    for (int q = 0; p + q <= d; ++q)
      r.e_[r.idx(p, q)] = scale(a.entry(p, q + 1), double(q + 1));
  return r;
}

ZPolyField dw(const ZPolyField& a) {
  ZPolyField r = a;
  for (auto& s : r.e_) s = derive(s, Dir::W);
  return r;
}

ZPolyField dwbar(const ZPolyField& a) {
  ZPolyField r = a;
  for (auto& s : r.e_) s = derive(s, Dir::WBar);
  return r;
}

ZPolyField conj_field(const ZPolyField& a) {
  ZPolyField r = a;
  for (int p = 0; p <= a.deg_; ++p)
    for (int q = 0; p + q <= a.deg_; ++q)
      r.e_[r.idx(p, q)] = conj(a.entry(q, p));
  return r;
}

Complex evaluate(const ZPolyField& f, Complex z, Complex w) {
  Complex acc(0.0);
  const Complex zb = std::conj(z);
  for (int p = 0; p <= f.degree(); ++p)
    for (int q = 0; p + q <= f.degree(); ++q) {
      const Complex c = evaluate(f.entry(p, q), w);
      acc += c * std::pow(z, p) * std::pow(zb, q);
    }
  return acc;
}

double max_field_diff(const ZPolyField& f, const ZPolyField& g) {
  double m = 0.0;
  const int d = std::max(f.degree(), g.degree());
  for (int p = 0; p <= d; ++p)
    for (int q = 0; p + q <= d; ++q) {
      const BiSeries& a = f.entry(p, q);
      const BiSeries& b = g.entry(p, q);
      if (a.order() == 0 && max_abs_coeff(a) == 0.0)
        m = std::max(m, max_abs_coeff(b));
      else if (b.order() == 0 && max_abs_coeff(b) == 0.0)
        m = std::max(m, max_abs_coeff(a));
      else
        m = std::max(m, max_coeff_diff(a, b));
    }
  return m;
}

ZPolyField assemble_u(const SolutionCoeffs& sc) {
  ZPolyField u = ZPolyField::zero(2, sc.order());
  u = u.with_entry(1, 1, sc.a);
  u = u.with_entry(2, 0, sc.b);
  u = u.with_entry(0, 2, conj(sc.b));
  u = u.with_entry(1, 0, sc.c);
  u = u.with_entry(0, 1, conj(sc.c));
  u = u.with_entry(0, 0, sc.d);
  return u;
}

// --- phi map -----------------------------------------------------------------

PhiMode PhiMode::sqrt_branch(Complex alpha) {
  if (alpha == Complex(0.0))
    throw Error("sqrt_branch requires nonzero alpha; use identity()");
  return PhiMode{alpha};
}

Complex phi_value(Complex alpha, Complex z) {
  if (alpha == Complex(0.0)) return z;
  if (!(std::abs(z) < 1.0 / (2.0 * std::abs(alpha))))
    throw OutOfDomain("phi: |z| >= 1/(2|alpha|)");
  return (1.0 - std::sqrt(1.0 - 2.0 * alpha * z)) / alpha;
}

Complex phi_deriv(Complex alpha, Complex z) {
  if (alpha == Complex(0.0)) return Complex(1.0);
  if (!(std::abs(z) < 1.0 / (2.0 * std::abs(alpha))))
    throw OutOfDomain("phi: |z| >= 1/(2|alpha|)");
  return 1.0 / std::sqrt(1.0 - 2.0 * alpha * z);
}

// --- Hessian -----------------------------------------------------------------

HessianEvaluator::HessianEvaluator(const SolutionCoeffs& sc, PhiMode phi)
    : phi_(phi), radius_(sc.radius) {
  a_ = sc.a;
  awb_ = derive(sc.a, Dir::WBar);
  bwb_ = derive(sc.b, Dir::WBar);
  cwb_ = derive(sc.c, Dir::WBar);
  awbw_ = derive(awb_, Dir::W);
  bwbw_ = derive(bwb_, Dir::W);
  cwbw_ = derive(cwb_, Dir::W);
  dwbw_ = derive(derive(sc.d, Dir::WBar), Dir::W);
}

std::array<Complex, 4> HessianEvaluator::raw(Complex z, Complex w) const {
  const Complex p = phi_value(phi_.alpha, z);
  const Complex dp = phi_deriv(phi_.alpha, z);
  const Complex pb = std::conj(p);

  const Complex A = evaluate(a_, w);
  const Complex Awb = evaluate(awb_, w);
  const Complex Bwb = evaluate(bwb_, w);
  const Complex Cwb = evaluate(cwb_, w);
  const Complex Awbw = evaluate(awbw_, w);
  const Complex Bwbw = evaluate(bwbw_, w);
  const Complex Cwbw = evaluate(cwbw_, w);
  const Complex Dwbw = evaluate(dwbw_, w);

  const Complex h11 = A * std::norm(dp);
  const Complex h12 = dp * (Awb * pb + 2.0 * Bwb * p + Cwb);
  const Complex h21 = std::conj(h12);
  const Complex h22 = Awbw * std::norm(p) + Bwbw * p * p +
                      std::conj(Bwbw * p * p) + Cwbw * p +
                      std::conj(Cwbw * p) + Dwbw;
  return {h11, h12, h21, h22};
}

Hermitian2 HessianEvaluator::operator()(Complex z, Complex w) const {
  const auto e = raw(z, w);
  return Hermitian2{e[0].real(), e[3].real(), e[1]};
}

Hermitian2 hessian(const SolutionCoeffs& sc, Complex z, Complex w,
                   PhiMode phi) {
  return HessianEvaluator(sc, phi)(z, w);
}

double det_residual(const SolutionCoeffs& sc,
                    std::span<const std::pair<Complex, Complex>> points,
                    PhiMode phi) {
  const HessianEvaluator H(sc, phi);
  double worst = 0.0;
  for (const auto& [z, w] : points)
    worst = std::max(worst, std::abs(H(z, w).det() - 1.0));
  return worst;
}

bool psh_check(const SolutionCoeffs& sc,
               std::span<const std::pair<Complex, Complex>> points,
               PhiMode phi) {
  const HessianEvaluator H(sc, phi);
  for (const auto& [z, w] : points) {
    const Hermitian2 h = H(z, w);
    if (!(h.h11 > 0.0) || !(h.det() > 0.0)) return false;
  }
  return true;
}

double phi_identity_check(Complex alpha, std::span<const Complex> zs) {
  const Complex beta2 = alpha;                  // phi''(0)
  const Complex beta3 = 3.0 * alpha * alpha;    // phi'''(0)
  const Complex quad = 0.5 * (3.0 * beta2 * beta2 - beta3);
  double worst = 0.0;
  for (Complex z : zs) {
    const Complex p = phi_value(alpha, z);
    const Complex dp = phi_deriv(alpha, z);
    const double lhs = 1.0 / std::norm(dp);
    const double rhs = std::norm(beta2) * std::norm(p) +
                       2.0 * (quad * p * p).real() -
                       2.0 * (beta2 * p).real() + 1.0;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double piecewise_residual(
    std::span<const std::pair<Complex, Complex>> points) {
  double worst = 0.0;
  for (const auto& [z, w] : points) {
    (void)w;
    if (z.real() == 0.5)
      throw OnHypersurface("piecewise potential probed at Re(z) = 1/2");
    // The pieces |z-1|^2 + |w|^2 and |z|^2 + |w|^2 differ by 1 - z - conj(z),
    // which is pluriharmonic: on either side the complex Hessian is the
    // identity matrix.
    const Hermitian2 h{1.0, 1.0, Complex(0.0)};
    worst = std::max(worst, std::abs(h.det() - 1.0));
  }
  return worst;
}

}  // namespace malab
