#include "malab/families.hpp"

#include <cmath>

namespace malab {

BiSeries seed_zero(int order) { return BiSeries::zero(order); }

BiSeries seed_poly(const std::vector<Complex>& coeffs, int order) {
  return BiSeries::holo_poly(coeffs, order);
}

BiSeries seed_exp(Complex lambda, int order) {
  return exp_series(
      BiSeries::holo_poly({Complex(0.0), lambda}, order));
}

BiSeries seed_linear_over_R(double R, int order) {
  if (!(R > 0.0)) throw SeedRejected("linear seed requires R > 0");
  return BiSeries::holo_poly({Complex(0.0), Complex(1.0 / R)}, order)
      .with_radius_hint(R);
}

SolutionCoeffs build_flat(const BiSeries& h, const BiSeries& f,
                          const BiSeries& b, int order) {
  if (!h.is_holomorphic()) throw SeedRejected("build_flat: h not holomorphic");
  if (!f.is_holomorphic()) throw SeedRejected("build_flat: f not holomorphic");
  if (!b.is_holomorphic()) throw SeedRejected("build_flat: b not holomorphic");
  const BiSeries hN = truncated(h, order);
  const BiSeries fN = truncated(f, order);
  const BiSeries two_re_h = scale(re_part(hN), 2.0);
  const BiSeries a = exp_series(two_re_h);
  const BiSeries ainv = exp_series(scale(two_re_h, -1.0));
  const BiSeries c = int_wbar(mul(a, conj(fN)));
  const BiSeries d = int_mixed(add(mul(a, mul(fN, conj(fN))), ainv));
  return SolutionCoeffs(a, truncated(b, order), truncated(c, order),
                        truncated(d, order), kEntireRadius);
}

SolutionCoeffs build_nowhere_flat(const BiSeries& f, const BiSeries& c_holo,
                                  int order, double R) {
  if (!f.is_holomorphic())
    throw SeedRejected("build_nowhere_flat: f not holomorphic");
  if (!c_holo.is_holomorphic())
    throw SeedRejected("build_nowhere_flat: c not holomorphic");
  if (!(R > 0.0)) throw SeedRejected("build_nowhere_flat: R must be positive");

  const BiSeries fN = truncated(f, order).with_radius_hint(R);
  const BiSeries fp = derive(fN, Dir::W);
  if (fp.coeff(0, 0) == Complex(0.0))
    throw SeedRejected("build_nowhere_flat: f'(0) = 0");

  // Admissibility: |f| < 1 sampled on 64 points just inside the boundary.
  for (int k = 0; k < 64; ++k) {
    const double th = 2.0 * M_PI * double(k) / 64.0;
    const Complex w = 0.999 * R * Complex(std::cos(th), std::sin(th));
    if (!(std::abs(evaluate(fN, w)) < 1.0))
      throw SeedRejected("build_nowhere_flat: |f| >= 1 near the boundary");
  }

  const BiSeries ffbar = mul(fN, conj(fN));
  const BiSeries one_minus = sub(BiSeries::constant(1.0, order), ffbar);
  const BiSeries log_a =
      sub(re_part(log_series(truncated(fp, order))), log_series(one_minus));
  const BiSeries a = exp_series(log_a);

  // b = int_wbar( |f'|^2 / (2 (1 - f conj f)^2) )
  const BiSeries fp2 = mul(truncated(fp, order), conj(truncated(fp, order)));
  const BiSeries denom = mul(one_minus, one_minus);
  const BiSeries b = int_wbar(scale(mul(fp2, inv_series(denom)), 0.5));

  const BiSeries c = truncated(c_holo, order).with_radius_hint(R);
  const BiSeries cwb = derive(c, Dir::WBar);  // zero for holomorphic c
  const BiSeries d = int_mixed(
      mul(exp_series(scale(log_a, -1.0)),
          add(mul(cwb, conj(cwb)), BiSeries::constant(1.0, order))));
  return SolutionCoeffs(a, b, c, d, R);
}

std::array<double, 4> system_residual(const SolutionCoeffs& sc,
                                      SystemVariant variant) {
  const BiSeries& a = sc.a;
  const BiSeries aw = derive(a, Dir::W);
  const BiSeries awb = derive(a, Dir::WBar);
  const BiSeries awbw = derive(awb, Dir::W);
  const BiSeries bwb = derive(sc.b, Dir::WBar);
  const BiSeries bwbw = derive(bwb, Dir::W);
  const BiSeries cwb = derive(sc.c, Dir::WBar);
  const BiSeries cwbw = derive(cwb, Dir::W);
  const BiSeries dwbw = derive(derive(sc.d, Dir::WBar), Dir::W);
  const int n = std::max(0, sc.order() - 2);
  const BiSeries one = BiSeries::constant(1.0, n);

  BiSeries r1 = sub(mul(a, awbw),
                    add(mul(aw, awb), scale(mul(bwb, conj(bwb)), 4.0)));
  BiSeries r2 = sub(mul(a, bwbw), scale(mul(aw, bwb), 2.0));
  BiSeries r3 = sub(mul(a, cwbw),
                    add(mul(aw, cwb), scale(mul(bwb, conj(cwb)), 2.0)));
  BiSeries r4 = sub(mul(a, dwbw),
                    add(mul(cwb, conj(cwb)), one));
  if (variant == SystemVariant::MA4) {
    r1 = sub(r1, one);
    r3 = add(r3, one);
  }
  return {max_abs_coeff(truncated(r1, n)), max_abs_coeff(truncated(r2, n)),
          max_abs_coeff(truncated(r3, n)), max_abs_coeff(truncated(r4, n))};
}

AntiHoloInvariant antiholo_invariant(const SolutionCoeffs& sc) {
  // exp(-2 log a) = 1/a^2; a has positive constant term by construction.
  const BiSeries a2_inv = inv_series(mul(sc.a, sc.a));
  const BiSeries inv = mul(a2_inv, derive(sc.b, Dir::WBar));
  const double defect = max_abs_coeff(derive(inv, Dir::W));
  return {inv, defect};
}

SolutionCoeffs rescale_solution(const SolutionCoeffs& sc, double r, double R) {
  if (!(r > 0.0) || !(R > 0.0))
    throw Error("rescale_solution: radii must be positive");
  const double lam = r / R;
  const int n = sc.order();
  auto dilate = [&](const BiSeries& s, double prefactor) {
    std::vector<Complex> table;
    table.reserve(size_t(n + 1) * (n + 2) / 2);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j)
        table.push_back(prefactor * std::pow(lam, i + j) * s.coeff(i, j));
    return BiSeries::from_coeffs(n, table);
  };
  return SolutionCoeffs(dilate(sc.a, 1.0), dilate(sc.b, 1.0),
                        dilate(sc.c, R / r), dilate(sc.d, (R / r) * (R / r)),
                        sc.radius * R / r);
}

}  // namespace malab
