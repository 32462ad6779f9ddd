#include "malab/curvature.hpp"

#include <algorithm>
#include <cmath>

namespace malab {

namespace {

// Wirtinger derivative of a field in the holomorphic coordinate z_beta.
ZPolyField d_holo(const ZPolyField& f, int beta) {
  return (beta == 1) ? dz(f) : dw(f);
}
ZPolyField d_antiholo(const ZPolyField& f, int beta) {
  return (beta == 1) ? dzbar(f) : dwbar(f);
}

void require_unimodular(const SolutionCoeffs& sc, double tol) {
  const auto res = system_residual(sc, SystemVariant::MA1);
  for (double r : res)
    if (!(r <= tol))
      throw NotUnimodular(
          "metric inversion by adjugate requires the unit-determinant system "
          "to hold; max residual " +
          std::to_string(*std::max_element(res.begin(), res.end())));
}

}  // namespace

MetricPair metric_and_inverse(const SolutionCoeffs& sc, double tol) {
  require_unimodular(sc, tol);
  const ZPolyField u = assemble_u(sc);
  MetricPair m;
  for (int gamma = 1; gamma <= 2; ++gamma)
    for (int nu = 1; nu <= 2; ++nu)
      m.g.e[gamma - 1][nu - 1] = d_antiholo(d_holo(u, gamma), nu);
  // Adjugate of [[A,B],[C,D]] with det = 1: inverse = [[D,-B],[-C,A]].
  m.ginv.e[0][0] = m.g.e[1][1];
  m.ginv.e[0][1] = scale(m.g.e[0][1], Complex(-1.0));
  m.ginv.e[1][0] = scale(m.g.e[1][0], Complex(-1.0));
  m.ginv.e[1][1] = m.g.e[0][0];
  return m;
}

ChristoffelSymbols christoffel(const SolutionCoeffs& sc, double tol) {
  const MetricPair m = metric_and_inverse(sc, tol);
  ChristoffelSymbols cs;
  for (int alpha = 1; alpha <= 2; ++alpha)
    for (int beta = 1; beta <= 2; ++beta)
      for (int gamma = 1; gamma <= 2; ++gamma) {
        ZPolyField acc;
        bool first = true;
        for (int nu = 1; nu <= 2; ++nu) {
          const ZPolyField term =
              mul(d_holo(m.g(gamma, nu), beta), m.ginv(nu, alpha));
          acc = first ? term : add(acc, term);
          first = false;
        }
        cs.sym[alpha - 1][beta - 1][gamma - 1] = acc;
      }
  return cs;
}

CurvatureReport curvature_components(
    const SolutionCoeffs& sc,
    std::span<const std::pair<Complex, Complex>> points, double flat_tol,
    double unimodular_tol) {
  CurvatureReport rep;
  rep.christoffel = christoffel(sc, unimodular_tol);
  rep.flat_tol = flat_tol;
  double worst = 0.0;
  for (int delta = 1; delta <= 2; ++delta)
    for (int alpha = 1; alpha <= 2; ++alpha)
      for (int beta = 1; beta <= 2; ++beta)
        for (int gamma = 1; gamma <= 2; ++gamma) {
          const ZPolyField R = scale(
              d_antiholo(rep.christoffel(delta, alpha, gamma), beta),
              Complex(-1.0));
          double cmax = 0.0;
          for (const auto& [z, w] : points)
            cmax = std::max(cmax, std::abs(evaluate(R, z, w)));
          rep.component_max[{delta, alpha, beta, gamma}] = cmax;
          worst = std::max(worst, cmax);
        }
  rep.flat = worst <= flat_tol;
  rep.obstruction_defect = obstruction_check(sc, points, unimodular_tol);
  return rep;
}

double obstruction_check(const SolutionCoeffs& sc,
                         std::span<const std::pair<Complex, Complex>> points,
                         double unimodular_tol) {
  const ChristoffelSymbols cs = christoffel(sc, unimodular_tol);
  const ZPolyField R1111 =
      scale(dzbar(cs(1, 1, 1)), Complex(-1.0));
  const BiSeries bwb = derive(sc.b, Dir::WBar);
  double worst = 0.0;
  for (const auto& [z, w] : points) {
    const Complex lhs = evaluate(R1111, z, w);
    const double rhs = 4.0 * std::norm(evaluate(bwb, w));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double geodesic_integrand(double R, double t) {
  return std::sqrt(2.0 * (R - t * t / R));
}

namespace {
double adaptive_simpson(double R, double lo, double hi, double flo, double fmid,
                        double fhi, double whole, double tol, int depth) {
  const double mid = 0.5 * (lo + hi);
  const double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
  const double flm = geodesic_integrand(R, lm);
  const double frm = geodesic_integrand(R, rm);
  const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
  const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(R, lo, mid, flo, flm, fmid, left, 0.5 * tol,
                          depth - 1) +
         adaptive_simpson(R, mid, hi, fmid, frm, fhi, right, 0.5 * tol,
                          depth - 1);
}
}  // namespace

double geodesic_length(const SolutionCoeffs& sc, double R) {
  if (!(R > 0.0)) throw Error("geodesic_length: R must be positive");
  // Consistency of the supplied coefficients with the closed-form fiber
  // metric: d_wbar_w(0) = R.
  const BiSeries dwbw = derive(derive(sc.d, Dir::WBar), Dir::W);
  const double at0 = evaluate(dwbw, Complex(0.0)).real();
  if (std::abs(at0 - R) > 1e-6 * std::max(1.0, R))
    throw Error("geodesic_length: coefficients do not match the disc family");
  const double lo = 0.0, hi = R;
  const double flo = geodesic_integrand(R, lo);
  const double fhi = geodesic_integrand(R, hi);
  const double fmid = geodesic_integrand(R, 0.5 * (lo + hi));
  const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
  return adaptive_simpson(R, lo, hi, flo, fmid, fhi, whole,
                          1e-10 * std::max(1.0, R * std::sqrt(R)), 48);
}

}  // namespace malab
