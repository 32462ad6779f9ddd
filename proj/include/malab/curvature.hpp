#pragma once
// Kaehler geometry of the ansatz metric g = dd-bar u: inverse by adjugate
// (valid because det g = 1 for solutions), Christoffel symbols
// Gamma^alpha_{beta gamma} = d g_{gamma nubar} / d z_beta * g^{nubar alpha},
// curvature components R^delta_{alpha betabar gamma} = -d Gamma / d zbar_beta,
// the obstruction identity R^1_{1 1bar 1} = 4 |b_wbar|^2, and the geodesic
// length of the base segment of the disc family.

#include <map>

#include "malab/families.hpp"
#include "malab/potential.hpp"

namespace malab {

// 2x2 matrix of z-polynomial fields; index 1 = fiber (z), 2 = base (w).
struct FieldMatrix2 {
  ZPolyField e[2][2];
  const ZPolyField& operator()(int r, int c) const { return e[r - 1][c - 1]; }
};

struct MetricPair {
  FieldMatrix2 g;     // g(gamma, nu) = d_{z_gamma} d_{zbar_nu} u
  FieldMatrix2 ginv;  // ginv(nu, alpha) = g^{nubar alpha} (adjugate, det = 1)
};

// Throws NotUnimodular unless the coupled-system residual is <= tol.
MetricPair metric_and_inverse(const SolutionCoeffs& sc, double tol = 1e-8);

struct ChristoffelSymbols {
  // gamma[alpha-1][beta-1][gamma-1]; symmetric in the lower pair.
  ZPolyField sym[2][2][2];
  const ZPolyField& operator()(int a, int b, int c) const {
    return sym[a - 1][b - 1][c - 1];
  }
};

ChristoffelSymbols christoffel(const SolutionCoeffs& sc, double tol = 1e-8);

struct CurvatureReport {
  ChristoffelSymbols christoffel;
  // max sampled |R^delta_{alpha betabar gamma}| keyed by (delta, alpha, beta, gamma)
  std::map<std::array<int, 4>, double> component_max;
  bool flat = false;
  double flat_tol = 0.0;
  double obstruction_defect = 0.0;
};

CurvatureReport curvature_components(
    const SolutionCoeffs& sc,
    std::span<const std::pair<Complex, Complex>> points, double flat_tol = 1e-8,
    double unimodular_tol = 1e-8);

// Max over points of |R^1_{1 1bar 1}(z, w) - 4 |b_wbar(w)|^2| with both sides
// evaluated from the same truncated coefficients (pipeline identity check).
double obstruction_check(const SolutionCoeffs& sc,
                         std::span<const std::pair<Complex, Complex>> points,
                         double unimodular_tol = 1e-8);

// The curve t -> (0, t), 0 <= t < R, in the disc family, where
// g_wbar_w(0, t) = R - t^2/R: length = integral of sqrt(2 (R - t^2/R)),
// closed form (sqrt(2)/4) pi R^{3/2}. Adaptive Simpson quadrature of the
// closed-form integrand; coeffs are cross-checked against it at w = 0.
double geodesic_length(const SolutionCoeffs& sc, double R);
double geodesic_integrand(double R, double t);

}  // namespace malab
