#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "malab/families.hpp"
#include "malab/potential.hpp"

using namespace malab;

namespace {

// The flat quadratic |z|^2 + |w|^2 as coefficients.
SolutionCoeffs flat_quadratic(int order) {
  return SolutionCoeffs(BiSeries::constant(1.0, order), BiSeries::zero(order),
                        BiSeries::zero(order),
                        BiSeries::monomial(1, 1, 1.0, order), kEntireRadius);
}

// The disc family at radius R with c = 0:
// a = R/(R^2 - |w|^2), b = sum w^n conj(w)^{n+1} / (2 R^{2n+2}),
// d = R|w|^2 - |w|^4/(4R); assembled directly from the closed forms.
SolutionCoeffs disc_family(double R, int order) {
  BiSeries a = BiSeries::zero(order);
  BiSeries b = BiSeries::zero(order);
  for (int n = 0; 2 * n <= order; ++n)
    a = add(a, BiSeries::monomial(n, n, std::pow(R, -2 * n - 1), order));
  for (int n = 0; 2 * n + 1 <= order; ++n)
    b = add(b,
            BiSeries::monomial(n, n + 1, 0.5 * std::pow(R, -2 * n - 2), order));
  const BiSeries d =
      add(BiSeries::monomial(1, 1, R, order),
          BiSeries::monomial(2, 2, -1.0 / (4.0 * R), order));
  return SolutionCoeffs(a, b, BiSeries::zero(order), d, R);
}

std::mt19937_64 rng(424242);

Complex random_point(double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  const double th = 2.0 * M_PI * u(rng);
  return Complex(r * std::cos(th), r * std::sin(th));
}

}  // namespace

TEST_CASE("assemble_u reproduces the ansatz termwise") {
  const SolutionCoeffs sc = disc_family(1.0, 16);
  const ZPolyField u = assemble_u(sc);
  CHECK(max_coeff_diff(u.entry(1, 1), sc.a) == 0.0);
  CHECK(max_coeff_diff(u.entry(2, 0), sc.b) == 0.0);
  CHECK(max_coeff_diff(u.entry(0, 2), conj(sc.b)) == 0.0);
  CHECK(max_coeff_diff(u.entry(0, 0), sc.d) == 0.0);
  // u is real: evaluate at a few points
  for (int k = 0; k < 5; ++k) {
    const Complex z = random_point(1.0), w = random_point(0.8);
    CHECK(std::abs(evaluate(u, z, w).imag()) <= 1e-13);
  }
}

TEST_CASE("hessian of the disc family at the origin is the identity") {
  const SolutionCoeffs sc = disc_family(1.0, 20);
  const Hermitian2 h = hessian(sc, Complex(0.0), Complex(0.0));
  CHECK(h.h11 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(h.h22 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(h.h12) <= 1e-14);
}

TEST_CASE("hessian is Hermitian to machine precision at random points") {
  const SolutionCoeffs sc = disc_family(1.0, 24);
  const HessianEvaluator H(sc);
  for (int k = 0; k < 20; ++k) {
    const Complex z = random_point(2.0), w = random_point(0.6);
    const auto e = H.raw(z, w);
    CHECK(std::abs(e[0].imag()) <= 1e-14);
    CHECK(std::abs(e[3].imag()) <= 1e-14);
    CHECK(std::abs(e[1] - std::conj(e[2])) <= 1e-14);
  }
}

TEST_CASE("hessian against Wirtinger finite differences of evaluated u") {
  // Independent oracle: second mixed differences of pointwise u values.
  const SolutionCoeffs sc = disc_family(1.0, 28);
  const ZPolyField uf = assemble_u(sc);
  const Complex z0(0.4, -0.2), w0(0.25, 0.15);
  auto u = [&](Complex z, Complex w) { return evaluate(uf, z, w).real(); };
  const double h = 1e-4;
  // u_zbar_z = (1/4)(u_xx + u_yy) in the fiber variable
  const double uzz = ((u(z0 + h, w0) + u(z0 - h, w0) +
                       u(z0 + Complex(0, h), w0) + u(z0 - Complex(0, h), w0) -
                       4.0 * u(z0, w0)) /
                      (h * h)) /
                     4.0;
  const Hermitian2 H = hessian(sc, z0, w0);
  CHECK(uzz == doctest::Approx(H.h11).epsilon(1e-6));
  const double uww = ((u(z0, w0 + h) + u(z0, w0 - h) +
                       u(z0, w0 + Complex(0, h)) + u(z0, w0 - Complex(0, h)) -
                       4.0 * u(z0, w0)) /
                      (h * h)) /
                     4.0;
  CHECK(uww == doctest::Approx(H.h22).epsilon(1e-6));
}

TEST_CASE("det residual: flat quadratic is exact, disc family truncation-small") {
  const SolutionCoeffs flat = flat_quadratic(12);
  std::vector<std::pair<Complex, Complex>> pts;
  for (int k = 0; k < 10; ++k) pts.push_back({random_point(3.0), random_point(3.0)});
  CHECK(det_residual(flat, pts) == 0.0);

  const SolutionCoeffs disc = disc_family(1.0, 40);
  std::vector<std::pair<Complex, Complex>> pts2;
  for (int k = 0; k < 25; ++k)
    pts2.push_back({random_point(1.0), random_point(0.5)});
  CHECK(det_residual(disc, pts2) <= 1e-8);
  CHECK(psh_check(disc, pts2));
}

TEST_CASE("det residual shrinks geometrically in the truncation order") {
  std::vector<std::pair<Complex, Complex>> pts{
      {Complex(0.5, 0.1), Complex(0.3, -0.25)}};
  const double r8 = det_residual(disc_family(1.0, 8), pts);
  const double r16 = det_residual(disc_family(1.0, 16), pts);
  const double r24 = det_residual(disc_family(1.0, 24), pts);
  CHECK(r16 < 0.1 * r8);
  CHECK(r24 < 0.1 * r16);
}

TEST_CASE("evaluation outside the coefficient disc raises OutOfRadius") {
  const SolutionCoeffs disc = disc_family(1.0, 16);
  std::vector<std::pair<Complex, Complex>> pts{
      {Complex(0.0), Complex(1.5, 0.0)}};
  CHECK_THROWS_AS(det_residual(disc, pts), OutOfRadius);
}

TEST_CASE("psh fails when a(0) <= 0 is injected at the Hessian level") {
  // A coefficient set with a < 0 cannot be constructed (the constructor
  // rejects it); check the predicate itself on a sign-flipped Hessian.
  const Hermitian2 h{-1.0, -1.0, Complex(0.0)};
  CHECK(h.det() > 0.0);
  CHECK_FALSE(h.h11 > 0.0);
}

TEST_CASE("sqrt-branch map values and limits") {
  // alpha = 1/2: phi(3/4) = (1 - sqrt(1 - 3/4)) * 2 = 1.
  CHECK(std::abs(phi_value(Complex(0.5), Complex(0.75)) - 1.0) <= 1e-14);
  CHECK(std::abs(phi_value(Complex(0.5), Complex(0.0))) == 0.0);
  // phi'(0) = 1 for every alpha
  CHECK(std::abs(phi_deriv(Complex(0.3, 0.4), Complex(0.0)) - 1.0) <= 1e-15);
  // alpha -> 0 recovers the identity map to O(alpha)
  const Complex z(0.3, -0.2);
  CHECK(std::abs(phi_value(Complex(1e-6), z) - z) <= 1e-6);
  CHECK_THROWS_AS(phi_value(Complex(1.0), Complex(0.6)), OutOfDomain);
}

TEST_CASE("sqrt-branch satisfies phi'' = alpha (phi')^3 by finite differences") {
  const Complex alpha(0.4, 0.1);
  const double h = 1e-4;
  for (Complex z : {Complex(0.0), Complex(0.2, 0.1), Complex(-0.3, 0.2)}) {
    const Complex p2 = (phi_value(alpha, z + h) - 2.0 * phi_value(alpha, z) +
                        phi_value(alpha, z - h)) /
                       (h * h);
    const Complex dp = phi_deriv(alpha, z);
    CHECK(std::abs(p2 - alpha * dp * dp * dp) <= 1e-8);
  }
}

TEST_CASE("sqrt-branch closed-form identity") {
  std::vector<Complex> zs;
  for (int k = 0; k < 20; ++k) zs.push_back(random_point(0.4));
  CHECK(phi_identity_check(Complex(0.5), zs) <= 1e-10);
  std::vector<Complex> zs2;
  for (int k = 0; k < 20; ++k) zs2.push_back(random_point(0.3));
  CHECK(phi_identity_check(Complex(1.0, 1.0), zs2) <= 1e-10);
  // z = 0: phi = 0, both sides 1
  std::vector<Complex> origin{Complex(0.0)};
  CHECK(phi_identity_check(Complex(0.7, -0.2), origin) == 0.0);
  // alpha = 0 (identity branch): |phi'|^{-2} = 1 identically
  CHECK(phi_identity_check(Complex(0.0), zs) == 0.0);
}

TEST_CASE("piecewise glued potential: unit determinant off the hypersurface") {
  std::vector<std::pair<Complex, Complex>> pts{
      {Complex(0.0), Complex(0.3, 0.2)}, {Complex(1.0), Complex(-0.4, 0.1)}};
  CHECK(piecewise_residual(pts) == 0.0);
  std::vector<std::pair<Complex, Complex>> on{{Complex(0.5, 0.3), Complex(0.0)}};
  CHECK_THROWS_AS(piecewise_residual(on), OnHypersurface);
}

TEST_CASE("coefficient validation") {
  const int n = 8;
  // a not real
  CHECK_THROWS_AS(SolutionCoeffs(BiSeries::monomial(1, 0, 1.0, n),
                                 BiSeries::zero(n), BiSeries::zero(n),
                                 BiSeries::zero(n), 1.0),
                  Error);
  // a(0) <= 0
  CHECK_THROWS_AS(SolutionCoeffs(BiSeries::constant(-1.0, n),
                                 BiSeries::zero(n), BiSeries::zero(n),
                                 BiSeries::zero(n), 1.0),
                  Error);
}
