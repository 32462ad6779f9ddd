#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "malab/appendix.hpp"
#include "malab/donaldson.hpp"
#include "malab/elliptic.hpp"
#include "malab/grid.hpp"

using namespace malab;
using Cx = std::complex<double>;

namespace {

std::mt19937_64 rng(90210);

std::size_t random_inside(const GridSpec& spec) {
  std::uniform_int_distribution<std::size_t> pick(0, spec.node_count() - 1);
  for (;;) {
    const std::size_t n = pick(rng);
    if (spec.kind(n) == NodeKind::Inside) return n;
  }
}

GridSpec disc(double extent, int m) {
  GridSpec s;
  s.dim = 2;
  s.extent = extent;
  s.m = m;
  return s;
}

}  // namespace

TEST_CASE("lattice classification uses exact integer radii") {
  const GridSpec spec = disc(1.0, 8);
  CHECK(spec.h() == doctest::Approx(0.125));
  CHECK(spec.node_count() == 17 * 17);

  CHECK(spec.kind(spec.flatten({0, 0, 0})) == NodeKind::Inside);
  CHECK(spec.kind(spec.flatten({6, 5, 0})) == NodeKind::Inside);   // 61 < 64
  CHECK(spec.kind(spec.flatten({8, 0, 0})) == NodeKind::Ring);     // on circle
  CHECK(spec.kind(spec.flatten({6, 6, 0})) == NodeKind::Ring);     // 72, nbr 61
  CHECK(spec.kind(spec.flatten({8, 8, 0})) == NodeKind::Outside);
  CHECK(spec.kind(spec.flatten({8, 4, 0})) == NodeKind::Outside);  // 80, nbr 65

  const std::array<double, 3> x = spec.coords(spec.flatten({-3, 7, 0}));
  CHECK(x[0] == doctest::Approx(-0.375));
  CHECK(x[1] == doctest::Approx(0.875));
  CHECK(x[2] == 0.0);

  GridSpec line;
  line.dim = 1;
  line.extent = 1.0;
  line.m = 4;
  CHECK(line.node_count() == 9);
  CHECK(line.kind(line.flatten({3, 0, 0})) == NodeKind::Inside);
  CHECK(line.kind(line.flatten({4, 0, 0})) == NodeKind::Ring);
  CHECK(line.neighbor(line.flatten({4, 0, 0}), 0, 1) == GridSpec::npos);

  GridSpec cube;
  cube.dim = 3;
  cube.extent = 2.0;
  cube.m = 4;
  CHECK(cube.node_count() == 9 * 9 * 9);
  CHECK(cube.kind(cube.flatten({2, 2, 2})) == NodeKind::Inside);  // 12 < 16

  GridSpec bad = disc(1.0, 1);
  CHECK_THROWS_AS(ScalarGrid{bad}, ConfigError);
}

TEST_CASE("stencils are exact on quadratics") {
  const GridSpec spec = disc(1.5, 12);
  const ScalarGrid g = sampled_through_ring(
      spec, [](const std::array<double, 3>& x) {
        return x[0] * x[0] + 3.0 * x[0] * x[1] - 2.0 * x[1] * x[1] + 0.7;
      });
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = random_inside(spec);
    const std::array<double, 3> x = spec.coords(n);
    CHECK(laplacian_at(g, n) == doctest::Approx(-2.0).epsilon(1e-11));
    CHECK(central_at(g, n, 0) ==
          doctest::Approx(2.0 * x[0] + 3.0 * x[1]).epsilon(1e-11));
    CHECK(central_at(g, n, 1) ==
          doctest::Approx(3.0 * x[0] - 4.0 * x[1]).epsilon(1e-11));
  }
}

TEST_CASE("1d Poisson solve recovers a quadratic exactly") {
  GridSpec line;
  line.dim = 1;
  line.extent = 1.0;
  line.m = 16;
  const PoissonSolver solver(line);
  const auto truth = [](const std::array<double, 3>& x) {
    return x[0] * x[0] - 0.25 * x[0];
  };
  ScalarGrid f(line);
  for (std::size_t n = 0; n < f.size(); ++n) {
    if (line.kind(n) == NodeKind::Inside) f[n] = 2.0;
  }
  const ScalarGrid g = sampled_through_ring(line, truth);
  const ScalarGrid u = solver.solve(f, g);
  CHECK(max_inside_diff(u, truth) <= 1e-12);
}

TEST_CASE("2d Poisson solve converges at second order") {
  const auto truth = [](const std::array<double, 3>& x) {
    return std::pow(x[0], 4) + std::pow(x[1], 4) + 0.5 * x[0] * x[1];
  };
  const auto source = [](const std::array<double, 3>& x) {
    return 12.0 * (x[0] * x[0] + x[1] * x[1]);
  };
  auto error_at = [&](int m) {
    const GridSpec spec = disc(1.0, m);
    const PoissonSolver solver(spec);
    const ScalarGrid u =
        solver.solve(sampled_inside(spec, source),
                     sampled_through_ring(spec, truth));
    return max_inside_diff(u, truth);
  };
  const double e8 = error_at(8);
  const double e16 = error_at(16);
  CHECK(e8 > 1e-5);  // visible discretization error, not solver noise
  const double ratio = e8 / e16;
  CHECK(ratio >= 3.0);
  CHECK(ratio <= 5.0);
}

TEST_CASE("cylinder Picard with zero data settles in one sweep") {
  const GridSpec spec = disc(0.5, 12);
  const PicardResult res = picard_cylinder(
      spec, [](const std::array<double, 3>&) { return 0.0; },
      [](Cx) { return Cx(0.0, 0.0); });
  CHECK(res.iterations == 1);
  CHECK(res.final_change == 0.0);
  CHECK(max_inside_abs(res.atilde) == 0.0);
  CHECK(max_inside_abs(res.b_re) == 0.0);
  CHECK(max_inside_abs(res.b_im) == 0.0);
  CHECK(res.residual <= 1e-14);
}

TEST_CASE("cylinder Picard recovers the disc-family coefficients") {
  // Truth on the unit-radius model: atilde = -ln(1 - |w|^2), b = conj(w) /
  // (2 (1 - |w|^2)); both extend analytically well past the sampling disc
  // of radius 1/2, so ring data is consistent to all orders.
  const auto atilde_fn = [](const std::array<double, 3>& x) {
    return -std::log(1.0 - (x[0] * x[0] + x[1] * x[1]));
  };
  const auto b_fn = [](Cx w) { return std::conj(w) / (2.0 * (1.0 - std::norm(w))); };

  auto run = [&](int m) {
    const GridSpec spec = disc(0.5, m);
    const PicardResult res = picard_cylinder(spec, atilde_fn, b_fn);
    CHECK(res.iterations < 200);
    CHECK(res.residual <= 1e-10);
    double err = max_inside_diff(res.atilde, atilde_fn);
    err = std::max(err,
                   max_inside_diff(res.b_re, [&](const std::array<double, 3>& x) {
                     return b_fn(Cx(x[0], x[1])).real();
                   }));
    err = std::max(err,
                   max_inside_diff(res.b_im, [&](const std::array<double, 3>& x) {
                     return b_fn(Cx(x[0], x[1])).imag();
                   }));
    return err;
  };
  const double e32 = run(16);  // h = 1/32
  const double e64 = run(32);  // h = 1/64
  CHECK(e32 > 1e-7);
  const double ratio = e32 / e64;
  CHECK(ratio >= 3.0);
  CHECK(ratio <= 5.0);
}

TEST_CASE("inhomogeneous variant reproduces the closed-form profile") {
  // With b = 0 the inhomogeneous equation reduces to lap atilde =
  // 4 exp(-2 atilde), solved exactly by atilde = ln(1 + |w|^2).
  const auto atilde_fn = [](const std::array<double, 3>& x) {
    return std::log(1.0 + x[0] * x[0] + x[1] * x[1]);
  };
  PicardOptions opt;
  opt.variant = SystemVariant::MA4;
  auto run = [&](int m) {
    const GridSpec spec = disc(0.5, m);
    const PicardResult res = picard_cylinder(
        spec, atilde_fn, [](Cx) { return Cx(0.0, 0.0); }, opt);
    CHECK(res.residual <= 1e-10);
    CHECK(max_inside_abs(res.b_re) <= 1e-13);
    CHECK(max_inside_abs(res.b_im) <= 1e-13);
    return max_inside_diff(res.atilde, atilde_fn);
  };
  const double e16 = run(16);
  const double e32 = run(32);
  CHECK(e16 > 1e-8);
  const double ratio = e16 / e32;
  CHECK(ratio >= 3.0);
  CHECK(ratio <= 5.0);

  PicardOptions strangled = opt;
  strangled.max_iter = 1;
  const GridSpec spec = disc(0.5, 8);
  CHECK_THROWS_AS(picard_cylinder(
                      spec, atilde_fn, [](Cx) { return Cx(0.0, 0.0); },
                      strangled),
                  NoConvergence);
}

TEST_CASE("harmonic seeds are annihilated by the discrete Laplacian") {
  const GridSpec spec = disc(1.0, 20);
  for (const HarmonicSeed& seed : harmonic_seeds()) {
    CHECK(seed.degree <= 3);
    const ScalarGrid H = sampled_through_ring(spec, seed.value);
    for (int trial = 0; trial < 10; ++trial) {
      CHECK(std::abs(laplacian_at(H, random_inside(spec))) <= 1e-11);
    }
  }
  CHECK(harmonic_seed("const-2").degree == 0);
  CHECK_THROWS_AS(harmonic_seed("no-such-seed"), ConfigError);
}

TEST_CASE("slice-quadratic build with constant seed is discretely exact") {
  const GridSpec spec = disc(1.0, 32);
  const DonaldsonBuild build = donaldson_build(
      spec, harmonic_seed("const-2"),
      [](const std::array<double, 3>& x) { return x[0]; });
  CHECK(build.b_iterations <= 3);
  // a = 1/2 and the advected b is the discrete harmonic extension of x1,
  // which for affine ring data is x1 itself.
  CHECK(max_inside_diff(build.b, [](const std::array<double, 3>& x) {
          return x[0];
        }) <= 1e-10);
  for (double t : {-1.0, 0.0, 1.0}) {
    CHECK(donaldson_residual(build, t) <= 1e-10);
  }
  const std::array<double, 3> defects = donaldson_equation_defects(build);
  CHECK(defects[0] <= 1e-10);
  CHECK(defects[1] <= 1e-10);
  CHECK(defects[2] <= 1e-10);
  CHECK(donaldson_extraction_gap(build) <= 1e-12);
}

TEST_CASE("slice-quadratic residual shrinks at second order") {
  auto residual_at = [](int m) {
    GridSpec spec = disc(1.0, m);
    const DonaldsonBuild build = donaldson_build(
        spec, harmonic_seed("linear"),
        [](const std::array<double, 3>& x) { return 0.3 * x[1]; });
    CHECK(donaldson_extraction_gap(build) <= 1e-12);
    double sup = 0.0;
    for (double t : {-1.0, 0.0, 1.0}) {
      sup = std::max(sup, donaldson_residual(build, t));
    }
    return sup;
  };
  const double r32 = residual_at(32);
  const double r64 = residual_at(64);
  CHECK(r64 <= 5e-3);
  CHECK(r64 > 1e-9);
  const double ratio = r32 / r64;
  CHECK(ratio >= 3.0);
  CHECK(ratio <= 5.0);
}

TEST_CASE("seed positivity is enforced through the ring") {
  const GridSpec spec = disc(1.0, 16);
  const HarmonicSeed bad{
      "steep", [](const std::array<double, 3>& x) { return 1.0 + 2.0 * x[0]; },
      1};
  CHECK_THROWS_AS(donaldson_build(spec, bad,
                                  [](const std::array<double, 3>&) {
                                    return 0.0;
                                  }),
                  SeedNotPositive);
}

TEST_CASE("radial profiles satisfy their closed-form Laplacian identities") {
  const std::vector<RadialIdentity> ids = appendix_residuals(128);
  REQUIRE(ids.size() == 3);
  for (const RadialIdentity& id : ids) {
    CAPTURE(id.id);
    CHECK(id.max_defect <= 1e-10);
  }
  // lap u = m u''(0) at the origin for smooth radial data.
  const Jet2 f{1.0, 0.0, 0.6};
  CHECK(radial_laplacian(f, 0.0, 3) == doctest::Approx(1.8));
  CHECK_THROWS_AS(radial_laplacian(f, 0.5, 0), ConfigError);
  CHECK_THROWS_AS(appendix_residuals(1), ConfigError);
}

TEST_CASE("bump profile is a unit bump with integrable Laplacian") {
  const BumpProfile phi{0.8};
  CHECK(phi.value(0.0) == doctest::Approx(1.0));
  CHECK(phi.value(0.79999) <= 1e-8);
  CHECK(phi.value(0.8) == 0.0);
  CHECK(phi.value(2.0) == 0.0);
  CHECK(phi.laplacian(0.9) == 0.0);
  // Divergence theorem: the Laplacian integrates to zero over the plane.
  const GridSpec spec = disc(1.0, 128);
  double sum = 0.0;
  for (std::size_t n = 0; n < spec.node_count(); ++n) {
    if (spec.kind(n) != NodeKind::Inside) continue;
    const std::array<double, 3> x = spec.coords(n);
    sum += phi.laplacian(std::hypot(x[0], x[1]));
  }
  CHECK(std::abs(sum * spec.h() * spec.h()) <= 1e-6);
}

TEST_CASE("lattice pairing reproduces the point mass at the puncture") {
  const PairingResult res = distributional_pairing(1.0 / 256);
  CHECK(res.expected == doctest::Approx(-2.0 * M_PI));
  CHECK(res.pairing < 0.0);
  CHECK(res.rel_gap <= 0.02);
  CHECK(res.nodes > 100000);

  CHECK_THROWS_AS(distributional_pairing(0.6), ConfigError);
  CHECK_THROWS_AS(distributional_pairing(1.0 / 64, 1.5), ConfigError);
}
