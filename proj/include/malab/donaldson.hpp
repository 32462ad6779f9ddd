#pragma once

// Slice-quadratic builds u(t, x) = a(x) t^2 + b(x) t + c(x) for the
// degenerate equation  u_tt lap u - |grad u_t|^2 = 1  on a 2d ball.
// Collecting powers of t gives three coefficient equations:
//   t^2:  2 a lap a - 4 |grad a|^2          = 0,
//   t^1:  2 a lap b - 4 grad a . grad b     = 0,
//   t^0:  2 a lap c - |grad b|^2 - 1        = 0.
// The t^2 equation is solved in closed form by a = 1/H with H harmonic and
// positive; H is injected from a small catalog (harmonic polynomials of
// degree <= 3, which the five-point Laplacian annihilates exactly).  b is
// obtained by a lagged advection iteration, c by a single Poisson solve.

#include <array>
#include <string>
#include <vector>

#include "malab/elliptic.hpp"
#include "malab/grid.hpp"

namespace malab {

struct HarmonicSeed {
  std::string id;
  NodeFn value;  // H(x1, x2); must stay positive through the ring
  int degree;
};

// constant, linear, and quadratic/cubic harmonic polynomial seeds, all
// positive on the closed unit ball.
std::vector<HarmonicSeed> harmonic_seeds();
const HarmonicSeed& harmonic_seed(const std::string& id);

struct DonaldsonOptions {
  int max_iter = 200;
  double tol = 1e-13;
};

struct DonaldsonBuild {
  ScalarGrid a, b, c;
  int b_iterations = 0;
};

// Throws SeedNotPositive when H fails to be positive on inside and ring
// nodes, NoConvergence when the advection iteration stalls.
DonaldsonBuild donaldson_build(const GridSpec& spec, const HarmonicSeed& seed,
                               const NodeFn& b_data,
                               const DonaldsonOptions& opt = {});

// Sup over inside nodes of the discrete full operator at slice parameter t.
double donaldson_residual(const DonaldsonBuild& build, double t);

// Sup per t-power defect {e0, e1, e2} of the three coefficient equations.
std::array<double, 3> donaldson_equation_defects(const DonaldsonBuild& build);

// The full residual is exactly quadratic in t, so sampling it at t in
// {-1, 0, 1} must reproduce the per-equation defects; returns the sup gap.
double donaldson_extraction_gap(const DonaldsonBuild& build);

}  // namespace malab
