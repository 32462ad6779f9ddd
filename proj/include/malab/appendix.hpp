#pragma once

// Closed-form radial identities for isolated-singularity model potentials,
// plus a lattice check of the distributional Laplacian of the log-punctured
// profile.
//
//   u = -ln(1 - r^2)             on the 2d ball:   lap u = 4 exp(2u),
//   v = u - ln r                 off the origin:   lap v = 4 r^2 exp(2v),
//   u = 2 ln r - ln(2m - 4)      on R^3 minus 0:   lap u = exp(-u),
// and distributionally lap v - 4 r^2 exp(2v) = -2 pi delta_0, tested as
//   h^2 sum [ v lap(phi) - 4 r^2 exp(2v) phi ]  ->  -2 pi phi(0)
// for a smooth radial bump phi supported strictly inside the unit ball.

#include <cstddef>
#include <string>
#include <vector>

#include "malab/jets.hpp"

namespace malab {

// lap f = f'' + (m-1) f'/r for radial profiles; at r = 0 (smooth radial
// data, f'(0) = 0) the limit is m f''(0).
double radial_laplacian(const Jet2& f, double r, int m);

struct RadialIdentity {
  std::string id;
  double max_defect;  // sup over sampled radii of |lap lhs - rhs|
};

// Defects of the three identities above over `samples` radii each.
std::vector<RadialIdentity> appendix_residuals(int samples = 64);

struct BumpProfile {
  double rho = 0.8;  // support radius, must stay below 1

  double value(double r) const;
  double laplacian(double r) const;  // 2d radial Laplacian
};

struct PairingResult {
  double pairing;     // the lattice sum
  double expected;    // -2 pi phi(0)
  double rel_gap;     // |pairing - expected| / |expected|
  std::size_t nodes;  // lattice points that entered the sum
};

// Lattice pairing on the unit-ball nodes of spacing grid_h; the origin node
// is excluded (the profile has its log pole there).
PairingResult distributional_pairing(double grid_h, double bump_rho = 0.8);

}  // namespace malab
