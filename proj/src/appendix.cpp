#include "malab/appendix.hpp"

#include <cmath>

#include "malab/errors.hpp"
#include "malab/grid.hpp"

namespace malab {

double radial_laplacian(const Jet2& f, double r, int m) {
  if (m < 1) throw ConfigError("radial Laplacian needs dimension >= 1");
  if (r == 0.0) return m * f.d2;
  return f.d2 + (m - 1) * f.d1 / r;
}

namespace {

// u = -ln(1 - r^2):  lap u - 4 exp(2u) on the 2d ball.
double ball_log_defect(double r) {
  const Jet2 R = Jet2::variable(r);
  const Jet2 u = -log(1.0 - R * R);
  return radial_laplacian(u, r, 2) - 4.0 * std::exp(2.0 * u.v);
}

// v = -ln(1 - r^2) - ln r:  lap v - 4 r^2 exp(2v) off the origin.
double punctured_defect(double r) {
  const Jet2 R = Jet2::variable(r);
  const Jet2 v = -log(1.0 - R * R) - log(R);
  return radial_laplacian(v, r, 2) - 4.0 * r * r * std::exp(2.0 * v.v);
}

// u = 2 ln r - ln(2m - 4), m = 3:  lap u - exp(-u) on R^3 minus 0.
double cone_defect(double r) {
  const Jet2 R = Jet2::variable(r);
  const Jet2 u = 2.0 * log(R) - std::log(2.0);
  return radial_laplacian(u, r, 3) - std::exp(-u.v);
}

}  // namespace

std::vector<RadialIdentity> appendix_residuals(int samples) {
  if (samples < 2) throw ConfigError("need at least two sample radii");
  std::vector<RadialIdentity> out;
  auto sweep = [&](const std::string& id, double lo, double hi,
                   double (*defect)(double)) {
    double sup = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double r = lo + (hi - lo) * i / (samples - 1);
      sup = std::max(sup, std::abs(defect(r)));
    }
    out.push_back({id, sup});
  };
  sweep("ball-log", 0.0, 0.9, &ball_log_defect);
  sweep("ball-log-punctured", 0.05, 0.9, &punctured_defect);
  sweep("cone-3d", 0.1, 2.0, &cone_defect);
  return out;
}

namespace {

Jet2 bump_jet(double rho, double r) {
  const Jet2 R = Jet2::variable(r);
  const Jet2 denom = rho * rho - R * R;
  return exp(1.0 - (rho * rho) / denom);
}

}  // namespace

double BumpProfile::value(double r) const {
  if (r >= rho) return 0.0;
  return bump_jet(rho, r).v;
}

double BumpProfile::laplacian(double r) const {
  if (r >= rho) return 0.0;
  return radial_laplacian(bump_jet(rho, r), r, 2);
}

PairingResult distributional_pairing(double grid_h, double bump_rho) {
  if (!(grid_h > 0.0) || !(grid_h < 0.5)) {
    throw ConfigError("pairing needs a spacing in (0, 1/2)");
  }
  if (!(bump_rho > 0.0) || !(bump_rho < 1.0)) {
    throw ConfigError("bump support must sit strictly inside the unit ball");
  }
  GridSpec spec;
  spec.dim = 2;
  spec.extent = 1.0;
  spec.m = static_cast<int>(std::lround(1.0 / grid_h));
  const BumpProfile phi{bump_rho};
  const double h2 = spec.h() * spec.h();

  double sum = 0.0;
  std::size_t nodes = 0;
  for (std::size_t n = 0; n < spec.node_count(); ++n) {
    if (spec.kind(n) != NodeKind::Inside) continue;
    const std::array<double, 3> x = spec.coords(n);
    const double r = std::hypot(x[0], x[1]);
    if (r == 0.0) continue;  // log pole of the profile
    if (r >= phi.rho) continue;
    const double v = -std::log(1.0 - r * r) - std::log(r);
    const double weight = 4.0 / ((1.0 - r * r) * (1.0 - r * r));
    sum += v * phi.laplacian(r) - weight * phi.value(r);
    ++nodes;
  }
  PairingResult out;
  out.pairing = h2 * sum;
  out.expected = -2.0 * M_PI * phi.value(0.0);
  out.rel_gap = std::abs(out.pairing - out.expected) / std::abs(out.expected);
  out.nodes = nodes;
  return out;
}

}  // namespace malab
