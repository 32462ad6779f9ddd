#include "malab/donaldson.hpp"

#include <cmath>
#include <utility>

namespace malab {

std::vector<HarmonicSeed> harmonic_seeds() {
  std::vector<HarmonicSeed> seeds;
  seeds.push_back({"const-2",
                   [](const std::array<double, 3>&) { return 2.0; }, 0});
  seeds.push_back({"linear",
                   [](const std::array<double, 3>& x) {
                     return 1.0 + 0.25 * x[0];
                   },
                   1});
  seeds.push_back({"quad-re",
                   [](const std::array<double, 3>& x) {
                     return 2.0 + 0.25 * (x[0] * x[0] - x[1] * x[1]);
                   },
                   2});
  seeds.push_back({"cubic-im",
                   [](const std::array<double, 3>& x) {
                     // Im((x1 + i x2)^3) = 3 x1^2 x2 - x2^3
                     return 2.0 + 0.125 * (3.0 * x[0] * x[0] * x[1] -
                                           x[1] * x[1] * x[1]);
                   },
                   3});
  return seeds;
}

const HarmonicSeed& harmonic_seed(const std::string& id) {
  static const std::vector<HarmonicSeed> seeds = harmonic_seeds();
  for (const HarmonicSeed& s : seeds) {
    if (s.id == id) return s;
  }
  throw ConfigError("unknown harmonic seed: " + id);
}

namespace {

struct Gradient {
  double x, y;
};

Gradient grad_at(const ScalarGrid& g, std::size_t n) {
  return {central_at(g, n, 0), central_at(g, n, 1)};
}

}  // namespace

DonaldsonBuild donaldson_build(const GridSpec& spec, const HarmonicSeed& seed,
                               const NodeFn& b_data,
                               const DonaldsonOptions& opt) {
  if (spec.dim != 2) throw ConfigError("slice-quadratic build needs dim 2");
  ScalarGrid a(spec);
  for (std::size_t n = 0; n < a.size(); ++n) {
    const NodeKind k = spec.kind(n);
    if (k == NodeKind::Outside) continue;
    const double H = seed.value(spec.coords(n));
    if (!(H > 0.0)) {
      throw SeedNotPositive("harmonic seed vanishes on the lattice: " +
                            seed.id);
    }
    a[n] = 1.0 / H;
  }

  const PoissonSolver poisson(spec);
  ScalarGrid b(spec);
  for (std::size_t n = 0; n < b.size(); ++n) {
    if (spec.kind(n) == NodeKind::Ring) b[n] = b_data(spec.coords(n));
  }
  int iterations = 0;
  bool converged = false;
  for (int it = 1; it <= opt.max_iter; ++it) {
    ScalarGrid source(spec);
    for (std::size_t n = 0; n < source.size(); ++n) {
      if (spec.kind(n) != NodeKind::Inside) continue;
      const Gradient ga = grad_at(a, n), gb = grad_at(b, n);
      source[n] = 2.0 / a[n] * (ga.x * gb.x + ga.y * gb.y);
    }
    ScalarGrid b_next = poisson.solve(source, b);
    const double change = max_inside_diff(b_next, b);
    b = std::move(b_next);
    iterations = it;
    if (change < opt.tol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NoConvergence("advection iteration for b did not settle");
  }

  ScalarGrid c_source(spec);
  for (std::size_t n = 0; n < c_source.size(); ++n) {
    if (spec.kind(n) != NodeKind::Inside) continue;
    const Gradient gb = grad_at(b, n);
    c_source[n] = (gb.x * gb.x + gb.y * gb.y + 1.0) / (2.0 * a[n]);
  }
  ScalarGrid c = poisson.solve(c_source, ScalarGrid(spec));

  DonaldsonBuild out{std::move(a), std::move(b), std::move(c), iterations};
  return out;
}

namespace {

struct NodeOperator {
  double lap_a, lap_b, lap_c;
  Gradient ga, gb;
  double a;

  double full(double t) const {
    const double gx = 2.0 * t * ga.x + gb.x;
    const double gy = 2.0 * t * ga.y + gb.y;
    return 2.0 * a * (t * t * lap_a + t * lap_b + lap_c) -
           (gx * gx + gy * gy) - 1.0;
  }
  double e2() const { return 2.0 * a * lap_a - 4.0 * (ga.x * ga.x + ga.y * ga.y); }
  double e1() const { return 2.0 * a * lap_b - 4.0 * (ga.x * gb.x + ga.y * gb.y); }
  double e0() const { return 2.0 * a * lap_c - (gb.x * gb.x + gb.y * gb.y) - 1.0; }
};

NodeOperator node_operator(const DonaldsonBuild& build, std::size_t n) {
  return {laplacian_at(build.a, n), laplacian_at(build.b, n),
          laplacian_at(build.c, n), grad_at(build.a, n), grad_at(build.b, n),
          build.a[n]};
}

}  // namespace

double donaldson_residual(const DonaldsonBuild& build, double t) {
  const GridSpec& spec = build.a.spec();
  double sup = 0.0;
  for (std::size_t n = 0; n < build.a.size(); ++n) {
    if (spec.kind(n) != NodeKind::Inside) continue;
    sup = std::max(sup, std::abs(node_operator(build, n).full(t)));
  }
  return sup;
}

std::array<double, 3> donaldson_equation_defects(const DonaldsonBuild& build) {
  const GridSpec& spec = build.a.spec();
  std::array<double, 3> sup = {0.0, 0.0, 0.0};
  for (std::size_t n = 0; n < build.a.size(); ++n) {
    if (spec.kind(n) != NodeKind::Inside) continue;
    const NodeOperator op = node_operator(build, n);
    sup[0] = std::max(sup[0], std::abs(op.e0()));
    sup[1] = std::max(sup[1], std::abs(op.e1()));
    sup[2] = std::max(sup[2], std::abs(op.e2()));
  }
  return sup;
}

double donaldson_extraction_gap(const DonaldsonBuild& build) {
  const GridSpec& spec = build.a.spec();
  double gap = 0.0;
  for (std::size_t n = 0; n < build.a.size(); ++n) {
    if (spec.kind(n) != NodeKind::Inside) continue;
    const NodeOperator op = node_operator(build, n);
    const double r_neg = op.full(-1.0), r_mid = op.full(0.0),
                 r_pos = op.full(1.0);
    gap = std::max(gap, std::abs(0.5 * (r_pos + r_neg) - r_mid - op.e2()));
    gap = std::max(gap, std::abs(0.5 * (r_pos - r_neg) - op.e1()));
    gap = std::max(gap, std::abs(r_mid - op.e0()));
  }
  return gap;
}

}  // namespace malab
