#include "malab/grid.hpp"

#include <cmath>
#include <cstdlib>

namespace malab {

namespace {

void check_spec(const GridSpec& s) {
  if (s.dim < 1 || s.dim > 3) throw ConfigError("grid dim must be 1, 2 or 3");
  if (s.m < 2) throw ConfigError("grid needs at least two nodes per half-axis");
  if (!(s.extent > 0.0)) throw ConfigError("grid extent must be positive");
}

long sq_norm(const std::array<int, 3>& idx) {
  long n = 0;
  for (int a = 0; a < 3; ++a) n += static_cast<long>(idx[a]) * idx[a];
  return n;
}

}  // namespace

std::size_t GridSpec::node_count() const {
  std::size_t n = 1;
  for (int a = 0; a < dim; ++a) n *= static_cast<std::size_t>(per_axis());
  return n;
}

std::size_t GridSpec::flatten(const std::array<int, 3>& idx) const {
  std::size_t flat = 0;
  for (int a = dim - 1; a >= 0; --a) {
    flat = flat * per_axis() + static_cast<std::size_t>(idx[a] + m);
  }
  return flat;
}

std::array<int, 3> GridSpec::unflatten(std::size_t flat) const {
  std::array<int, 3> idx = {0, 0, 0};
  for (int a = 0; a < dim; ++a) {
    idx[a] = static_cast<int>(flat % per_axis()) - m;
    flat /= per_axis();
  }
  return idx;
}

std::array<double, 3> GridSpec::coords(std::size_t flat) const {
  const std::array<int, 3> idx = unflatten(flat);
  const double step = h();
  return {idx[0] * step, idx[1] * step, idx[2] * step};
}

NodeKind GridSpec::kind(std::size_t flat) const {
  const std::array<int, 3> idx = unflatten(flat);
  const long mm = static_cast<long>(m) * m;
  if (sq_norm(idx) < mm) return NodeKind::Inside;
  for (int a = 0; a < dim; ++a) {
    for (int step : {-1, 1}) {
      std::array<int, 3> nb = idx;
      nb[a] += step;
      if (std::abs(nb[a]) <= m && sq_norm(nb) < mm) return NodeKind::Ring;
    }
  }
  return NodeKind::Outside;
}

std::size_t GridSpec::neighbor(std::size_t flat, int axis, int step) const {
  std::array<int, 3> idx = unflatten(flat);
  idx[axis] += step;
  if (std::abs(idx[axis]) > m) return npos;
  return flatten(idx);
}

ScalarGrid::ScalarGrid(const GridSpec& spec) : spec_(spec) {
  check_spec(spec);
  v_.assign(spec.node_count(), 0.0);
}

namespace {

ScalarGrid sampled(const GridSpec& spec, const NodeFn& fn, bool with_ring) {
  ScalarGrid g(spec);
  for (std::size_t n = 0; n < g.size(); ++n) {
    const NodeKind k = spec.kind(n);
    if (k == NodeKind::Inside || (with_ring && k == NodeKind::Ring)) {
      g[n] = fn(spec.coords(n));
    }
  }
  return g;
}

}  // namespace

ScalarGrid sampled_inside(const GridSpec& spec, const NodeFn& fn) {
  return sampled(spec, fn, false);
}

ScalarGrid sampled_through_ring(const GridSpec& spec, const NodeFn& fn) {
  return sampled(spec, fn, true);
}

double laplacian_at(const ScalarGrid& g, std::size_t flat) {
  const GridSpec& spec = g.spec();
  const double h2 = spec.h() * spec.h();
  double acc = 0.0;
  for (int a = 0; a < spec.dim; ++a) {
    const std::size_t lo = spec.neighbor(flat, a, -1);
    const std::size_t hi = spec.neighbor(flat, a, +1);
    if (lo == GridSpec::npos || hi == GridSpec::npos) {
      throw OutOfDomain("Laplacian stencil leaves the lattice");
    }
    acc += (g[lo] + g[hi] - 2.0 * g[flat]) / h2;
  }
  return acc;
}

double central_at(const ScalarGrid& g, std::size_t flat, int axis) {
  const GridSpec& spec = g.spec();
  const std::size_t lo = spec.neighbor(flat, axis, -1);
  const std::size_t hi = spec.neighbor(flat, axis, +1);
  if (lo == GridSpec::npos || hi == GridSpec::npos) {
    throw OutOfDomain("central difference leaves the lattice");
  }
  return (g[hi] - g[lo]) / (2.0 * spec.h());
}

double max_inside_abs(const ScalarGrid& g) {
  double best = 0.0;
  for (std::size_t n = 0; n < g.size(); ++n) {
    if (g.spec().kind(n) == NodeKind::Inside) {
      best = std::max(best, std::abs(g[n]));
    }
  }
  return best;
}

double max_inside_diff(const ScalarGrid& a, const ScalarGrid& b) {
  double best = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a.spec().kind(n) == NodeKind::Inside) {
      best = std::max(best, std::abs(a[n] - b[n]));
    }
  }
  return best;
}

double max_inside_diff(const ScalarGrid& a, const NodeFn& fn) {
  double best = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a.spec().kind(n) == NodeKind::Inside) {
      best = std::max(best, std::abs(a[n] - fn(a.spec().coords(n))));
    }
  }
  return best;
}

}  // namespace malab
