#include "malab/elliptic.hpp"

#include <Eigen/Sparse>
#include <cmath>
#include <utility>
#include <vector>

namespace malab {

struct PoissonSolver::Impl {
  GridSpec spec;
  std::vector<std::size_t> inside;              // flat indices of unknowns
  std::vector<long> eq_of;                      // flat -> equation, -1 if none
  Eigen::SparseMatrix<double> neg_lap;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
};

PoissonSolver::PoissonSolver(const GridSpec& spec) : impl_(new Impl) {
  impl_->spec = spec;
  const std::size_t total = spec.node_count();
  impl_->eq_of.assign(total, -1);
  for (std::size_t n = 0; n < total; ++n) {
    if (spec.kind(n) == NodeKind::Inside) {
      impl_->eq_of[n] = static_cast<long>(impl_->inside.size());
      impl_->inside.push_back(n);
    }
  }
  const double inv_h2 = 1.0 / (spec.h() * spec.h());
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(impl_->inside.size() * (2 * spec.dim + 1));
  for (std::size_t row = 0; row < impl_->inside.size(); ++row) {
    const std::size_t n = impl_->inside[row];
    trips.emplace_back(row, row, 2.0 * spec.dim * inv_h2);
    for (int a = 0; a < spec.dim; ++a) {
      for (int step : {-1, 1}) {
        const std::size_t nb = spec.neighbor(n, a, step);
        const long col = impl_->eq_of[nb];
        if (col >= 0) trips.emplace_back(row, col, -inv_h2);
      }
    }
  }
  const long rows = static_cast<long>(impl_->inside.size());
  impl_->neg_lap.resize(rows, rows);
  impl_->neg_lap.setFromTriplets(trips.begin(), trips.end());
  impl_->ldlt.compute(impl_->neg_lap);
  if (impl_->ldlt.info() != Eigen::Success) {
    delete impl_;
    throw NoConvergence("Poisson operator factorization failed");
  }
}

PoissonSolver::~PoissonSolver() { delete impl_; }
PoissonSolver::PoissonSolver(PoissonSolver&& other) noexcept
    : impl_(other.impl_) {
  other.impl_ = nullptr;
}
PoissonSolver& PoissonSolver::operator=(PoissonSolver&& other) noexcept {
  std::swap(impl_, other.impl_);
  return *this;
}

const GridSpec& PoissonSolver::spec() const { return impl_->spec; }

ScalarGrid PoissonSolver::solve(const ScalarGrid& f,
                                const ScalarGrid& g) const {
  const GridSpec& spec = impl_->spec;
  const double inv_h2 = 1.0 / (spec.h() * spec.h());
  Eigen::VectorXd rhs(static_cast<long>(impl_->inside.size()));
  for (std::size_t row = 0; row < impl_->inside.size(); ++row) {
    const std::size_t n = impl_->inside[row];
    double r = -f[n];
    for (int a = 0; a < spec.dim; ++a) {
      for (int step : {-1, 1}) {
        const std::size_t nb = spec.neighbor(n, a, step);
        if (impl_->eq_of[nb] < 0) r += g[nb] * inv_h2;
      }
    }
    rhs[static_cast<long>(row)] = r;
  }
  Eigen::VectorXd x = impl_->ldlt.solve(rhs);
  if (impl_->ldlt.info() != Eigen::Success) {
    throw NoConvergence("Poisson back-substitution failed");
  }
  const double defect = (impl_->neg_lap * x - rhs).cwiseAbs().maxCoeff();
  if (!(defect <= 1e-9 * std::max(1.0, rhs.cwiseAbs().maxCoeff()))) {
    throw NoConvergence("Poisson residual recheck failed");
  }
  ScalarGrid u(spec);
  for (std::size_t n = 0; n < u.size(); ++n) {
    const long eq = impl_->eq_of[n];
    if (eq >= 0) {
      u[n] = x[eq];
    } else if (spec.kind(n) == NodeKind::Ring) {
      u[n] = g[n];
    }
  }
  return u;
}

namespace {

ScalarGrid ring_data(const GridSpec& spec, const NodeFn& fn) {
  ScalarGrid g(spec);
  for (std::size_t n = 0; n < g.size(); ++n) {
    if (spec.kind(n) == NodeKind::Ring) g[n] = fn(spec.coords(n));
  }
  return g;
}

struct ComplexGrid {
  ScalarGrid re, im;
  explicit ComplexGrid(const GridSpec& spec) : re(spec), im(spec) {}
};

// d_wbar b = (d_x b + i d_y b) / 2 at inside nodes (zero elsewhere).
ComplexGrid wirtinger_bar(const ComplexGrid& b) {
  const GridSpec& spec = b.re.spec();
  ComplexGrid out(spec);
  for (std::size_t n = 0; n < b.re.size(); ++n) {
    if (spec.kind(n) != NodeKind::Inside) continue;
    const double bx_re = central_at(b.re, n, 0), bx_im = central_at(b.im, n, 0);
    const double by_re = central_at(b.re, n, 1), by_im = central_at(b.im, n, 1);
    out.re[n] = 0.5 * (bx_re - by_im);
    out.im[n] = 0.5 * (bx_im + by_re);
  }
  return out;
}

// d_w f = (d_x f - i d_y f) / 2 for a real field f.
ComplexGrid wirtinger(const ScalarGrid& f) {
  const GridSpec& spec = f.spec();
  ComplexGrid out(spec);
  for (std::size_t n = 0; n < f.size(); ++n) {
    if (spec.kind(n) != NodeKind::Inside) continue;
    out.re[n] = 0.5 * central_at(f, n, 0);
    out.im[n] = -0.5 * central_at(f, n, 1);
  }
  return out;
}

double atilde_source_at(const PicardOptions& opt, double atil, double bw_re,
                        double bw_im) {
  const double damp = std::exp(-2.0 * atil);
  double s = 16.0 * damp * (bw_re * bw_re + bw_im * bw_im);
  if (opt.variant == SystemVariant::MA4) s += 4.0 * damp;
  return s;
}

}  // namespace

PicardResult picard_cylinder(const GridSpec& spec, const NodeFn& atilde_data,
                             const ComplexNodeFn& b_data,
                             const PicardOptions& opt) {
  if (spec.dim != 2) throw ConfigError("cylinder Picard needs a 2d lattice");
  const PoissonSolver poisson(spec);

  ScalarGrid atil = ring_data(spec, atilde_data);
  ComplexGrid b(spec);
  b.re = ring_data(spec, [&](const std::array<double, 3>& x) {
    return b_data({x[0], x[1]}).real();
  });
  b.im = ring_data(spec, [&](const std::array<double, 3>& x) {
    return b_data({x[0], x[1]}).imag();
  });

  PicardResult out{atil, b.re, b.im, 0, 0.0, 0.0};
  bool converged = false;
  for (int it = 1; it <= opt.max_iter; ++it) {
    const ComplexGrid bw = wirtinger_bar(b);
    ScalarGrid source_a(spec);
    for (std::size_t n = 0; n < source_a.size(); ++n) {
      if (spec.kind(n) == NodeKind::Inside) {
        source_a[n] = atilde_source_at(opt, atil[n], bw.re[n], bw.im[n]);
      }
    }
    ScalarGrid atil_next = poisson.solve(source_a, atil);

    const ComplexGrid aw = wirtinger(atil_next);
    ComplexGrid source_b(spec);
    for (std::size_t n = 0; n < source_b.re.size(); ++n) {
      if (spec.kind(n) == NodeKind::Inside) {
        source_b.re[n] = 8.0 * (aw.re[n] * bw.re[n] - aw.im[n] * bw.im[n]);
        source_b.im[n] = 8.0 * (aw.re[n] * bw.im[n] + aw.im[n] * bw.re[n]);
      }
    }
    ComplexGrid b_next(spec);
    b_next.re = poisson.solve(source_b.re, b.re);
    b_next.im = poisson.solve(source_b.im, b.im);

    double change = max_inside_diff(atil_next, atil);
    change = std::max(change, max_inside_diff(b_next.re, b.re));
    change = std::max(change, max_inside_diff(b_next.im, b.im));
    atil = std::move(atil_next);
    b = std::move(b_next);
    out.iterations = it;
    out.final_change = change;
    if (change < opt.tol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw NoConvergence("cylinder Picard did not settle within max_iter");
  }

  const ComplexGrid bw = wirtinger_bar(b);
  const ComplexGrid aw = wirtinger(atil);
  double defect = 0.0;
  for (std::size_t n = 0; n < atil.size(); ++n) {
    if (spec.kind(n) != NodeKind::Inside) continue;
    const double ra = laplacian_at(atil, n) -
                      atilde_source_at(opt, atil[n], bw.re[n], bw.im[n]);
    const double rb_re = laplacian_at(b.re, n) -
                         8.0 * (aw.re[n] * bw.re[n] - aw.im[n] * bw.im[n]);
    const double rb_im = laplacian_at(b.im, n) -
                         8.0 * (aw.re[n] * bw.im[n] + aw.im[n] * bw.re[n]);
    defect = std::max({defect, std::abs(ra), std::abs(rb_re), std::abs(rb_im)});
  }
  out.atilde = std::move(atil);
  out.b_re = std::move(b.re);
  out.b_im = std::move(b.im);
  out.residual = defect;
  return out;
}

}  // namespace malab
