#pragma once

// Dirichlet Poisson solves on the inscribed ball of a box lattice, and the
// Picard iteration that rebuilds the fiberwise coefficients of the cylinder
// ansatz from boundary data.
//
// With a = exp(atilde), the coupled system for the |z|^2 coefficient a and
// the z^2 coefficient b of the potential reduces to
//     lap atilde = 16 exp(-2 atilde) |d_wbar b|^2   (+ 4 exp(-2 atilde)
//                                                    for the inhomogeneous
//                                                    variant),
//     lap b      = 8 (d_w atilde) (d_wbar b),
// where lap is the real Laplacian in w = x + iy and d_w = (d_x - i d_y)/2.
// Both right-hand sides are lagged, each Poisson problem reuses one
// factorization, and the loop stops when the sup-norm update drops below
// tol.  Identically zero data converges in a single sweep.

#include <complex>
#include <functional>

#include "malab/families.hpp"
#include "malab/grid.hpp"

namespace malab {

class PoissonSolver {
 public:
  // Assembles and factorizes -lap on the inside nodes of spec once.
  explicit PoissonSolver(const GridSpec& spec);
  ~PoissonSolver();
  PoissonSolver(PoissonSolver&&) noexcept;
  PoissonSolver& operator=(PoissonSolver&&) noexcept;

  const GridSpec& spec() const;

  // Solves lap u = f inside with u = g on the ring.  f is read at inside
  // nodes, g at ring nodes; the result carries g on its ring.  Throws
  // NoConvergence when the factorization or the residual recheck fails.
  ScalarGrid solve(const ScalarGrid& f, const ScalarGrid& g) const;

 private:
  struct Impl;
  Impl* impl_;
};

using ComplexNodeFn = std::function<std::complex<double>(std::complex<double>)>;

struct PicardOptions {
  SystemVariant variant = SystemVariant::MA1;
  int max_iter = 200;
  double tol = 1e-13;
};

struct PicardResult {
  ScalarGrid atilde;        // log of the |z|^2 coefficient
  ScalarGrid b_re;          // z^2 coefficient, real part
  ScalarGrid b_im;          // z^2 coefficient, imaginary part
  int iterations = 0;
  double final_change = 0.0;
  double residual = 0.0;    // sup defect of the two discrete equations
};

// Rebuild (atilde, b) on the disc of radius spec.extent from ring data.
// atilde_data is real, b_data complex; both are sampled at ring nodes.
PicardResult picard_cylinder(const GridSpec& spec, const NodeFn& atilde_data,
                             const ComplexNodeFn& b_data,
                             const PicardOptions& opt = {});

}  // namespace malab
