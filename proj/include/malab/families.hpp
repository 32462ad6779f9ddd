#pragma once
// Constructors for the two solution families of det(dd-bar u) = 1 under the
// ansatz in potential.hpp, plus the symbolic residuals of the governing
// coupled system and the anti-holomorphy invariant that separates the
// families.

#include <span>

#include "malab/potential.hpp"
#include "malab/series.hpp"

namespace malab {

// Sentinel radius for entire families (evaluation anywhere sensible).
inline constexpr double kEntireRadius = 1e100;

// Holomorphic seed helpers (series in w only).
BiSeries seed_zero(int order);
BiSeries seed_poly(const std::vector<Complex>& coeffs, int order);
// exp(lambda w)
BiSeries seed_exp(Complex lambda, int order);
// w / R with radius hint R
BiSeries seed_linear_over_R(double R, int order);

// Flat family on C x C from entire seeds h, f and holomorphic passthrough b:
//   a = exp(2 Re h),  c = int_wbar(a conj(f)),
//   d = int_mixed(a |f|^2 + exp(-2 Re h)).
// Integration constants are zero; callers may add pluriharmonic terms, which
// never change the Hessian.
SolutionCoeffs build_flat(const BiSeries& h, const BiSeries& f,
                          const BiSeries& b, int order);

// Nowhere-flat family on C x D_R from a holomorphic f with f'(0) != 0 and
// sup |f| < 1 (checked on 64 near-boundary samples):
//   log a = Re log f' - log(1 - f conj(f)),
//   b = int_wbar( |f'|^2 / (2 (1 - f conj(f))^2) ),
//   c = given holomorphic passthrough, d = int_mixed(exp(-log a) (|c_wbar|^2 + 1)).
SolutionCoeffs build_nowhere_flat(const BiSeries& f, const BiSeries& c_holo,
                                  int order, double R);

// Which source terms the coupled system carries.
enum class SystemVariant {
  MA1,  // unit determinant
  MA4   // extra +exp(-2 log a) in eq 1 and -exp(-log a) in eq 3
};

// Coefficientwise max magnitudes of the four equation defects
//   r1 = a a_wbw - |a_w|^2 - 4 |b_wb|^2            (- 1 for MA4)
//   r2 = a b_wbw - 2 a_w b_wb
//   r3 = a c_wbw - a_w c_wb - 2 b_wb conj(c_wb)    (+ 1 for MA4)
//   r4 = a d_wbw - |c_wb|^2 - 1
// computed entirely in series through order N-2.
std::array<double, 4> system_residual(const SolutionCoeffs& sc,
                                      SystemVariant variant);

// The series exp(-2 log a) b_wbar, anti-holomorphic exactly when the flatness
// dichotomy collapses; returns it together with the max coefficient magnitude
// of its w-derivative (0 for true solutions of the coupled system).
struct AntiHoloInvariant {
  BiSeries invariant;
  double defect;
};
AntiHoloInvariant antiholo_invariant(const SolutionCoeffs& sc);

// Dilation w -> (r/R) w carrying a solution on D_R to one on D_r':
// a'(w) = a(r w / R), b' = b(r w / R), c' = (R/r) c(r w / R),
// d' = (R/r)^2 d(r w / R).
SolutionCoeffs rescale_solution(const SolutionCoeffs& sc, double r, double R);

}  // namespace malab
