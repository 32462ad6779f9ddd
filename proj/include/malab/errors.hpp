#pragma once
// Error taxonomy shared by all modules. Every failure mode a caller can
// recover from gets its own type so tests and the CLI can catch precisely.

#include <stdexcept>
#include <string>

namespace malab {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Series evaluation outside the convergence radius hint.
struct OutOfRadius : Error { using Error::Error; };

// Point outside a map's domain of definition (e.g. the sqrt-branch disc).
struct OutOfDomain : Error { using Error::Error; };

// Radial evaluation at a point where a <= 0 or a branch expression has a pole.
struct OutOfValidity : Error { using Error::Error; };

// Piecewise potential probed on its gluing hypersurface.
struct OnHypersurface : Error { using Error::Error; };

// Metric inversion requested for coefficients that do not satisfy the
// unit-determinant system to tolerance.
struct NotUnimodular : Error { using Error::Error; };

// Holomorphic seed violating an admissibility precondition.
struct SeedRejected : Error { using Error::Error; };

// Harmonic seed not strictly positive on the requested ball.
struct SeedNotPositive : Error { using Error::Error; };

// Iterative scheme exhausted its budget before meeting tolerance.
struct NoConvergence : Error { using Error::Error; };

// Parameter combination outside the implemented closed forms
// (complex k c/d evaluation, degenerate denominators, ...).
struct UnsupportedParams : Error { using Error::Error; };

// Config file/flag problems: unknown keys, malformed values, bad lattice.
struct ConfigError : Error { using Error::Error; };

// Filesystem failures while writing reports or CSV exports.
struct IoError : Error { using Error::Error; };

}  // namespace malab
