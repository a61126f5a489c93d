#pragma once

#include "mqslink/loop.hpp"

namespace mqs {

// Self-inductance of a circular loop of round wire,
//   L = mu0 N^2 R (ln(8R/a) - 2 + Y/4).
// Y is the internal-inductance factor: 0 in the skin-effect regime (default,
// matches MHz-range measurements), 1 at DC.  Requires the thin-wire regime
// a/R < 0.1.
double self_inductance(const Loop& loop, double internal_factor_y = 0.0);

// Mutual inductance of two coaxial single-turn filaments (Maxwell's
// elliptic-integral formula).  Diverges for coincident filaments.
double mutual_coaxial(double r1, double r2, double distance);

// Convergence diagnostics for the Neumann quadrature: values at three
// nested resolutions and the extrapolated estimate.
struct QuadratureReport {
  double coarse = 0.0;        // segments/4
  double medium = 0.0;        // segments/2
  double fine = 0.0;          // segments
  double extrapolated = 0.0;  // Aitken-accelerated
  double rel_change = 0.0;    // |fine - medium| / |fine|
  bool converged = true;      // rel_change <= 1%
};

// General-geometry mutual inductance by the Neumann double integral with
// midpoint quadrature (`segments` points per loop, pairwise summation).
// Signed: negative values occur for e.g. far coplanar placements.  Includes
// the turns product.  Non-convergence beyond 1% between resolutions is
// reported (and raises numeric_error when no report sink is given).
double mutual_neumann(const CoilPair& pair, int segments = 512,
                      QuadratureReport* report = nullptr);

// Mutual inductance of a pair: closed form on the coaxial fast path, Neumann
// quadrature otherwise.  Includes the turns product.
double mutual_inductance(const CoilPair& pair, int segments = 512);

// k = M / sqrt(L1 L2); |k| <= 1, anything beyond 1 + 1e-6 signals a numerics
// bug and raises numeric_error.
double coupling_coefficient(const CoilPair& pair);

// Demagnetizing factor along the symmetry axis of a spheroid with the given
// length-to-diameter ratio (prolate for > 1, sphere 1/3, oblate below).
double rod_demagnetizing_factor(double length_to_diameter);

// Effective-permeability multiplier mu_r / (1 + D (mu_r - 1)) of a magnetic
// rod core; a coupling trend model, not a field solution.  Saturates at 1/D.
double rod_core_scaling(double mu_r, double length_to_diameter);

}  // namespace mqs
