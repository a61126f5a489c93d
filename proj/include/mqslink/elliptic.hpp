#pragma once

namespace mqs {

// Complete elliptic integrals of the first and second kind, K(k) and E(k),
// as functions of the modulus k (not the parameter m = k^2).
struct EllipticKE {
  double k_complete;  // K(k)
  double e_complete;  // E(k)
};

// Arithmetic-geometric-mean evaluation, converged to full double precision
// (well past the 1e-12 relative target).  Requires 0 <= k < 1; K diverges as
// k -> 1 and a modulus too close to 1 raises numeric_error.
EllipticKE elliptic_ke(double modulus);

}  // namespace mqs
