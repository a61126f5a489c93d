#pragma once

#include <complex>

namespace mqs {

// Modified Bessel functions I0 and I1 for complex argument, needed for the
// field profile inside a conducting cylinder (argument gamma*r lies in the
// first quadrant for physical media).
//
// Evaluation: power series for |z| <= 20, two-exponential asymptotic
// expansion beyond; the series accumulates in extended precision so the
// near-imaginary-axis cancellation stays below ~1e-12 relative.  Valid for
// Re(z) >= 0 and extended to the left half plane via I0(-z) = I0(z),
// I1(-z) = -I1(z).
std::complex<double> bessel_i0(std::complex<double> z);
std::complex<double> bessel_i1(std::complex<double> z);

// Scaled variants exp(-Re(z)) * I_nu(z): finite for arbitrarily large Re(z),
// used where raw values would overflow (deep skin-effect regime).
std::complex<double> bessel_i0_scaled(std::complex<double> z);
std::complex<double> bessel_i1_scaled(std::complex<double> z);

}  // namespace mqs
