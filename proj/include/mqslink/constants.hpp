#pragma once

namespace mqs {

// Classical SI constants. eps0 is derived from mu0 and c so that
// mu0 * eps0 * c^2 == 1 holds exactly in double precision; the wavelength
// identity lambda * f * sqrt(eps_r) == c relies on this trio being
// self-consistent.
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kMu0 = 4.0e-7 * kPi;               // H/m
inline constexpr double kC0 = 299792458.0;                 // m/s
inline constexpr double kEps0 = 1.0 / (kMu0 * kC0 * kC0);  // F/m

}  // namespace mqs
