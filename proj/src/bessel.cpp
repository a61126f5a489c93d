#include "mqslink/bessel.hpp"

#include <cmath>
#include <complex>

#include "mqslink/constants.hpp"

namespace mqs {
namespace {

using cld = std::complex<long double>;

constexpr double kSeriesRadius = 20.0;  // series/asymptotic switchover at |z|

// Power series around 0, accumulated in extended precision: the worst case
// (|z| near the switchover radius on the imaginary axis) cancels ~8 decimal
// digits, which extended precision absorbs.
cld i0_series(cld z) {
  const cld u = z * z * 0.25L;
  cld sum = 1.0L;
  cld term = 1.0L;
  long double max_term = 1.0L;
  for (int k = 1; k < 200; ++k) {
    term *= u / static_cast<long double>(k) / static_cast<long double>(k);
    sum += term;
    max_term = std::max(max_term, std::abs(term));
    if (std::abs(term) < 1e-22L * max_term) break;
  }
  return sum;
}

cld i1_series(cld z) {
  const cld u = z * z * 0.25L;
  cld sum = 1.0L;
  cld term = 1.0L;
  long double max_term = 1.0L;
  for (int k = 1; k < 200; ++k) {
    term *= u / static_cast<long double>(k) / static_cast<long double>(k + 1);
    sum += term;
    max_term = std::max(max_term, std::abs(term));
    if (std::abs(term) < 1e-22L * max_term) break;
  }
  return 0.5L * z * sum;
}

// Two-exponential asymptotic expansion, valid for -pi/2 < arg z < 3*pi/2:
//   I_nu(z) = [e^z * sum_k (-1)^k a_k/z^k + s_nu * e^-z * sum_k a_k/z^k]
//             / sqrt(2*pi*z),
// with a_k(nu) = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (8j) and s_0 = +i,
// s_1 = -i.  The subdominant exponential matters near the imaginary axis.
struct AsymptoticSums {
  cld alternating;  // sum of (-1)^k a_k / z^k
  cld plain;        // sum of a_k / z^k
};

AsymptoticSums asymptotic_sums(int nu, cld z) {
  const long double four_nu2 = 4.0L * nu * nu;
  cld term = 1.0L;
  AsymptoticSums s{1.0L, 1.0L};
  long double prev = 1.0L;
  long double sign = 1.0L;
  for (int k = 1; k < 40; ++k) {
    const long double num = four_nu2 - (2.0L * k - 1.0L) * (2.0L * k - 1.0L);
    term *= num / (8.0L * k) / z;
    const long double mag = std::abs(term);
    if (mag > prev) break;  // divergent tail reached
    sign = -sign;
    s.alternating += sign * term;
    s.plain += term;
    if (mag < 1e-22L) break;
    prev = mag;
  }
  return s;
}

// Core evaluation for Re(z) >= 0.  When `scaled`, returns I_nu(z)*exp(-Re z).
cld eval(int nu, cld z, bool scaled) {
  if (std::abs(z) <= kSeriesRadius) {
    cld v = (nu == 0) ? i0_series(z) : i1_series(z);
    if (scaled) v *= std::exp(-z.real());
    return v;
  }
  const AsymptoticSums s = asymptotic_sums(nu, z);
  const cld prefactor = 1.0L / std::sqrt(2.0L * static_cast<long double>(kPi) * z);
  const cld sub_sign = (nu == 0) ? cld(0.0L, 1.0L) : cld(0.0L, -1.0L);
  if (scaled) {
    const cld osc = std::exp(cld(0.0L, z.imag()));
    const cld sub = std::exp(-z - z.real());
    return prefactor * (osc * s.alternating + sub_sign * sub * s.plain);
  }
  return prefactor * (std::exp(z) * s.alternating + sub_sign * std::exp(-z) * s.plain);
}

cld dispatch(int nu, std::complex<double> zd, bool scaled) {
  cld z(zd.real(), zd.imag());
  if (z.real() < 0.0L) {
    // I0 is even, I1 odd.
    const cld v = eval(nu, -z, false);
    const cld r = (nu == 0) ? v : -v;
    return scaled ? r * std::exp(-z.real()) : r;
  }
  return eval(nu, z, scaled);
}

std::complex<double> narrow(cld v) {
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

}  // namespace

std::complex<double> bessel_i0(std::complex<double> z) { return narrow(dispatch(0, z, false)); }

std::complex<double> bessel_i1(std::complex<double> z) { return narrow(dispatch(1, z, false)); }

std::complex<double> bessel_i0_scaled(std::complex<double> z) {
  return narrow(dispatch(0, z, true));
}

std::complex<double> bessel_i1_scaled(std::complex<double> z) {
  return narrow(dispatch(1, z, true));
}

}  // namespace mqs
