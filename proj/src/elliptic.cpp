#include "mqslink/elliptic.hpp"

#include <cmath>
#include <string>

#include "mqslink/constants.hpp"
#include "mqslink/errors.hpp"

namespace mqs {

EllipticKE elliptic_ke(double modulus) {
  if (!(modulus >= 0.0) || !(modulus < 1.0)) {
    throw validation_error("elliptic_ke: modulus must be in [0, 1), got " +
                           std::to_string(modulus));
  }
  const double m = modulus * modulus;
  if (1.0 - m < 1e-15) {
    throw numeric_error("elliptic_ke: modulus too close to 1, K(k) diverges");
  }

  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  double c = modulus;
  double c_sum = 0.5 * c * c;  // sum of 2^(n-1) c_n^2, n = 0 term
  double pow2 = 0.5;

  for (int n = 1; n < 64; ++n) {
    const double a_next = 0.5 * (a + b);
    const double b_next = std::sqrt(a * b);
    c = 0.5 * (a - b);
    a = a_next;
    b = b_next;
    pow2 *= 2.0;
    c_sum += pow2 * c * c;
    if (c < 1e-18 * a) break;
  }

  const double big_k = kPi / (2.0 * a);
  return {big_k, big_k * (1.0 - c_sum)};
}

}  // namespace mqs
