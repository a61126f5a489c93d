#include "mqslink/bessel.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "golden_values.hpp"

using namespace mqs;
using cd = std::complex<double>;

namespace {

double rel_err(cd got, cd want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("modified bessel basics") {
  CHECK(bessel_i0(cd(0, 0)) == cd(1, 0));
  CHECK(bessel_i1(cd(0, 0)) == cd(0, 0));
  // real-argument agreement with the standard library
  for (double x : {0.5, 3.0, 11.0, 19.0, 27.0, 60.0}) {
    CHECK(rel_err(bessel_i0(cd(x, 0)), cd(std::cyl_bessel_i(0.0, x), 0)) < 1e-12);
    CHECK(rel_err(bessel_i1(cd(x, 0)), cd(std::cyl_bessel_i(1.0, x), 0)) < 1e-12);
  }
}

TEST_CASE("modified bessel complex spot values") {
  const struct {
    cd z, i0, i1;
  } cases[] = {
      {{golden::kI0zARe, golden::kI0zAIm},
       {golden::kI0zAValRe, golden::kI0zAValIm},
       {golden::kI0zAI1Re, golden::kI0zAI1Im}},
      {{golden::kI0zBRe, golden::kI0zBIm},
       {golden::kI0zBValRe, golden::kI0zBValIm},
       {golden::kI0zBI1Re, golden::kI0zBI1Im}},
      {{golden::kI0zCRe, golden::kI0zCIm},
       {golden::kI0zCValRe, golden::kI0zCValIm},
       {golden::kI0zCI1Re, golden::kI0zCI1Im}},
      {{golden::kI0zDRe, golden::kI0zDIm},
       {golden::kI0zDValRe, golden::kI0zDValIm},
       {golden::kI0zDI1Re, golden::kI0zDI1Im}},
      {{golden::kI0zERe, golden::kI0zEIm},
       {golden::kI0zEValRe, golden::kI0zEValIm},
       {golden::kI0zEI1Re, golden::kI0zEI1Im}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.z.real());
    CAPTURE(c.z.imag());
    CHECK(rel_err(bessel_i0(c.z), c.i0) < 1e-12);
    CHECK(rel_err(bessel_i1(c.z), c.i1) < 1e-12);
  }
}

TEST_CASE("scaled variants match unscaled where both are finite") {
  for (cd z : {cd(2, 3), cd(10, 15), cd(25, 5), cd(0.5, 19.5)}) {
    const double s = std::exp(-z.real());
    CHECK(rel_err(bessel_i0_scaled(z), s * bessel_i0(z)) < 1e-13);
    CHECK(rel_err(bessel_i1_scaled(z), s * bessel_i1(z)) < 1e-13);
  }
  // deep skin-effect argument: raw would overflow, scaled must stay finite
  const cd big(900, 900);
  const cd v = bessel_i0_scaled(big);
  CHECK(std::isfinite(v.real()));
  CHECK(std::isfinite(v.imag()));
  CHECK(std::abs(v) > 0.0);
}

namespace {

// Independent oracle: midpoint rule on the periodic integral representations
//   I0(z)  = (1/2pi) integral e^(z cos t) dt
//   I1(z)  = (1/2pi) integral e^(z cos t) cos t dt
//   I1'(z) = (1/2pi) integral e^(z cos t) cos^2 t dt
// over one period.  The integrand is entire and periodic, so the rule
// converges spectrally; 2048 nodes are converged far past double precision
// for |z| <= 40.
struct IntegralBessel {
  cd i0, i1, i1_prime;
};

IntegralBessel integral_bessel(cd z) {
  constexpr int n = 2048;
  cd s0 = 0, s1 = 0, s2 = 0;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * 3.14159265358979323846 * (k + 0.5) / n;
    const double c = std::cos(t);
    const cd e = std::exp(z * c);
    s0 += e;
    s1 += e * c;
    s2 += e * c * c;
  }
  return {s0 / double(n), s1 / double(n), s2 / double(n)};
}

}  // namespace

TEST_CASE("values and derivative recurrence at random first-quadrant arguments") {
  // Implementation vs the integral oracle, plus I1'(z) = I0(z) - I1(z)/z with
  // the derivative taken from the (independent) differentiated integral.
  std::mt19937 rng(20240711);
  std::uniform_real_distribution<double> mag(0.1, 40.0);
  std::uniform_real_distribution<double> phase(0.0, 1.5707963267948966);
  for (int i = 0; i < 100; ++i) {
    const cd z = std::polar(mag(rng), phase(rng));
    const IntegralBessel ref = integral_bessel(z);
    const cd i0 = bessel_i0(z);
    const cd i1 = bessel_i1(z);
    const double scale = std::abs(ref.i0) + std::abs(ref.i1);
    CAPTURE(z.real());
    CAPTURE(z.imag());
    CHECK(std::abs(i0 - ref.i0) / scale < 1e-10);
    CHECK(std::abs(i1 - ref.i1) / scale < 1e-10);
    const cd recurrence = i0 - i1 / z;
    CHECK(std::abs(recurrence - ref.i1_prime) / scale < 1e-10);
  }
}

TEST_CASE("series/asymptotic switchover is seamless") {
  // first-order consistency across |z| = 20: the value step between the two
  // branches must equal dz * I1 (the derivative of I0) to high accuracy
  for (double angle : {0.1, 0.7853981633974483, 1.4, 1.5707963267948966}) {
    const cd below = std::polar(19.9999, angle);
    const cd above = std::polar(20.0001, angle);
    const cd mid = std::polar(20.0, angle);
    const cd dz = above - below;
    const cd step_i0 = bessel_i0(above) - bessel_i0(below);
    CHECK(std::abs(step_i0 - dz * bessel_i1(mid)) / std::abs(dz * bessel_i1(mid)) < 1e-3);
    const cd step_i1 = bessel_i1(above) - bessel_i1(below);
    const cd i1_prime = bessel_i0(mid) - bessel_i1(mid) / mid;
    CHECK(std::abs(step_i1 - dz * i1_prime) / std::abs(dz * i1_prime) < 1e-3);
  }
}
