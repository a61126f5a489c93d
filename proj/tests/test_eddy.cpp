#include "mqslink/eddy.hpp"

#include <cmath>

#include "doctest.h"
#include "golden_values.hpp"
#include "mqslink/bessel.hpp"
#include "mqslink/constants.hpp"
#include "mqslink/errors.hpp"
#include "mqslink/sweep.hpp"
#include "mqslink/tissue_db.hpp"

using namespace mqs;

namespace {

CylinderModel muscle_arm(bool displacement) {
  const TissueDb db = load_tissue_db(MQSLINK_SOURCE_DIR "/data/tissues.txt");
  CylinderModel c;
  c.radius = 0.04;
  c.tissue = find_tissue(db, "muscle");
  c.include_displacement = displacement;
  return c;
}

}  // namespace

TEST_CASE("transparent limit: zero conductivity, conduction-only gamma") {
  CylinderModel c = muscle_arm(false);
  c.sigma_override = 0.0;
  for (double f : {1e4, 1e6, 447e6}) {
    const EddyResult r = field_profile(c, f, 16);
    CHECK(r.transmission_on_axis == 1.0);
    CHECK(r.power_per_length == 0.0);
    for (const auto& s : r.current_density_profile) CHECK(s.current_density == 0.0);
  }
}

TEST_CASE("transmission anchors against the high-precision oracle") {
  const CylinderModel diffusion = muscle_arm(false);
  const CylinderModel full = muscle_arm(true);

  CHECK(field_profile(diffusion, 1e6).transmission_on_axis ==
        doctest::Approx(golden::kEddyT1MHzDiff).epsilon(1e-10));
  CHECK(field_profile(diffusion, 447e6).transmission_on_axis ==
        doctest::Approx(golden::kEddyT447MHzDiff).epsilon(1e-10));
  CHECK(field_profile(full, 1e6).transmission_on_axis ==
        doctest::Approx(golden::kEddyT1MHzFull).epsilon(1e-10));
  CHECK(field_profile(full, 447e6).transmission_on_axis ==
        doctest::Approx(golden::kEddyT447MHzFull).epsilon(1e-10));

  // body transparent in the quasistatic region
  CHECK(field_profile(diffusion, 1e6).transmission_on_axis > 0.99);
  // conduction attenuates the interior field at 447 MHz...
  CHECK(field_profile(diffusion, 447e6).transmission_on_axis < 1.0);
  // ...while the full model shows the weak resonant enhancement instead
  CHECK(field_profile(full, 447e6).transmission_on_axis > 1.0);
}

TEST_CASE("current density profile shape") {
  const CylinderModel c = muscle_arm(false);

  SUBCASE("axis current vanishes, frozen surface value at 1 MHz") {
    const EddyResult r = field_profile(c, 1e6, 64);
    CHECK(r.current_density_profile.front().current_density == 0.0);
    CHECK(r.current_density_profile.back().current_density ==
          doctest::Approx(golden::kEddySurfaceJ1MHz).epsilon(1e-10));
  }
  SUBCASE("monotone increasing at low frequency") {
    REQUIRE(std::abs(c.gamma(1e5)) * c.radius < 0.3);
    const EddyResult r = field_profile(c, 1e5, 64);
    for (std::size_t i = 1; i < r.current_density_profile.size(); ++i) {
      CHECK(r.current_density_profile[i].current_density >
            r.current_density_profile[i - 1].current_density);
    }
  }
  SUBCASE("high frequency concentrates dissipation at the surface") {
    CylinderModel hot = c;
    const double f = 1e10;  // deep skin-effect regime
    const double gb = std::abs(hot.gamma(f)) * hot.radius;
    REQUIRE(gb > 10.0);
    const double delta = 1.0 / hot.gamma(f).real();
    const EddyResult full = field_profile(hot, f, 64);
    // recompute the shell contribution over [b - 3 delta, b]
    const double sigma = hot.effective_sigma(f);
    auto power_between = [&](double lo, double hi) {
      // trapezoid on a fine grid; adequate as an independent check here
      const int n = 4000;
      double acc = 0.0;
      for (int i = 0; i < n; ++i) {
        const double r0 = lo + (hi - lo) * i / n;
        const double r1 = lo + (hi - lo) * (i + 1) / n;
        auto j = [&](double r) {
          const auto g = hot.gamma(f);
          const auto num = bessel_i1_scaled(g * r);
          const auto den = bessel_i0_scaled(g * hot.radius);
          return std::abs(g) * std::abs(num) / std::abs(den) *
                 std::exp((g * r).real() - (g * hot.radius).real());
        };
        const double j0 = j(r0), j1 = j(r1);
        acc += 0.5 * (j0 * j0 * r0 + j1 * j1 * r1) * (r1 - r0);
      }
      return acc * 2 * kPi / (2 * sigma);
    };
    const double shell = power_between(hot.radius - 3 * delta, hot.radius);
    CHECK(shell / full.power_per_length > 0.9);
  }
}

TEST_CASE("dissipated power") {
  const CylinderModel c = muscle_arm(false);
  SUBCASE("frozen oracle values") {
    CHECK(field_profile(c, 1e6).power_per_length ==
          doctest::Approx(golden::kEddyPower1MHz).epsilon(1e-8));
    CHECK(field_profile(c, 1e8).power_per_length ==
          doctest::Approx(golden::kEddyPower100MHz).epsilon(1e-8));
  }
  SUBCASE("low-frequency closed form") {
    const double f = 1e6;
    const double sigma = c.effective_sigma(f);
    const double w = 2 * kPi * f;
    const double analytic = sigma * w * w * kMu0 * kMu0 * kPi * std::pow(c.radius, 4) / 16.0;
    CHECK(field_profile(c, f).power_per_length == doctest::Approx(analytic).epsilon(0.01));
  }
  SUBCASE("power vanishes only with conductivity") {
    CylinderModel lossless = c;
    lossless.sigma_override = 0.0;
    CHECK(field_profile(lossless, 1e6).power_per_length == 0.0);
    CHECK(field_profile(c, 1e6).power_per_length > 0.0);
  }
}

TEST_CASE("low-frequency current limit") {
  const CylinderModel c = muscle_arm(false);
  SUBCASE("axis value is zero and scaling is linear in sigma") {
    CHECK(low_frequency_current(c, 1e5, 0.0) == 0.0);
    CylinderModel doubled = c;
    doubled.sigma_override = 2.0 * c.effective_sigma(1e5);
    CHECK(low_frequency_current(doubled, 1e5, 0.02) ==
          doctest::Approx(2.0 * low_frequency_current(c, 1e5, 0.02)).epsilon(1e-12));
  }
  SUBCASE("agrees with the full profile at |gamma b| = 0.1") {
    // pick the frequency where |gamma| b = 0.1 by bisection
    double lo = 1e3, hi = 1e7;
    auto gb = [&](double f) { return std::abs(c.gamma(f)) * c.radius - 0.1; };
    REQUIRE(gb(lo) < 0);
    REQUIRE(gb(hi) > 0);
    for (int i = 0; i < 100; ++i) {
      const double mid = std::sqrt(lo * hi);
      (gb(mid) < 0 ? lo : hi) = mid;
    }
    const double f = std::sqrt(lo * hi);
    const EddyResult full = field_profile(c, f, 33);
    const auto& sample = full.current_density_profile[24];  // r = 0.75 b
    const double approx = low_frequency_current(c, f, sample.r);
    CHECK(approx == doctest::Approx(sample.current_density).epsilon(0.02));
  }
  SUBCASE("guard points to the full solution") {
    try {
      low_frequency_current(c, 447e6, 0.02);
      FAIL("expected validation_error");
    } catch (const validation_error& e) {
      CHECK(std::string(e.what()).find("field_profile") != std::string::npos);
    }
  }
}

TEST_CASE("attenuation sweep") {
  SUBCASE("monotone decline over the band, conduction-only") {
    const CylinderModel c = muscle_arm(false);
    const auto grid = log_grid(1e4, 1e9, 60);
    const auto results = attenuation_sweep(c, grid, 16);
    REQUIRE(results.size() == grid.size());
    for (std::size_t i = 1; i < results.size(); ++i) {
      CHECK(results[i].transmission_on_axis <= results[i - 1].transmission_on_axis + 1e-12);
      CHECK(results[i].power_per_length >= results[i - 1].power_per_length * (1 - 1e-12));
    }
  }
  SUBCASE("sigma override keeps transmission at one across the grid") {
    CylinderModel c = muscle_arm(false);
    c.sigma_override = 0.0;
    for (const auto& r : attenuation_sweep(c, log_grid(1e3, 1e10, 30), 16)) {
      CHECK(r.transmission_on_axis == 1.0);
    }
  }
  SUBCASE("transmission deficit scales as sigma^2 towards the lossless limit") {
    // 1 - T -> (w mu0 sigma b^2 / 4)^2 / 4: the leading correction to |I0| of
    // a purely reactive argument is second order, so the approach is
    // quadratic in sigma.
    CylinderModel c = muscle_arm(false);
    const double f = 1e6;
    double prev_ratio = 0.0;
    bool first = true;
    for (double sigma : {1e-2, 1e-1, 1.0}) {
      c.sigma_override = sigma;
      const double deficit = 1.0 - field_profile(c, f).transmission_on_axis;
      CHECK(deficit > 0.0);
      const double ratio = deficit / (sigma * sigma);
      if (!first) CHECK(ratio == doctest::Approx(prev_ratio).epsilon(0.02));
      prev_ratio = ratio;
      first = false;
    }
  }
  SUBCASE("crossover below 0.9 matches the frozen oracle") {
    const CylinderModel c = muscle_arm(false);
    double lo = 1e7, hi = 1e9;
    auto t = [&](double f) { return field_profile(c, f, 16).transmission_on_axis; };
    REQUIRE(t(lo) > 0.9);
    REQUIRE(t(hi) < 0.9);
    for (int i = 0; i < 100; ++i) {
      const double mid = std::sqrt(lo * hi);
      (t(mid) > 0.9 ? lo : hi) = mid;
    }
    CHECK(std::sqrt(lo * hi) ==
          doctest::Approx(golden::kEddyT09CrossingHz).epsilon(1e-6));
  }
  SUBCASE("non-increasing grid is rejected") {
    const CylinderModel c = muscle_arm(false);
    CHECK_THROWS_AS(attenuation_sweep(c, {1e6, 1e6}, 16), validation_error);
  }
}

TEST_CASE("cylinder model validation") {
  CylinderModel c = muscle_arm(false);
  c.radius = 0.0;
  CHECK_THROWS_AS(c.validate(), validation_error);
  c = muscle_arm(false);
  c.sigma_override = -1.0;
  CHECK_THROWS_AS(c.validate(), validation_error);
  c = muscle_arm(false);
  CHECK_THROWS_AS(field_profile(c, -1.0), validation_error);
  CHECK_THROWS_AS(field_profile(c, 1e6, 8), validation_error);
}
