#include "mqslink/cole_cole.hpp"

#include <cmath>
#include <limits>

#include "doctest.h"
#include "golden_values.hpp"
#include "mqslink/constants.hpp"
#include "mqslink/errors.hpp"
#include "mqslink/tissue_db.hpp"

using namespace mqs;

namespace {

TissueDb shipped_db() { return load_tissue_db(MQSLINK_SOURCE_DIR "/data/tissues.txt"); }

// Bisection for the frequency where a monotone quantity crosses a target.
template <typename F>
double bisect(F&& fn, double lo, double hi) {
  double flo = fn(lo);
  REQUIRE(flo * fn(hi) < 0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (flo * fn(mid) <= 0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fn(lo);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("cole-cole spot values match the reference oracle") {
  const auto db = shipped_db();
  const auto& muscle = find_tissue(db, "muscle");
  const auto& skin = find_tissue(db, "skin_dry");

  const struct {
    const ColeColeModel* model;
    double f, eps, sigma;
  } spots[] = {
      {&muscle, 1e6, golden::kEpsMuscle1MHz, golden::kSigmaMuscle1MHz},
      {&muscle, 1e8, golden::kEpsMuscle100MHz, golden::kSigmaMuscle100MHz},
      {&muscle, 447e6, golden::kEpsMuscle447MHz, golden::kSigmaMuscle447MHz},
      {&muscle, 1e7, golden::kEpsMuscle10MHz, golden::kSigmaMuscle10MHz},
      {&skin, 1e6, golden::kEpsSkinDry1MHz, golden::kSigmaSkinDry1MHz},
      {&skin, 1e8, golden::kEpsSkinDry100MHz, golden::kSigmaSkinDry100MHz},
  };
  for (const auto& s : spots) {
    const PropagationProperties p = evaluate_cole_cole(*s.model, s.f);
    CAPTURE(s.f);
    CHECK(p.eps_real == doctest::Approx(s.eps).epsilon(1e-12));
    CHECK(p.sigma_eff == doctest::Approx(s.sigma).epsilon(1e-12));
  }
}

TEST_CASE("dispersion-free model reduces to eps_inf") {
  ColeColeModel vacuumish;
  vacuumish.tissue_name = "test";
  vacuumish.eps_inf = 7.25;
  vacuumish.sigma_ionic = 0.0;
  const PropagationProperties p = evaluate_cole_cole(vacuumish, 1e6);
  CHECK(p.eps_real == 7.25);
  CHECK(p.eps_imag == 0.0);
  CHECK(p.sigma_eff == 0.0);
}

TEST_CASE("input validation and band flag") {
  const auto db = shipped_db();
  const auto& muscle = find_tissue(db, "muscle");
  CHECK_THROWS_AS(evaluate_cole_cole(muscle, 0.0), validation_error);
  CHECK_THROWS_AS(evaluate_cole_cole(muscle, -1.0), validation_error);
  CHECK(evaluate_cole_cole(muscle, 100.0).out_of_band);
  CHECK(evaluate_cole_cole(muscle, 1e11).out_of_band);
  CHECK_FALSE(evaluate_cole_cole(muscle, 1e6).out_of_band);
}

TEST_CASE("wavelength anchors") {
  const auto db = shipped_db();
  const auto& muscle = find_tissue(db, "muscle");

  SUBCASE("muscle lossless wavelength at 447 MHz is ~8.9 cm") {
    const double lam = wavelength(muscle, 447e6, WavelengthVariant::lossless);
    CHECK(lam == doctest::Approx(golden::kMuscleLambdaLossless447MHz).epsilon(1e-12));
    CHECK(std::abs(lam - 0.089) / 0.089 < 0.10);
    CHECK(evaluate_cole_cole(muscle, 447e6).eps_real == doctest::Approx(57.0).epsilon(0.05));
  }
  SUBCASE("vacuum-like model at 300 MHz gives ~1 m") {
    ColeColeModel vac;
    vac.tissue_name = "vac";
    vac.eps_inf = 1.0;
    const double lam = wavelength(vac, 300e6, WavelengthVariant::lossless);
    CHECK(lam == doctest::Approx(1.0).epsilon(1e-3));
  }
  SUBCASE("1 m crossing frequency sits in the tens of MHz") {
    const double f_cross = bisect(
        [&](double f) {
          return wavelength(muscle, f, WavelengthVariant::lossless) - 1.0;
        },
        1e7, 3e8);
    CHECK(f_cross == doctest::Approx(golden::kMuscleLambda1mCrossingHz).epsilon(1e-9));
    CHECK(f_cross > 30e6);
    CHECK(f_cross < 150e6);
  }
  SUBCASE("lossy wavelength and skin depth at 447 MHz") {
    const PropagationProperties p = evaluate_cole_cole(muscle, 447e6);
    CHECK(p.wavelength_lossy ==
          doctest::Approx(golden::kMuscleLambdaLossy447MHz).epsilon(1e-12));
    CHECK(p.skin_depth == doctest::Approx(golden::kMuscleSkinDepth447MHz).epsilon(1e-12));
    // arm-scale: below the body diameter scale, above a centimetre
    CHECK(p.skin_depth > 0.01);
    CHECK(p.skin_depth < 0.06);
  }
}

TEST_CASE("skin depth limits") {
  SUBCASE("lossless medium has infinite skin depth") {
    ColeColeModel vac;
    vac.tissue_name = "vac";
    vac.eps_inf = 5.0;
    CHECK(std::isinf(skin_depth(vac, 1e6)));
  }
  SUBCASE("good conductor matches sqrt(2/(w mu sigma)) within 1%") {
    ColeColeModel conductor;
    conductor.tissue_name = "salty";
    conductor.eps_inf = 80.0;
    conductor.sigma_ionic = 5e4;  // sigma/(w eps0 eps') >> 100 at 1 MHz
    const double f = 1e6;
    const double w = 2 * kPi * f;
    CHECK(conductor.sigma_ionic / (w * kEps0 * 80.0) > 100.0);
    const double textbook = std::sqrt(2.0 / (w * kMu0 * conductor.sigma_ionic));
    CHECK(skin_depth(conductor, f) == doctest::Approx(textbook).epsilon(0.01));
  }
  SUBCASE("muscle at 1 MHz") {
    const auto db = shipped_db();
    const auto& muscle = find_tissue(db, "muscle");
    CHECK(skin_depth(muscle, 1e6) ==
          doctest::Approx(golden::kMuscleSkinDepth1MHz).epsilon(1e-12));
  }
}

TEST_CASE("band-wide monotonicity and identities for every shipped tissue") {
  const auto db = shipped_db();
  for (const auto& [name, model] : db) {
    CAPTURE(name);
    double prev_eps = std::numeric_limits<double>::infinity();
    double prev_sigma = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double f = kBandMinHz * std::pow(kBandMaxHz / kBandMinHz, i / 199.0);
      const PropagationProperties p = evaluate_cole_cole(model, f);
      CHECK(p.eps_real >= 1.0);
      CHECK(p.sigma_eff > 0.0);
      CHECK(p.eps_real <= prev_eps * (1 + 1e-12));
      CHECK(p.sigma_eff >= prev_sigma * (1 - 1e-12));
      prev_eps = p.eps_real;
      prev_sigma = p.sigma_eff;

      // lambda * f * sqrt(eps') = c, to 1e-9 relative
      CHECK(p.wavelength_lossless * f * std::sqrt(p.eps_real) ==
            doctest::Approx(kC0).epsilon(1e-9));
      CHECK(p.wavelength_lossy <= p.wavelength_lossless * (1 + 1e-12));
      CHECK(p.wavelength_lossy > 0.0);
      CHECK(p.skin_depth > 0.0);
    }
  }
}

TEST_CASE("lossy wavelength converges to lossless in the low-loss limit") {
  ColeColeModel lowloss;
  lowloss.tissue_name = "lowloss";
  lowloss.eps_inf = 10.0;
  lowloss.sigma_ionic = 1e-6;
  const double f = 1e9;
  const PropagationProperties p = evaluate_cole_cole(lowloss, f);
  REQUIRE(p.sigma_eff / (2 * kPi * f * kEps0 * p.eps_real) < 0.01);
  CHECK(p.wavelength_lossy == doctest::Approx(p.wavelength_lossless).epsilon(0.01));

  ColeColeModel lossless = lowloss;
  lossless.sigma_ionic = 0.0;
  const PropagationProperties q = evaluate_cole_cole(lossless, f);
  CHECK(q.wavelength_lossy == doctest::Approx(q.wavelength_lossless).epsilon(1e-9));
}

TEST_CASE("regime classification") {
  const auto db = shipped_db();
  const auto& muscle = find_tissue(db, "muscle");

  // deep quasistatic: lambda(100 kHz) = 33 m >> 10 m
  CHECK(classify_regime(evaluate_cole_cole(muscle, 1e5), 1.0) == Regime::mqs);
  // lambda(1 MHz) = 7.0 m sits between 1x and 10x the metre scale
  CHECK(classify_regime(evaluate_cole_cole(muscle, 1e6), 1.0) == Regime::transitional);
  // lambda(447 MHz) = 8.90 cm: at or below a 9 cm body dimension it is EM,
  // a hair above the 8 cm arm diameter it is transitional
  CHECK(classify_regime(evaluate_cole_cole(muscle, 447e6), 0.09) == Regime::em);
  CHECK(classify_regime(evaluate_cole_cole(muscle, 447e6), 0.08) == Regime::transitional);
  CHECK(classify_regime(evaluate_cole_cole(muscle, 1e9), 0.08) == Regime::em);

  // inclusive MQS boundary: lambda exactly 10x the dimension
  PropagationProperties p;
  p.wavelength_lossless = 10.0;
  CHECK(classify_regime(p, 1.0) == Regime::mqs);
  p.wavelength_lossless = 9.999;
  CHECK(classify_regime(p, 1.0) == Regime::transitional);
  p.wavelength_lossless = 1.0;
  CHECK(classify_regime(p, 1.0) == Regime::em);

  CHECK_THROWS_AS(classify_regime(p, 0.0), validation_error);

  RegimeThresholds custom{20.0, 2.0};
  p.wavelength_lossless = 15.0;
  CHECK(classify_regime(p, 1.0, custom) == Regime::transitional);
}

TEST_CASE("relative permeability override") {
  const auto db = shipped_db();
  const auto& muscle = find_tissue(db, "muscle");
  const PropagationProperties base = evaluate_cole_cole(muscle, 10e6);
  const PropagationProperties high = evaluate_cole_cole(muscle, 10e6, 4.0);
  CHECK(high.mu_r == 4.0);
  // lossless wavelength is an eps-only identity; the lossy propagation pair
  // scales with 1/sqrt(mu_r)
  CHECK(high.wavelength_lossless == base.wavelength_lossless);
  CHECK(high.wavelength_lossy ==
        doctest::Approx(base.wavelength_lossy / 2.0).epsilon(1e-12));
  CHECK(high.skin_depth == doctest::Approx(base.skin_depth / 2.0).epsilon(1e-12));
}

TEST_CASE("model invariant validation") {
  ColeColeModel bad;
  bad.tissue_name = "bad";
  bad.eps_inf = 0.5;
  CHECK_THROWS_AS(bad.validate(), validation_error);

  bad.eps_inf = 4.0;
  bad.terms.push_back({-1.0, 1e-9, 0.0});
  CHECK_THROWS_AS(bad.validate(), validation_error);

  bad.terms[0] = {1.0, 0.0, 0.0};
  CHECK_THROWS_AS(bad.validate(), validation_error);

  bad.terms[0] = {1.0, 1e-9, 1.2};
  CHECK_THROWS_AS(bad.validate(), validation_error);

  bad.terms[0] = {1.0, 1e-9, 0.3};
  bad.sigma_ionic = -0.1;
  CHECK_THROWS_AS(bad.validate(), validation_error);
}
