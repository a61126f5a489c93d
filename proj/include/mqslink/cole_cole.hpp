#pragma once

#include <string>
#include <vector>

namespace mqs {

// One dispersion term of a Cole-Cole model: delta_eps / (1 + (j w tau)^(1-alpha)).
struct ColeColeTerm {
  double delta_eps = 0.0;  // dimensionless
  double tau = 1.0;        // seconds
  double alpha = 0.0;      // dimensionless, in [0, 1)
};

// Multi-term Cole-Cole dielectric dispersion parameters for one tissue:
//   eps(w) = eps_inf + sum_n delta_eps_n / (1 + (j w tau_n)^(1-alpha_n))
//            + sigma_ionic / (j w eps0)
struct ColeColeModel {
  std::string tissue_name;
  double eps_inf = 1.0;
  std::vector<ColeColeTerm> terms;
  double sigma_ionic = 0.0;  // S/m

  // Throws validation_error naming the offending field.
  void validate() const;
};

// Complex permittivity decomposed at one frequency, plus derived propagation
// quantities.  Convention: eps_real is the real relative permittivity,
// eps_imag the dielectric-loss part only, and sigma_eff folds all loss
// (ionic + dielectric) into one effective conductivity.
struct PropagationProperties {
  double frequency = 0.0;            // Hz
  double eps_real = 1.0;             // dimensionless
  double eps_imag = 0.0;             // dimensionless, >= 0
  double sigma_eff = 0.0;            // S/m
  double wavelength_lossless = 0.0;  // c / (f sqrt(eps_real))
  double wavelength_lossy = 0.0;     // 2 pi / beta of the lossy gamma
  double skin_depth = 0.0;           // 1 / alpha of the lossy gamma; +inf when lossless
  double mu_r = 1.0;                 // body tissues are magnetically transparent
  bool out_of_band = false;          // outside the supported 1 kHz .. 10 GHz band
};

// Supported evaluation band.  Out-of-band evaluation is permitted (the model
// is analytic everywhere); the result carries out_of_band = true so callers
// can warn.
inline constexpr double kBandMinHz = 1e3;
inline constexpr double kBandMaxHz = 1e10;

// Derives all propagation quantities from a permittivity decomposition.
PropagationProperties propagation_from_eps(double frequency, double eps_real, double eps_imag,
                                           double sigma_ionic, double mu_r = 1.0);

PropagationProperties evaluate_cole_cole(const ColeColeModel& model, double frequency,
                                         double mu_r = 1.0);

enum class WavelengthVariant { lossless, lossy };

double wavelength(const ColeColeModel& model, double frequency, WavelengthVariant variant);

// 1/alpha of the lossy propagation constant; +infinity for sigma_eff = 0.
double skin_depth(const ColeColeModel& model, double frequency);

// Quasistatic / transitional / electromagnetic regime of a wavelength
// relative to a body dimension.
enum class Regime { mqs, transitional, em };

struct RegimeThresholds {
  double mqs_wavelength_ratio = 10.0;  // MQS if lambda >= ratio * dimension (inclusive)
  double em_wavelength_ratio = 1.0;    // EM if lambda <= ratio * dimension (inclusive)
};

Regime classify_regime(const PropagationProperties& props, double body_dimension,
                       const RegimeThresholds& thresholds = {});

const char* to_string(Regime regime);

}  // namespace mqs
