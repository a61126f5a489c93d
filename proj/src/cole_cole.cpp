#include "mqslink/cole_cole.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "mqslink/constants.hpp"
#include "mqslink/errors.hpp"

namespace mqs {

void ColeColeModel::validate() const {
  const std::string who = tissue_name.empty() ? std::string("<unnamed>") : tissue_name;
  if (!(eps_inf >= 1.0)) {
    throw validation_error(who + ": eps_inf must be >= 1, got " + std::to_string(eps_inf));
  }
  if (!(sigma_ionic >= 0.0)) {
    throw validation_error(who + ": sigma_ionic must be >= 0, got " +
                           std::to_string(sigma_ionic));
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    const std::string tag = who + ": term." + std::to_string(i + 1);
    if (!(t.delta_eps >= 0.0)) {
      throw validation_error(tag + ".delta_eps must be >= 0, got " +
                             std::to_string(t.delta_eps));
    }
    if (!(t.tau > 0.0)) {
      throw validation_error(tag + ".tau must be > 0, got " + std::to_string(t.tau));
    }
    if (!(t.alpha >= 0.0 && t.alpha < 1.0)) {
      throw validation_error(tag + ".alpha must be in [0, 1), got " + std::to_string(t.alpha));
    }
  }
}

PropagationProperties propagation_from_eps(double frequency, double eps_real, double eps_imag,
                                           double sigma_ionic, double mu_r) {
  if (!(frequency > 0.0)) {
    throw validation_error("frequency must be > 0, got " + std::to_string(frequency));
  }
  const double omega = 2.0 * kPi * frequency;

  PropagationProperties p;
  p.frequency = frequency;
  p.eps_real = eps_real;
  p.eps_imag = eps_imag;
  p.sigma_eff = sigma_ionic + omega * kEps0 * eps_imag;
  p.mu_r = mu_r;
  p.out_of_band = frequency < kBandMinHz || frequency > kBandMaxHz;

  // The lossless wavelength intentionally ignores mu_r so that
  // lambda * f * sqrt(eps_real) == c holds exactly.
  p.wavelength_lossless = kC0 / (frequency * std::sqrt(eps_real));

  if (p.sigma_eff == 0.0) {
    p.wavelength_lossy = kC0 / (frequency * std::sqrt(eps_real * mu_r));
    p.skin_depth = std::numeric_limits<double>::infinity();
    return p;
  }

  // gamma = j w sqrt(mu0 mu_r eps0 eps') sqrt(1 - j sigma_eff/(w eps0 eps'))
  const std::complex<double> loss_factor =
      std::sqrt(std::complex<double>(1.0, -p.sigma_eff / (omega * kEps0 * eps_real)));
  const std::complex<double> gamma =
      std::complex<double>(0.0, omega * std::sqrt(kMu0 * mu_r * kEps0 * eps_real)) * loss_factor;
  p.wavelength_lossy = 2.0 * kPi / gamma.imag();
  p.skin_depth = 1.0 / gamma.real();
  return p;
}

PropagationProperties evaluate_cole_cole(const ColeColeModel& model, double frequency,
                                         double mu_r) {
  model.validate();
  if (!(frequency > 0.0)) {
    throw validation_error("evaluate_cole_cole: frequency must be > 0, got " +
                           std::to_string(frequency));
  }
  const double omega = 2.0 * kPi * frequency;
  std::complex<double> eps(model.eps_inf, 0.0);
  for (const auto& t : model.terms) {
    const std::complex<double> jwt(0.0, omega * t.tau);
    eps += t.delta_eps / (1.0 + std::pow(jwt, 1.0 - t.alpha));
  }
  return propagation_from_eps(frequency, eps.real(), -eps.imag(), model.sigma_ionic, mu_r);
}

double wavelength(const ColeColeModel& model, double frequency, WavelengthVariant variant) {
  const PropagationProperties p = evaluate_cole_cole(model, frequency);
  return variant == WavelengthVariant::lossless ? p.wavelength_lossless : p.wavelength_lossy;
}

double skin_depth(const ColeColeModel& model, double frequency) {
  return evaluate_cole_cole(model, frequency).skin_depth;
}

Regime classify_regime(const PropagationProperties& props, double body_dimension,
                       const RegimeThresholds& thresholds) {
  if (!(body_dimension > 0.0)) {
    throw validation_error("classify_regime: body_dimension must be > 0, got " +
                           std::to_string(body_dimension));
  }
  const double lambda = props.wavelength_lossless;
  if (lambda >= thresholds.mqs_wavelength_ratio * body_dimension) return Regime::mqs;
  if (lambda <= thresholds.em_wavelength_ratio * body_dimension) return Regime::em;
  return Regime::transitional;
}

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::mqs:
      return "MQS";
    case Regime::transitional:
      return "transitional";
    case Regime::em:
      return "EM";
  }
  return "?";
}

}  // namespace mqs
