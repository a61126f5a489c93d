#include "mqslink/interpolated.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "mqslink/errors.hpp"

namespace mqs {

void InterpolatedPermittivityModel::validate() const {
  if (!(f_low > 0.0) || !(f_low < f_high)) {
    throw validation_error("interpolated model: requires 0 < f_low < f_high");
  }
  if (!(eps_low >= 1.0) || !(eps_high >= 1.0)) {
    throw validation_error("interpolated model: permittivities must be >= 1");
  }
  if (!(sigma_constant >= 0.0)) {
    throw validation_error("interpolated model: sigma_constant must be >= 0");
  }
  if (sigma_companion) sigma_companion->validate();
}

InterpolatedPermittivityModel interpolate_cole_cole(const ColeColeModel& model, double f_low,
                                                    double f_high, InterpolationDomain domain) {
  InterpolatedPermittivityModel m;
  m.f_low = f_low;
  m.f_high = f_high;
  m.eps_low = evaluate_cole_cole(model, f_low).eps_real;
  m.eps_high = evaluate_cole_cole(model, f_high).eps_real;
  m.domain = domain;
  m.sigma_companion = model;
  m.validate();
  return m;
}

PropagationProperties evaluate_interpolated(const InterpolatedPermittivityModel& model,
                                            double frequency, double mu_r) {
  model.validate();
  // grids pin their endpoints in floating point, so tolerate a few ulps of
  // overshoot at the domain ends (the fraction is clamped below)
  const double grace = 1e-12;
  if (!(frequency >= model.f_low * (1.0 - grace) &&
        frequency <= model.f_high * (1.0 + grace))) {
    char message[160];
    std::snprintf(message, sizeof message,
                  "evaluate_interpolated: frequency %.17g Hz outside the interpolation domain "
                  "[%.9g, %.9g] Hz",
                  frequency, model.f_low, model.f_high);
    throw validation_error(message);
  }

  double fraction;
  if (model.domain == InterpolationDomain::linear_frequency) {
    fraction = (frequency - model.f_low) / (model.f_high - model.f_low);
  } else {
    fraction = std::log(frequency / model.f_low) / std::log(model.f_high / model.f_low);
  }
  fraction = std::clamp(fraction, 0.0, 1.0);
  // two-product form: endpoints reproduce the anchors exactly
  const double eps = model.eps_low * (1.0 - fraction) + model.eps_high * fraction;

  double sigma_ionic = model.sigma_constant;
  double eps_imag = 0.0;
  if (model.sigma_companion) {
    const PropagationProperties companion = evaluate_cole_cole(*model.sigma_companion, frequency);
    sigma_ionic = model.sigma_companion->sigma_ionic;
    eps_imag = companion.eps_imag;
  }
  return propagation_from_eps(frequency, eps, eps_imag, sigma_ionic, mu_r);
}

}  // namespace mqs
