#pragma once

#include <optional>

#include "mqslink/cole_cole.hpp"

namespace mqs {

enum class InterpolationDomain {
  linear_frequency,      // eps linear in f (default)
  linear_log_frequency,  // eps linear in log f
};

// Straight-line permittivity between two anchor frequencies -- a deliberately
// crude stand-in for a dispersive model, kept here because databases built
// this way produce wildly inflated low-frequency permittivity (and hence
// bogus sub-metre in-body wavelengths).  Conductivity is not interpolated; it
// comes from a companion Cole-Cole model when present, else sigma_constant.
struct InterpolatedPermittivityModel {
  double eps_low = 1.0;   // relative permittivity at f_low
  double f_low = 10.0;    // Hz
  double eps_high = 1.0;  // relative permittivity at f_high
  double f_high = 1e7;    // Hz
  InterpolationDomain domain = InterpolationDomain::linear_frequency;
  std::optional<ColeColeModel> sigma_companion;
  double sigma_constant = 0.0;  // S/m, used when no companion is set

  void validate() const;
};

// Builds the interpolated model anchored at a Cole-Cole model's own values at
// f_low and f_high, with the same model as the conductivity companion.
InterpolatedPermittivityModel interpolate_cole_cole(const ColeColeModel& model,
                                                    double f_low = 10.0, double f_high = 1e7,
                                                    InterpolationDomain domain =
                                                        InterpolationDomain::linear_frequency);

// Evaluates within [f_low, f_high]; outside raises validation_error.
PropagationProperties evaluate_interpolated(const InterpolatedPermittivityModel& model,
                                            double frequency, double mu_r = 1.0);

}  // namespace mqs
