#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "mqslink/interpolated.hpp"
#include "mqslink/link.hpp"
#include "mqslink/loop.hpp"

namespace mqs {

enum class SweepAxis { frequency, distance, offset };
enum class ReportKind { none, tissue, regime };
enum class InterpolatedMode { off, on, both };

// One sweep or report job, parsed from a sectioned key-value file:
//
//   [scenario] name
//   [tx]/[rx]  radius, wire_radius, turns, center (x y z), axis (x y z),
//              inductance (optional measured override)
//   [link]     cases (comma list of termination cases or "all"), z0,
//              low_source_resistance, load_capacitance, mutual (override),
//              rod_mu_r + rod_aspect (magnetic-core coupling trend)
//   [body]     tissue, body_dimension, arm_radius, eddy_model (diffusion|full)
//   [sweep]    axis, min, max, points, spacing (log|linear), frequency,
//              offset_min, offset_max, offset_points, segments
//   [report]   kind (tissue|regime), interpolated (off|on|both),
//              interp_f_low, interp_f_high, interp_domain (linear|log)
//   [output]   csv, svg
//
// `#` starts a comment.  Unknown sections or keys are rejected with the line
// number so typos cannot silently change a run.
struct Scenario {
  std::string name;

  Loop tx;
  Loop rx;
  std::optional<double> l_tx_override;  // H
  std::optional<double> l_rx_override;  // H
  std::optional<double> mutual_override;  // H

  std::vector<TerminationCase> cases{TerminationCase::vna_50};
  TerminationCaseParams params;
  // optional magnetic rod core: multiplies the mutual inductance by the
  // effective-permeability trend factor (both keys required together)
  std::optional<double> rod_mu_r;
  std::optional<double> rod_aspect;

  std::string tissue = "muscle";
  double body_dimension = 1.0;  // m
  double arm_radius = 0.04;     // m
  bool eddy_displacement = false;  // "diffusion" unless eddy_model = full

  SweepAxis axis = SweepAxis::frequency;
  double sweep_min = 1e3;
  double sweep_max = 1e10;
  int points = 400;
  bool log_spacing = true;
  double fixed_frequency = 30e6;  // distance/offset sweeps
  double offset_min = 0.0;
  double offset_max = 0.20;
  int offset_points = 5;
  int segments = 512;

  ReportKind report_kind = ReportKind::none;
  InterpolatedMode interpolated = InterpolatedMode::off;
  double interp_f_low = 10.0;
  double interp_f_high = 1e7;
  InterpolationDomain interp_domain = InterpolationDomain::linear_frequency;

  std::string out_csv;
  std::string out_svg;

  std::string origin;         // file path or stream tag
  std::uint64_t config_hash = 0;  // FNV-1a of the raw file bytes

  void validate() const;
};

Scenario parse_scenario(std::istream& in, const std::string& origin);
Scenario load_scenario(const std::filesystem::path& path);

std::uint64_t fnv1a_hash(std::string_view bytes);

}  // namespace mqs
