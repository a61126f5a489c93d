// mqslink: magneto-quasistatic body-channel link calculator.
//
// Subcommands: sweep-freq, sweep-distance, sweep-offset, tissue, regime,
// coil, version.  Exit codes: 0 ok, 1 validation error, 2 numeric failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "mqslink/errors.hpp"
#include "mqslink/inductance.hpp"
#include "mqslink/link.hpp"
#include "mqslink/scenario.hpp"
#include "mqslink/sweep.hpp"
#include "mqslink/tissue_db.hpp"
#include "mqslink/version.hpp"

namespace {

struct CommonOptions {
  std::string scenario_path;
  std::string tissue_db_path;
  std::string out_path;
  std::string format = "both";  // csv | svg | both
  bool body = false;
  bool interpolated = false;
  std::optional<int> points;
  std::optional<double> fmin;
  std::optional<double> fmax;
  std::string overlay_path;
};

void add_common_flags(CLI::App* cmd, CommonOptions* opts, bool scenario_required) {
  auto* scenario = cmd->add_option("--scenario", opts->scenario_path, "Scenario file path");
  if (scenario_required) scenario->required();
  cmd->add_option("--tissue-db", opts->tissue_db_path,
                  "Tissue database path (default: $MQS_TISSUE_DB or data/tissues.txt)");
  cmd->add_option("--out", opts->out_path, "Output path (base name for --format both)");
  cmd->add_option("--format", opts->format, "Output format: csv, svg or both")
      ->check(CLI::IsMember({"csv", "svg", "both"}));
  cmd->add_flag("--body", opts->body,
                "Compose |gain| with the eddy transmission of the tissue cylinder");
  cmd->add_flag("--interpolated", opts->interpolated,
                "Use the straight-line permittivity model instead of Cole-Cole");
  cmd->add_option("--points", opts->points, "Override sweep point count");
  cmd->add_option("--fmin", opts->fmin, "Override sweep lower bound (Hz)");
  cmd->add_option("--fmax", opts->fmax, "Override sweep upper bound (Hz)");
}

mqs::TissueDb load_db(const CommonOptions& opts) {
  if (!opts.tissue_db_path.empty()) return mqs::load_tissue_db(opts.tissue_db_path);
  return mqs::load_tissue_db(mqs::default_tissue_db_path());
}

void apply_overrides(mqs::Scenario& sc, const CommonOptions& opts) {
  if (opts.points) sc.points = *opts.points;
  const bool frequency_band =
      sc.axis == mqs::SweepAxis::frequency || sc.report_kind != mqs::ReportKind::none;
  if (opts.fmin) {
    if (frequency_band) {
      sc.sweep_min = *opts.fmin;
    } else {
      sc.fixed_frequency = *opts.fmin;  // distance/offset sweeps have one frequency
    }
  }
  if (opts.fmax && frequency_band) sc.sweep_max = *opts.fmax;
  if (opts.interpolated && sc.interpolated == mqs::InterpolatedMode::off) {
    sc.interpolated = mqs::InterpolatedMode::on;
  }
  sc.validate();
}

void write_outputs(const mqs::SweepResult& result, const mqs::Scenario& sc,
                   const CommonOptions& opts) {
  std::string csv_path = sc.out_csv;
  std::string svg_path = sc.out_svg;
  if (!opts.out_path.empty()) {
    if (opts.format == "csv") {
      csv_path = opts.out_path;
    } else if (opts.format == "svg") {
      svg_path = opts.out_path;
    } else {
      csv_path = opts.out_path + ".csv";
      svg_path = opts.out_path + ".svg";
    }
  }
  auto ensure_parent = [](const std::string& p) {
    const auto parent = std::filesystem::path(p).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
  };
  if (opts.format != "svg") {
    ensure_parent(csv_path);
    mqs::save_csv(mqs::to_csv(result), csv_path);
    std::cout << "wrote " << csv_path << "\n";
  }
  if (opts.format != "csv") {
    ensure_parent(svg_path);
    std::ofstream out(svg_path, std::ios::binary);
    if (!out) throw mqs::validation_error("cannot open '" + svg_path + "' for writing");
    out << mqs::to_svg(result);
    std::cout << "wrote " << svg_path << "\n";
  }
}

void maybe_overlay(mqs::SweepResult& result, const CommonOptions& opts) {
  if (opts.overlay_path.empty()) return;
  mqs::overlay_reference(result, mqs::load_reference_csv(opts.overlay_path));
}

mqs::Scenario scenario_or_defaults(const CommonOptions& opts, mqs::ReportKind kind,
                                   const std::string& tissue, double body_dimension) {
  if (!opts.scenario_path.empty()) {
    mqs::Scenario sc = mqs::load_scenario(opts.scenario_path);
    if (sc.report_kind == mqs::ReportKind::none) sc.report_kind = kind;
    return sc;
  }
  mqs::Scenario sc;
  sc.name = (kind == mqs::ReportKind::tissue ? "tissue_" : "regime_") + tissue;
  sc.report_kind = kind;
  sc.tissue = tissue;
  sc.body_dimension = body_dimension;
  sc.out_csv = sc.name + ".csv";
  sc.out_svg = sc.name + ".svg";
  sc.origin = "<defaults>";
  // no scenario file to hash; hash the effective settings instead
  sc.config_hash = mqs::fnv1a_hash(sc.name + "|" + std::to_string(body_dimension) + "|" +
                                   std::to_string(opts.points.value_or(0)) + "|" +
                                   std::to_string(opts.fmin.value_or(0)) + "|" +
                                   std::to_string(opts.fmax.value_or(0)) + "|" +
                                   (opts.interpolated ? "interp" : "cole"));
  return sc;
}

int run(int argc, char** argv) {
  CLI::App app{"Magneto-quasistatic body-channel link calculator"};
  app.require_subcommand(1);

  CommonOptions sweep_freq_opts;
  auto* sweep_freq = app.add_subcommand("sweep-freq", "Frequency sweep of the link transfer");
  add_common_flags(sweep_freq, &sweep_freq_opts, true);

  CommonOptions sweep_dist_opts;
  auto* sweep_dist =
      app.add_subcommand("sweep-distance", "Gain versus coil separation at fixed frequency");
  add_common_flags(sweep_dist, &sweep_dist_opts, true);
  sweep_dist->add_option("--overlay", sweep_dist_opts.overlay_path,
                         "Two-column reference CSV to co-plot");

  CommonOptions sweep_off_opts;
  auto* sweep_off =
      app.add_subcommand("sweep-offset", "Gain over a (separation x lateral offset) grid");
  add_common_flags(sweep_off, &sweep_off_opts, true);

  CommonOptions tissue_opts;
  std::string tissue_name = "muscle";
  double tissue_dimension = 1.0;
  auto* tissue_cmd =
      app.add_subcommand("tissue", "Dielectric and propagation report for one tissue");
  add_common_flags(tissue_cmd, &tissue_opts, false);
  tissue_cmd->add_option("--tissue", tissue_name, "Tissue name in the database");
  tissue_cmd->add_option("--body-dimension", tissue_dimension,
                         "Reference body dimension for regime labels (m)");

  CommonOptions regime_opts;
  std::string regime_tissue = "muscle";
  double regime_dimension = 1.0;
  auto* regime_cmd =
      app.add_subcommand("regime", "Wavelength-vs-body-dimension regime classification");
  add_common_flags(regime_cmd, &regime_opts, false);
  regime_cmd->add_option("--tissue", regime_tissue, "Tissue name in the database");
  regime_cmd->add_option("--body-dimension", regime_dimension, "Body dimension (m)");

  CommonOptions coil_opts;
  auto* coil_cmd = app.add_subcommand("coil", "Inductance summary for a scenario's coil pair");
  add_common_flags(coil_cmd, &coil_opts, true);
  double coil_mu_r = 1.0;
  double coil_rod_aspect = 0.0;
  coil_cmd->add_option("--mu-r", coil_mu_r, "Rod-core relative permeability");
  coil_cmd->add_option("--rod-aspect", coil_rod_aspect, "Rod length-to-diameter ratio");

  auto* version_cmd = app.add_subcommand("version", "Print the tool version");

  CLI11_PARSE(app, argc, argv);

  if (version_cmd->parsed()) {
    std::cout << "mqslink " << mqs::kVersion << "\n";
    return 0;
  }

  if (sweep_freq->parsed()) {
    mqs::Scenario sc = mqs::load_scenario(sweep_freq_opts.scenario_path);
    apply_overrides(sc, sweep_freq_opts);
    const mqs::TissueDb db = load_db(sweep_freq_opts);
    mqs::SweepResult result = mqs::run_sweep_freq(sc, db, sweep_freq_opts.body);
    write_outputs(result, sc, sweep_freq_opts);
    return 0;
  }
  if (sweep_dist->parsed()) {
    mqs::Scenario sc = mqs::load_scenario(sweep_dist_opts.scenario_path);
    apply_overrides(sc, sweep_dist_opts);
    const mqs::TissueDb db = load_db(sweep_dist_opts);
    mqs::SweepResult result = mqs::run_sweep_distance(sc, db, sweep_dist_opts.body);
    maybe_overlay(result, sweep_dist_opts);
    write_outputs(result, sc, sweep_dist_opts);
    return 0;
  }
  if (sweep_off->parsed()) {
    mqs::Scenario sc = mqs::load_scenario(sweep_off_opts.scenario_path);
    apply_overrides(sc, sweep_off_opts);
    const mqs::TissueDb db = load_db(sweep_off_opts);
    mqs::SweepResult result = mqs::run_sweep_offset(sc, db, sweep_off_opts.body);
    write_outputs(result, sc, sweep_off_opts);
    return 0;
  }
  if (tissue_cmd->parsed()) {
    mqs::Scenario sc =
        scenario_or_defaults(tissue_opts, mqs::ReportKind::tissue, tissue_name, tissue_dimension);
    apply_overrides(sc, tissue_opts);
    const mqs::TissueDb db = load_db(tissue_opts);
    mqs::SweepResult result = mqs::report_tissue(sc, db);
    write_outputs(result, sc, tissue_opts);
    return 0;
  }
  if (regime_cmd->parsed()) {
    mqs::Scenario sc =
        scenario_or_defaults(regime_opts, mqs::ReportKind::regime, regime_tissue, regime_dimension);
    apply_overrides(sc, regime_opts);
    const mqs::TissueDb db = load_db(regime_opts);
    mqs::SweepResult result = mqs::report_regime(sc, db);
    write_outputs(result, sc, regime_opts);
    return 0;
  }
  if (coil_cmd->parsed()) {
    const mqs::Scenario sc = mqs::load_scenario(coil_opts.scenario_path);
    const mqs::CoilPair pair{sc.tx, sc.rx};
    const double l_tx = sc.l_tx_override ? *sc.l_tx_override : mqs::self_inductance(sc.tx);
    const double l_rx = sc.l_rx_override ? *sc.l_rx_override : mqs::self_inductance(sc.rx);
    const double m = sc.mutual_override ? *sc.mutual_override
                                        : mqs::mutual_inductance(pair, sc.segments);
    std::printf("l_tx       %.6g H (closed form %.6g H)\n", l_tx, mqs::self_inductance(sc.tx));
    std::printf("l_rx       %.6g H (closed form %.6g H)\n", l_rx, mqs::self_inductance(sc.rx));
    std::printf("mutual     %.6g H\n", m);
    std::printf("coupling k %.6g\n", m / std::sqrt(l_tx * l_rx));
    std::printf("separation %.6g m, lateral offset %.6g m\n", pair.separation(),
                pair.lateral_offset());
    if (coil_rod_aspect > 0.0) {
      std::printf("rod-core factor (mu_r %.6g, aspect %.6g): %.6g\n", coil_mu_r, coil_rod_aspect,
                  mqs::rod_core_scaling(coil_mu_r, coil_rod_aspect));
    }
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mqs::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const mqs::numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
