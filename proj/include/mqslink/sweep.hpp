#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mqslink/csv.hpp"
#include "mqslink/scenario.hpp"
#include "mqslink/svg.hpp"
#include "mqslink/tissue_db.hpp"

namespace mqs {

struct SweepColumn {
  std::string name;  // includes unit, e.g. "gain_vna_50 (dB)"
  bool numeric = true;
  bool plot = false;  // drawn by the SVG renderer
  std::vector<double> values;
  std::vector<std::string> labels;
};

// Ordered sweep output plus provenance; convertible to CSV and SVG.
struct SweepResult {
  std::string title;
  std::string x_name;  // abscissa column name with unit
  bool log_x = false;
  std::vector<double> abscissa;
  std::vector<SweepColumn> columns;
  std::vector<std::pair<std::string, std::string>> provenance;

  // Set for (distance x offset) grids: heatmap layout of the first gain
  // column, values[iy * grid_x.size() + ix].
  std::vector<double> grid_x;
  std::vector<double> grid_y;
  std::vector<double> grid_values;

  // Reference series attached by overlay_reference (co-plotted only).
  std::vector<SvgSeries> overlay_series;
};

std::vector<double> log_grid(double lo, double hi, int points);
std::vector<double> linear_grid(double lo, double hi, int points);

// 20*log10(magnitude); exact zeros map to -infinity (CSV token "-inf").
double to_db(double magnitude);

SweepResult run_sweep_freq(const Scenario& scenario, const TissueDb& db, bool with_body);
SweepResult run_sweep_distance(const Scenario& scenario, const TissueDb& db, bool with_body);
SweepResult run_sweep_offset(const Scenario& scenario, const TissueDb& db, bool with_body);

// Per-frequency dielectric/propagation report (columns per the interpolated
// mode), and the reduced regime-classification report.
SweepResult report_tissue(const Scenario& scenario, const TissueDb& db);
SweepResult report_regime(const Scenario& scenario, const TissueDb& db);

// Two-column reference curve (x, y) with optional "# key: value" comments.
struct ReferenceSeries {
  std::string x_name;
  std::string y_name;
  std::vector<double> x;
  std::vector<double> y;
};

ReferenceSeries load_reference_csv(const std::string& path);

// Attaches a reference curve for co-plotting; warns when the abscissa units
// disagree, and emits reference + difference columns when the abscissas match
// pointwise.  No interpretation of the reference semantics.
void overlay_reference(SweepResult& result, const ReferenceSeries& reference);

CsvTable to_csv(const SweepResult& result);
std::string to_svg(const SweepResult& result);

}  // namespace mqs
