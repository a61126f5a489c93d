#include "mqslink/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <complex>
#include <sstream>

#include "mqslink/constants.hpp"
#include "mqslink/eddy.hpp"
#include "mqslink/errors.hpp"
#include "mqslink/inductance.hpp"
#include "mqslink/parallel.hpp"
#include "mqslink/version.hpp"
#include "mqslink/warnings.hpp"

namespace mqs {
namespace {

std::string hash_hex(std::uint64_t hash) {
  char buffer[20];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

std::vector<std::pair<std::string, std::string>> base_provenance(const Scenario& sc) {
  return {{"tool", std::string("mqslink ") + kVersion},
          {"scenario", sc.name},
          {"config-hash", hash_hex(sc.config_hash)}};
}

struct LinkSetup {
  double l_tx = 0.0;
  double l_rx = 0.0;
  double mutual = 0.0;
};

// Magnetic-core coupling multiplier; identity without the rod keys.
double rod_factor(const Scenario& sc) {
  if (!sc.rod_mu_r) return 1.0;
  return rod_core_scaling(*sc.rod_mu_r, *sc.rod_aspect);
}

LinkSetup link_setup(const Scenario& sc) {
  LinkSetup ls;
  ls.l_tx = sc.l_tx_override ? *sc.l_tx_override : self_inductance(sc.tx);
  ls.l_rx = sc.l_rx_override ? *sc.l_rx_override : self_inductance(sc.rx);
  if (sc.mutual_override) {
    ls.mutual = *sc.mutual_override;
  } else {
    CoilPair pair{sc.tx, sc.rx};
    ls.mutual = mutual_inductance(pair, sc.segments);
  }
  ls.mutual *= rod_factor(sc);
  return ls;
}

void note_rod_factor(const Scenario& sc, SweepResult& result) {
  if (sc.rod_mu_r) {
    result.provenance.emplace_back("rod-core-factor", format_double(rod_factor(sc)));
  }
}

LinkModel case_link(const LinkSetup& ls, TerminationCase c, const TerminationCaseParams& params) {
  LinkModel base;
  base.l_tx = ls.l_tx;
  base.l_rx = ls.l_rx;
  base.mutual = ls.mutual;
  return specialize(base, c, params);
}

bool matched_resistive(const LinkModel& link) {
  return link.source.is_resistive() && link.load.is_resistive() &&
         std::abs(link.source.resistance - link.load.resistance) <=
             1e-9 * std::max(link.source.resistance, link.load.resistance);
}

// Eddy transmission factors for the gain composition (`--body`).
std::vector<double> body_transmission(const Scenario& sc, const TissueDb& db,
                                      const std::vector<double>& freqs) {
  CylinderModel cylinder;
  cylinder.radius = sc.arm_radius;
  cylinder.tissue = find_tissue(db, sc.tissue);
  cylinder.include_displacement = sc.eddy_displacement;
  std::vector<double> t;
  t.reserve(freqs.size());
  for (const auto& r : attenuation_sweep(cylinder, freqs, 16)) {
    t.push_back(r.transmission_on_axis);
  }
  return t;
}

void warn_out_of_band(const std::vector<double>& freqs) {
  const auto out = std::find_if(freqs.begin(), freqs.end(), [](double f) {
    return f < kBandMinHz || f > kBandMaxHz;
  });
  if (out != freqs.end()) {
    warn("frequency " + std::to_string(*out) +
         " Hz outside the supported 1 kHz - 10 GHz tissue band; dielectric values are "
         "analytic extrapolations");
  }
}

std::string case_column(const char* quantity, TerminationCase c, const char* unit) {
  return std::string(quantity) + "_" + to_string(c) + " (" + unit + ")";
}

// Extracts the trailing "(unit)" of a column name, if any.
std::string column_unit(const std::string& name) {
  const auto open = name.rfind('(');
  const auto close = name.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open) return {};
  return name.substr(open + 1, close - open - 1);
}

}  // namespace

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(lo < hi) || points < 2) {
    throw validation_error("log_grid: requires 0 < lo < hi and points >= 2");
  }
  std::vector<double> g(points);
  const double step = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) g[i] = lo * std::exp(step * i);
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (!(lo < hi) || points < 2) {
    throw validation_error("linear_grid: requires lo < hi and points >= 2");
  }
  std::vector<double> g(points);
  const double step = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) g[i] = lo + step * i;
  g.back() = hi;
  return g;
}

double to_db(double magnitude) {
  if (magnitude == 0.0) return -std::numeric_limits<double>::infinity();
  return 20.0 * std::log10(magnitude);
}

SweepResult run_sweep_freq(const Scenario& sc, const TissueDb& db, bool with_body) {
  sc.validate();
  if (sc.axis != SweepAxis::frequency) {
    throw validation_error(sc.origin + ": not a frequency-axis scenario");
  }
  const LinkSetup ls = link_setup(sc);
  const std::vector<double> freqs =
      sc.log_spacing ? log_grid(sc.sweep_min, sc.sweep_max, sc.points)
                     : linear_grid(sc.sweep_min, sc.sweep_max, sc.points);

  SweepResult result;
  result.title = sc.name;
  result.x_name = "frequency (Hz)";
  result.log_x = sc.log_spacing;
  result.abscissa = freqs;
  result.provenance = base_provenance(sc);
  result.provenance.emplace_back("l_tx (H)", format_double(ls.l_tx));
  result.provenance.emplace_back("l_rx (H)", format_double(ls.l_rx));
  result.provenance.emplace_back("mutual (H)", format_double(ls.mutual));
  note_rod_factor(sc, result);

  std::vector<double> transmission;
  if (with_body) {
    warn_out_of_band(freqs);
    transmission = body_transmission(sc, db, freqs);
    result.provenance.emplace_back("body-composition",
                                   "first-order |gain| x eddy transmission, tissue " + sc.tissue +
                                       std::string(sc.eddy_displacement
                                                       ? ", displacement-current gamma"
                                                       : ", conduction-only gamma"));
  }

  for (TerminationCase c : sc.cases) {
    const LinkModel link = case_link(ls, c, sc.params);
    const bool with_s21 = matched_resistive(link);
    SweepColumn gain{case_column("gain", c, "dB"), true, true, {}, {}};
    SweepColumn phase{case_column("phase", c, "deg"), true, false, {}, {}};
    SweepColumn s21_col{case_column("s21", c, "dB"), true, false, {}, {}};
    for (std::size_t i = 0; i < freqs.size(); ++i) {
      const std::complex<double> g = voltage_gain(link, freqs[i]);
      double magnitude = std::abs(g);
      if (with_body) magnitude *= transmission[i];
      gain.values.push_back(to_db(magnitude));
      phase.values.push_back(std::arg(g) * 180.0 / kPi);
      if (with_s21) s21_col.values.push_back(to_db(2.0 * magnitude));
    }
    result.columns.push_back(std::move(gain));
    result.columns.push_back(std::move(phase));
    if (with_s21) result.columns.push_back(std::move(s21_col));
  }

  if (with_body) {
    SweepColumn t{"eddy_transmission (1)", true, false, transmission, {}};
    result.columns.push_back(std::move(t));
  }
  return result;
}

namespace {

SweepResult distance_sweep_core(const Scenario& sc, const TissueDb& db, bool with_body,
                                const std::vector<double>& distances) {
  const double l_tx = sc.l_tx_override ? *sc.l_tx_override : self_inductance(sc.tx);
  const double l_rx = sc.l_rx_override ? *sc.l_rx_override : self_inductance(sc.rx);

  SweepResult result;
  result.title = sc.name;
  result.x_name = "distance (m)";
  result.log_x = sc.log_spacing;
  result.abscissa = distances;
  result.provenance = base_provenance(sc);
  result.provenance.emplace_back("frequency (Hz)", format_double(sc.fixed_frequency));

  double transmission = 1.0;
  if (with_body) {
    CylinderModel cylinder;
    cylinder.radius = sc.arm_radius;
    cylinder.tissue = find_tissue(db, sc.tissue);
    cylinder.include_displacement = sc.eddy_displacement;
    transmission = field_profile(cylinder, sc.fixed_frequency, 16).transmission_on_axis;
    result.provenance.emplace_back("body-composition",
                                   "first-order |gain| x eddy transmission " +
                                       format_double(transmission));
  }

  const double rod = rod_factor(sc);
  note_rod_factor(sc, result);
  SweepColumn mutual_col{"mutual (H)", true, false, {}, {}};
  std::vector<double> mutuals(distances.size());
  parallel_for_index(distances.size(), [&](std::size_t i) {
    CoilPair pair{sc.tx, sc.rx};
    pair.rx.center = sc.tx.center + distances[i] * sc.tx.axis;
    pair.rx.axis = sc.tx.axis;
    mutuals[i] = rod * mutual_inductance(pair, sc.segments);
  });
  mutual_col.values = mutuals;

  for (TerminationCase c : sc.cases) {
    SweepColumn gain{case_column("gain", c, "dB"), true, true, {}, {}};
    for (std::size_t i = 0; i < distances.size(); ++i) {
      LinkModel link;
      link.l_tx = l_tx;
      link.l_rx = l_rx;
      link.mutual = mutuals[i];
      link = specialize(link, c, sc.params);
      const double magnitude = std::abs(voltage_gain(link, sc.fixed_frequency)) * transmission;
      gain.values.push_back(to_db(magnitude));
    }
    result.columns.push_back(std::move(gain));
  }
  result.columns.push_back(std::move(mutual_col));
  return result;
}

}  // namespace

SweepResult run_sweep_distance(const Scenario& sc, const TissueDb& db, bool with_body) {
  sc.validate();
  if (sc.axis != SweepAxis::distance) {
    throw validation_error(sc.origin + ": not a distance-axis scenario");
  }
  const std::vector<double> distances =
      sc.log_spacing ? log_grid(sc.sweep_min, sc.sweep_max, sc.points)
                     : linear_grid(sc.sweep_min, sc.sweep_max, sc.points);
  return distance_sweep_core(sc, db, with_body, distances);
}

SweepResult run_sweep_offset(const Scenario& sc, const TissueDb& db, bool with_body) {
  sc.validate();
  if (sc.axis != SweepAxis::offset) {
    throw validation_error(sc.origin + ": not an offset-axis scenario");
  }
  const double l_tx = sc.l_tx_override ? *sc.l_tx_override : self_inductance(sc.tx);
  const double l_rx = sc.l_rx_override ? *sc.l_rx_override : self_inductance(sc.rx);
  const std::vector<double> distances =
      sc.log_spacing ? log_grid(sc.sweep_min, sc.sweep_max, sc.points)
                     : linear_grid(sc.sweep_min, sc.sweep_max, sc.points);
  const std::vector<double> offsets = linear_grid(sc.offset_min, sc.offset_max, sc.offset_points);

  SweepResult result;
  result.title = sc.name;
  result.x_name = "distance (m)";
  result.log_x = false;
  result.provenance = base_provenance(sc);
  result.provenance.emplace_back("frequency (Hz)", format_double(sc.fixed_frequency));

  double transmission = 1.0;
  if (with_body) {
    CylinderModel cylinder;
    cylinder.radius = sc.arm_radius;
    cylinder.tissue = find_tissue(db, sc.tissue);
    cylinder.include_displacement = sc.eddy_displacement;
    transmission = field_profile(cylinder, sc.fixed_frequency, 16).transmission_on_axis;
    result.provenance.emplace_back("body-composition",
                                   "first-order |gain| x eddy transmission " +
                                       format_double(transmission));
  }

  const Eigen::Vector3d lateral = sc.tx.plane_basis().first;
  const double rod = rod_factor(sc);
  note_rod_factor(sc, result);
  SweepColumn offset_col{"offset (m)", true, false, {}, {}};
  SweepColumn mutual_col{"mutual (H)", true, false, {}, {}};
  std::vector<SweepColumn> gain_cols;
  for (TerminationCase c : sc.cases) {
    gain_cols.push_back({case_column("gain", c, "dB"), true, false, {}, {}});
  }

  result.grid_x = distances;
  result.grid_y = offsets;
  result.grid_values.assign(distances.size() * offsets.size(),
                            std::numeric_limits<double>::quiet_NaN());

  // the quadrature dominates the cost; evaluate the grid cells in parallel,
  // each writing only its own slot, then assemble columns serially
  const std::size_t n_cells = distances.size() * offsets.size();
  std::vector<double> cell_mutual(n_cells);
  std::vector<QuadratureReport> cell_report(n_cells);
  parallel_for_index(n_cells, [&](std::size_t cell) {
    const std::size_t ix = cell / offsets.size();
    const std::size_t iy = cell % offsets.size();
    CoilPair pair{sc.tx, sc.rx};
    pair.rx.center = sc.tx.center + distances[ix] * sc.tx.axis + offsets[iy] * lateral;
    pair.rx.axis = sc.tx.axis;
    cell_mutual[cell] = rod * mutual_neumann(pair, sc.segments, &cell_report[cell]);
  });

  double worst_rel_change = 0.0;
  for (std::size_t cell = 0; cell < n_cells; ++cell) {
    const std::size_t ix = cell / offsets.size();
    const std::size_t iy = cell % offsets.size();
    const double d = distances[ix];
    const double off = offsets[iy];
    const double m = cell_mutual[cell];
    worst_rel_change = std::max(worst_rel_change, cell_report[cell].rel_change);
    if (!cell_report[cell].converged) {
      warn("offset sweep: quadrature unconverged at d=" + std::to_string(d) +
           " m, offset=" + std::to_string(off) + " m; increase segments");
    }

    result.abscissa.push_back(d);
    offset_col.values.push_back(off);
    mutual_col.values.push_back(m);
    for (std::size_t k = 0; k < sc.cases.size(); ++k) {
      LinkModel link;
      link.l_tx = l_tx;
      link.l_rx = l_rx;
      link.mutual = m;
      link = specialize(link, sc.cases[k], sc.params);
      const double magnitude =
          std::abs(voltage_gain(link, sc.fixed_frequency)) * transmission;
      gain_cols[k].values.push_back(to_db(magnitude));
      if (k == 0) result.grid_values[iy * distances.size() + ix] = to_db(magnitude);
    }
  }
  result.provenance.emplace_back("neumann-max-rel-change", format_double(worst_rel_change));

  result.columns.push_back(std::move(offset_col));
  for (auto& col : gain_cols) result.columns.push_back(std::move(col));
  result.columns.push_back(std::move(mutual_col));
  return result;
}

namespace {

void append_dielectric_columns(SweepResult& result, const std::vector<double>& freqs,
                               const std::function<PropagationProperties(double)>& eval,
                               double body_dimension, const std::string& prefix) {
  SweepColumn eps{prefix + "eps_real (1)", true, false, {}, {}};
  SweepColumn eps_im{prefix + "eps_imag (1)", true, false, {}, {}};
  SweepColumn sigma{prefix + "sigma_eff (S/m)", true, false, {}, {}};
  SweepColumn lam0{prefix + "wavelength_lossless (m)", true, true, {}, {}};
  SweepColumn lam{prefix + "wavelength_lossy (m)", true, false, {}, {}};
  SweepColumn depth{prefix + "skin_depth (m)", true, false, {}, {}};
  SweepColumn regime{prefix + "regime", false, false, {}, {}};
  for (double f : freqs) {
    const PropagationProperties p = eval(f);
    eps.values.push_back(p.eps_real);
    eps_im.values.push_back(p.eps_imag);
    sigma.values.push_back(p.sigma_eff);
    lam0.values.push_back(p.wavelength_lossless);
    lam.values.push_back(p.wavelength_lossy);
    depth.values.push_back(p.skin_depth);
    regime.labels.push_back(to_string(classify_regime(p, body_dimension)));
  }
  result.columns.push_back(std::move(eps));
  result.columns.push_back(std::move(eps_im));
  result.columns.push_back(std::move(sigma));
  result.columns.push_back(std::move(lam0));
  result.columns.push_back(std::move(lam));
  result.columns.push_back(std::move(depth));
  result.columns.push_back(std::move(regime));
}

}  // namespace

SweepResult report_tissue(const Scenario& sc, const TissueDb& db) {
  sc.validate();
  const ColeColeModel& model = find_tissue(db, sc.tissue);
  const std::vector<double> freqs =
      sc.log_spacing ? log_grid(sc.sweep_min, sc.sweep_max, sc.points)
                     : linear_grid(sc.sweep_min, sc.sweep_max, sc.points);
  warn_out_of_band(freqs);

  SweepResult result;
  result.title = sc.name.empty() ? ("tissue " + sc.tissue) : sc.name;
  result.x_name = "frequency (Hz)";
  result.log_x = sc.log_spacing;
  result.abscissa = freqs;
  result.provenance = base_provenance(sc);
  result.provenance.emplace_back("tissue", sc.tissue);
  result.provenance.emplace_back("body_dimension (m)", format_double(sc.body_dimension));

  const auto cole_eval = [&](double f) { return evaluate_cole_cole(model, f); };
  if (sc.interpolated != InterpolatedMode::on) {
    append_dielectric_columns(result, freqs, cole_eval, sc.body_dimension, "");
  }
  if (sc.interpolated != InterpolatedMode::off) {
    const InterpolatedPermittivityModel interp =
        interpolate_cole_cole(model, sc.interp_f_low, sc.interp_f_high, sc.interp_domain);
    const auto interp_eval = [&, interp](double f) { return evaluate_interpolated(interp, f); };
    const std::string prefix = sc.interpolated == InterpolatedMode::both ? "interp_" : "";
    append_dielectric_columns(result, freqs, interp_eval, sc.body_dimension, prefix);
    result.provenance.emplace_back(
        "interpolated",
        "anchors " + format_double(sc.interp_f_low) + " Hz / " +
            format_double(sc.interp_f_high) + " Hz, " +
            (sc.interp_domain == InterpolationDomain::linear_frequency ? "linear-in-frequency"
                                                                       : "linear-in-log-frequency"));
  }
  return result;
}

SweepResult report_regime(const Scenario& sc, const TissueDb& db) {
  sc.validate();
  const ColeColeModel& model = find_tissue(db, sc.tissue);
  const std::vector<double> freqs =
      sc.log_spacing ? log_grid(sc.sweep_min, sc.sweep_max, sc.points)
                     : linear_grid(sc.sweep_min, sc.sweep_max, sc.points);
  warn_out_of_band(freqs);

  SweepResult result;
  result.title = sc.name.empty() ? ("regime " + sc.tissue) : sc.name;
  result.x_name = "frequency (Hz)";
  result.log_x = sc.log_spacing;
  result.abscissa = freqs;
  result.provenance = base_provenance(sc);
  result.provenance.emplace_back("tissue", sc.tissue);
  result.provenance.emplace_back("body_dimension (m)", format_double(sc.body_dimension));

  const bool interp_mode = sc.interpolated != InterpolatedMode::off;
  std::optional<InterpolatedPermittivityModel> interp;
  if (interp_mode) {
    interp = interpolate_cole_cole(model, sc.interp_f_low, sc.interp_f_high, sc.interp_domain);
  }

  SweepColumn lam{"wavelength_lossless (m)", true, true, {}, {}};
  SweepColumn ratio{"wavelength_over_dimension (1)", true, false, {}, {}};
  SweepColumn regime{"regime", false, false, {}, {}};
  for (double f : freqs) {
    const PropagationProperties p =
        interp_mode ? evaluate_interpolated(*interp, f) : evaluate_cole_cole(model, f);
    lam.values.push_back(p.wavelength_lossless);
    ratio.values.push_back(p.wavelength_lossless / sc.body_dimension);
    regime.labels.push_back(to_string(classify_regime(p, sc.body_dimension)));
  }
  result.columns.push_back(std::move(lam));
  result.columns.push_back(std::move(ratio));
  result.columns.push_back(std::move(regime));
  return result;
}

ReferenceSeries load_reference_csv(const std::string& path) {
  const CsvTable table = load_csv(path);
  std::vector<const CsvColumn*> numeric;
  for (const auto& col : table.columns) {
    if (col.numeric) numeric.push_back(&col);
  }
  if (numeric.size() < 2) {
    throw validation_error(path + ": reference CSV needs two numeric columns (x, y)");
  }
  ReferenceSeries ref;
  ref.x_name = numeric[0]->name;
  ref.y_name = numeric[1]->name;
  ref.x = numeric[0]->values;
  ref.y = numeric[1]->values;
  if (ref.x.size() != ref.y.size() || ref.x.empty()) {
    throw validation_error(path + ": reference columns must be equal-length and non-empty");
  }
  return ref;
}

void overlay_reference(SweepResult& result, const ReferenceSeries& reference) {
  const std::string result_unit = column_unit(result.x_name);
  const std::string reference_unit = column_unit(reference.x_name);
  if (!result_unit.empty() && !reference_unit.empty() && result_unit != reference_unit) {
    warn("overlay: abscissa units differ ('" + result_unit + "' vs '" + reference_unit + "')");
    result.provenance.emplace_back("overlay-unit-mismatch",
                                   result_unit + " vs " + reference_unit);
  }
  result.provenance.emplace_back("overlay", reference.y_name);
  result.overlay_series.push_back({"reference: " + reference.y_name, reference.x, reference.y});

  // Same abscissa pointwise: emit reference and difference columns against
  // the first plotted column.
  if (reference.x.size() == result.abscissa.size()) {
    bool same = true;
    for (std::size_t i = 0; i < reference.x.size(); ++i) {
      const double scale = std::max(std::abs(result.abscissa[i]), 1.0);
      if (std::abs(reference.x[i] - result.abscissa[i]) > 1e-12 * scale) {
        same = false;
        break;
      }
    }
    const SweepColumn* primary = nullptr;
    for (const auto& col : result.columns) {
      if (col.numeric && col.plot) {
        primary = &col;
        break;
      }
    }
    if (same && primary != nullptr) {
      SweepColumn ref_col{"reference", true, false, reference.y, {}};
      SweepColumn diff{"difference_vs_reference", true, false, {}, {}};
      for (std::size_t i = 0; i < reference.y.size(); ++i) {
        diff.values.push_back(primary->values[i] - reference.y[i]);
      }
      result.columns.push_back(std::move(ref_col));
      result.columns.push_back(std::move(diff));
    }
  }
}

CsvTable to_csv(const SweepResult& result) {
  CsvTable table;
  table.provenance = result.provenance;
  CsvColumn x{result.x_name, true, result.abscissa, {}};
  table.columns.push_back(std::move(x));
  for (const auto& col : result.columns) {
    table.columns.push_back({col.name, col.numeric, col.values, col.labels});
  }
  return table;
}

std::string to_svg(const SweepResult& result) {
  if (!result.grid_values.empty()) {
    SvgPlotSpec spec;
    spec.title = result.title;
    spec.x_label = result.x_name;
    spec.y_label = "offset (m)";
    return render_heatmap(spec, result.grid_x, result.grid_y, result.grid_values);
  }

  SvgPlotSpec spec;
  spec.title = result.title;
  spec.x_label = result.x_name;
  spec.log_x = result.log_x;
  std::vector<SvgSeries> series;
  bool log_y = true;
  for (const auto& col : result.columns) {
    if (!col.numeric || !col.plot) continue;
    series.push_back({col.name, result.abscissa, col.values});
    if (spec.y_label.empty()) spec.y_label = col.name;
    for (double v : col.values) {
      if (std::isfinite(v) && v <= 0.0) log_y = false;
    }
  }
  if (series.size() > 1) spec.y_label = column_unit(series.front().label);
  for (const auto& overlay : result.overlay_series) {
    series.push_back(overlay);
    for (double v : overlay.y) {
      if (std::isfinite(v) && v <= 0.0) log_y = false;
    }
  }
  if (series.empty()) throw validation_error("to_svg: nothing to plot");

  // Wavelength-style reports span decades and stay positive; dB data does not.
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const auto& s : series) {
    for (double v : s.y) {
      if (std::isfinite(v) && v > 0.0) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
  }
  spec.log_y = log_y && hi > 0.0 && hi / lo > 1e3;
  return render_line_plot(spec, series);
}

}  // namespace mqs
