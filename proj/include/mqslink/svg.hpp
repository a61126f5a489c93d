#pragma once

#include <string>
#include <vector>

namespace mqs {

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct SvgPlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  int width = 860;
  int height = 520;
};

// Self-contained line plot: axes, tick grid (decades on log scales), one
// polyline per series (broken at non-finite samples), legend.
std::string render_line_plot(const SvgPlotSpec& spec, const std::vector<SvgSeries>& series);

// Cell heatmap for gridded data with a color bar; values laid out row-major
// as values[iy * xs.size() + ix].
std::string render_heatmap(const SvgPlotSpec& spec, const std::vector<double>& xs,
                           const std::vector<double>& ys, const std::vector<double>& values);

}  // namespace mqs
