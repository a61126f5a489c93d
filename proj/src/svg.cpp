#include "mqslink/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "mqslink/errors.hpp"

namespace mqs {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};
constexpr int kPaletteSize = 8;

std::string num(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", v);
  return buffer;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct AxisScale {
  double lo = 0.0, hi = 1.0;
  bool log = false;
  double p0 = 0.0, p1 = 1.0;  // pixel range

  double to_pixel(double v) const {
    double t;
    if (log) {
      t = (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
    } else {
      t = (v - lo) / (hi - lo);
    }
    return p0 + t * (p1 - p0);
  }
};

struct Tick {
  double value;
  std::string label;
};

std::vector<Tick> linear_ticks(double lo, double hi) {
  std::vector<Tick> ticks;
  const double span = hi - lo;
  if (!(span > 0.0)) return {{lo, num(lo)}};
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double mult : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= mult * mag) {
      step = mult * mag;
      break;
    }
  }
  const double first = std::ceil(lo / step) * step;
  for (double v = first; v <= hi + 0.5 * step; v += step) {
    const double snapped = std::abs(v) < 1e-12 * step ? 0.0 : v;
    ticks.push_back({snapped, num(snapped)});
  }
  return ticks;
}

std::vector<Tick> log_ticks(double lo, double hi) {
  std::vector<Tick> ticks;
  const int e0 = static_cast<int>(std::ceil(std::log10(lo) - 1e-9));
  const int e1 = static_cast<int>(std::floor(std::log10(hi) + 1e-9));
  const int stride = std::max(1, (e1 - e0) / 9 + ((e1 - e0) % 9 ? 1 : 0));
  for (int e = e0; e <= e1; e += stride) {
    char label[24];
    std::snprintf(label, sizeof label, "1e%d", e);
    ticks.push_back({std::pow(10.0, e), label});
  }
  if (ticks.empty()) ticks.push_back({lo, num(lo)});
  return ticks;
}

bool usable(double v, bool log) { return std::isfinite(v) && (!log || v > 0.0); }

// Perceptually-ordered 5-stop ramp (dark blue -> yellow).
void colormap(double t, int* r, int* g, int* b) {
  static const double stops[5][3] = {{68, 1, 84}, {59, 82, 139}, {33, 145, 140},
                                     {94, 201, 98}, {253, 231, 37}};
  t = std::clamp(t, 0.0, 1.0) * 4.0;
  const int i = std::min(3, static_cast<int>(t));
  const double f = t - i;
  *r = static_cast<int>(stops[i][0] + f * (stops[i + 1][0] - stops[i][0]));
  *g = static_cast<int>(stops[i][1] + f * (stops[i + 1][1] - stops[i][1]));
  *b = static_cast<int>(stops[i][2] + f * (stops[i + 1][2] - stops[i][2]));
}

void open_svg(std::ostringstream& out, const SvgPlotSpec& spec) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << spec.width / 2 << "\" y=\"22\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"15\">" << escape(spec.title) << "</text>\n";
}

void draw_axes(std::ostringstream& out, const SvgPlotSpec& spec, const AxisScale& xs,
               const AxisScale& ys, const std::vector<Tick>& xticks,
               const std::vector<Tick>& yticks) {
  out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  for (const auto& t : xticks) {
    const double px = xs.to_pixel(t.value);
    out << "<line x1=\"" << num(px) << "\" y1=\"" << num(ys.p0) << "\" x2=\"" << num(px)
        << "\" y2=\"" << num(ys.p1) << "\" stroke=\"#ddd\"/>\n";
    out << "<text x=\"" << num(px) << "\" y=\"" << num(ys.p0 + 16)
        << "\" text-anchor=\"middle\">" << escape(t.label) << "</text>\n";
  }
  for (const auto& t : yticks) {
    const double py = ys.to_pixel(t.value);
    out << "<line x1=\"" << num(xs.p0) << "\" y1=\"" << num(py) << "\" x2=\"" << num(xs.p1)
        << "\" y2=\"" << num(py) << "\" stroke=\"#ddd\"/>\n";
    out << "<text x=\"" << num(xs.p0 - 6) << "\" y=\"" << num(py + 4)
        << "\" text-anchor=\"end\">" << escape(t.label) << "</text>\n";
  }
  out << "</g>\n";
  out << "<rect x=\"" << num(xs.p0) << "\" y=\"" << num(ys.p1) << "\" width=\""
      << num(xs.p1 - xs.p0) << "\" height=\"" << num(ys.p0 - ys.p1)
      << "\" fill=\"none\" stroke=\"#333\"/>\n";
  out << "<text x=\"" << num(0.5 * (xs.p0 + xs.p1)) << "\" y=\"" << num(ys.p0 + 38)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << escape(spec.x_label) << "</text>\n";
  out << "<text transform=\"translate(18," << num(0.5 * (ys.p0 + ys.p1))
      << ") rotate(-90)\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << escape(spec.y_label) << "</text>\n";
}

}  // namespace

std::string render_line_plot(const SvgPlotSpec& spec, const std::vector<SvgSeries>& series) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!usable(s.x[i], spec.log_x) || !usable(s.y[i], spec.log_y)) continue;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  if (!(xmin <= xmax)) {
    // nothing drawable (e.g. an all -inf dB sweep): emit an empty frame
    std::ostringstream out;
    open_svg(out, spec);
    out << "<text x=\"" << spec.width / 2 << "\" y=\"" << spec.height / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "fill=\"#666\">no drawable data</text>\n</svg>\n";
    return out.str();
  }
  if (xmin == xmax) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  if (ymin == ymax) {
    ymin -= 1.0;
    ymax += 1.0;
  } else {
    const double pad = 0.04 * (ymax - ymin);
    if (!spec.log_y) {
      ymin -= pad;
      ymax += pad;
    }
  }

  const double left = 70, right = 170, top = 40, bottom = 50;
  AxisScale xs{xmin, xmax, spec.log_x, left, spec.width - right};
  AxisScale ys{ymin, ymax, spec.log_y, spec.height - bottom, top};

  std::ostringstream out;
  open_svg(out, spec);
  draw_axes(out, spec, xs, ys, spec.log_x ? log_ticks(xmin, xmax) : linear_ticks(xmin, xmax),
            spec.log_y ? log_ticks(ymin, ymax) : linear_ticks(ymin, ymax));

  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* color = kPalette[k % kPaletteSize];
    std::ostringstream points;
    bool drawing = false;
    auto flush = [&] {
      if (drawing) {
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\" points=\""
            << points.str() << "\"/>\n";
      }
      points.str("");
      drawing = false;
    };
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!usable(s.x[i], spec.log_x) || !usable(s.y[i], spec.log_y)) {
        flush();
        continue;
      }
      points << num(xs.to_pixel(s.x[i])) << "," << num(ys.to_pixel(s.y[i])) << " ";
      drawing = true;
    }
    flush();
    const double ly = top + 18.0 * k;
    out << "<line x1=\"" << num(spec.width - right + 12) << "\" y1=\"" << num(ly) << "\" x2=\""
        << num(spec.width - right + 34) << "\" y2=\"" << num(ly) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << num(spec.width - right + 40) << "\" y=\"" << num(ly + 4)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(s.label) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_heatmap(const SvgPlotSpec& spec, const std::vector<double>& xs_in,
                           const std::vector<double>& ys_in, const std::vector<double>& values) {
  const std::size_t nx = xs_in.size();
  const std::size_t ny = ys_in.size();
  if (nx < 1 || ny < 1 || values.size() != nx * ny) {
    throw validation_error("render_heatmap: grid dimensions do not match values");
  }
  double vmin = std::numeric_limits<double>::infinity(), vmax = -vmin;
  for (double v : values) {
    if (!std::isfinite(v)) continue;
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  if (!(vmin <= vmax)) {
    vmin = 0.0;  // all cells non-finite: painted white below
    vmax = 1.0;
  }
  if (vmin == vmax) vmax = vmin + 1.0;

  const double left = 70, right = 120, top = 40, bottom = 50;
  AxisScale xs{xs_in.front(), xs_in.back(), false, left, spec.width - right};
  AxisScale ys{ys_in.front(), ys_in.back(), false, spec.height - bottom, top};
  if (nx == 1) xs.hi = xs.lo + 1.0;
  if (ny == 1) ys.hi = ys.lo + 1.0;

  std::ostringstream out;
  open_svg(out, spec);

  auto edge = [](const std::vector<double>& grid, std::size_t i) {
    // cell boundaries halfway between samples, extrapolated at the ends
    const std::size_t n = grid.size();
    if (n == 1) return i == 0 ? grid[0] - 0.5 : grid[0] + 0.5;
    if (i == 0) return grid[0] - 0.5 * (grid[1] - grid[0]);
    if (i >= n) return grid[n - 1] + 0.5 * (grid[n - 1] - grid[n - 2]);
    return 0.5 * (grid[i - 1] + grid[i]);
  };

  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const double v = values[iy * nx + ix];
      int r = 255, g = 255, b = 255;
      if (std::isfinite(v)) colormap((v - vmin) / (vmax - vmin), &r, &g, &b);
      const double x0 = xs.to_pixel(edge(xs_in, ix));
      const double x1 = xs.to_pixel(edge(xs_in, ix + 1));
      const double y0 = ys.to_pixel(edge(ys_in, iy));
      const double y1 = ys.to_pixel(edge(ys_in, iy + 1));
      char fill[16];
      std::snprintf(fill, sizeof fill, "#%02x%02x%02x", r, g, b);
      out << "<rect x=\"" << num(std::min(x0, x1)) << "\" y=\"" << num(std::min(y0, y1))
          << "\" width=\"" << num(std::abs(x1 - x0)) << "\" height=\"" << num(std::abs(y1 - y0))
          << "\" fill=\"" << fill << "\"/>\n";
    }
  }
  draw_axes(out, spec, xs, ys, linear_ticks(xs.lo, xs.hi), linear_ticks(ys.lo, ys.hi));

  // color bar
  const double bar_x = spec.width - right + 24;
  const double bar_top = top, bar_h = spec.height - top - bottom;
  for (int i = 0; i < 64; ++i) {
    int r, g, b;
    colormap(1.0 - i / 63.0, &r, &g, &b);
    char fill[16];
    std::snprintf(fill, sizeof fill, "#%02x%02x%02x", r, g, b);
    out << "<rect x=\"" << num(bar_x) << "\" y=\"" << num(bar_top + bar_h * i / 64.0)
        << "\" width=\"14\" height=\"" << num(bar_h / 64.0 + 0.5) << "\" fill=\"" << fill
        << "\"/>\n";
  }
  out << "<text x=\"" << num(bar_x + 18) << "\" y=\"" << num(bar_top + 10)
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << num(vmax) << "</text>\n";
  out << "<text x=\"" << num(bar_x + 18) << "\" y=\"" << num(bar_top + bar_h)
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << num(vmin) << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace mqs
