#include "polysem/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace polysem::svg {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                          "#8c564b", "#17becf", "#7f7f7f", "#bcbd22", "#e377c2"};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c; break;
    }
  }
  return out;
}

struct AxisScale {
  double lo = 0.0;
  double hi = 1.0;
  bool log = false;

  double to_unit(double v) const {
    const double a = log ? std::log10(v) : v;
    const double l = log ? std::log10(lo) : lo;
    const double h = log ? std::log10(hi) : hi;
    return (a - l) / (h - l);
  }
};

// Round the range out to "nice" tick positions.
std::vector<double> linear_ticks(double lo, double hi) {
  const double span = hi - lo;
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double mult : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= mult * mag) {
      step = mult * mag;
      break;
    }
  }
  std::vector<double> ticks;
  const double start = std::ceil(lo / step) * step;
  for (double v = start; v <= hi + step * 1e-9; v += step) {
    ticks.push_back(std::fabs(v) < step * 1e-9 ? 0.0 : v);
  }
  return ticks;
}

std::vector<double> log_ticks(double lo, double hi) {
  std::vector<double> ticks;
  const int klo = static_cast<int>(std::floor(std::log10(lo)));
  const int khi = static_cast<int>(std::ceil(std::log10(hi)));
  int stride = 1;
  while ((khi - klo) / stride > 10) ++stride;
  for (int k = klo; k <= khi; k += stride) {
    const double v = std::pow(10.0, k);
    if (v >= lo * (1 - 1e-12) && v <= hi * (1 + 1e-12)) ticks.push_back(v);
  }
  if (ticks.empty()) ticks = {lo, hi};
  return ticks;
}

std::string tick_label(double v, bool log) {
  char buf[48];
  if (log) {
    const double e = std::log10(v);
    const double er = std::round(e);
    if (std::fabs(e - er) < 1e-9) {
      std::snprintf(buf, sizeof(buf), "1e%d", static_cast<int>(er));
      return buf;
    }
  }
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

}  // namespace

std::string Chart::render(int width, int height) const {
  const double left = 72, right = width - 24, top = 46, bottom = height - 56;

  // Data ranges; log axes ignore non-positive values.
  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  for (const Series& s : series) {
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (log_x && x <= 0.0) continue;
      if (log_y && y <= 0.0) continue;
      xlo = std::min(xlo, x);
      xhi = std::max(xhi, x);
      ylo = std::min(ylo, y);
      yhi = std::max(yhi, y);
    }
  }
  if (!(xlo <= xhi)) {
    xlo = log_x ? 0.1 : 0.0;
    xhi = 1.0;
  }
  if (!(ylo <= yhi)) {
    ylo = log_y ? 0.1 : 0.0;
    yhi = 1.0;
  }
  if (xlo == xhi) {
    xlo = log_x ? xlo / 2 : xlo - 1;
    xhi = log_x ? xhi * 2 : xhi + 1;
  }
  if (ylo == yhi) {
    ylo = log_y ? ylo / 2 : ylo - 1;
    yhi = log_y ? yhi * 2 : yhi + 1;
  }
  if (!log_y) {
    const double pad = 0.05 * (yhi - ylo);
    ylo -= pad;
    yhi += pad;
  } else {
    ylo /= 1.3;
    yhi *= 1.3;
  }

  const AxisScale xs{xlo, xhi, log_x};
  const AxisScale ys{ylo, yhi, log_y};
  const auto px = [&](double v) { return left + xs.to_unit(v) * (right - left); };
  const auto py = [&](double v) { return bottom - ys.to_unit(v) * (bottom - top); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\" "
         "font-family=\"sans-serif\">"
      << xml_escape(title) << "</text>\n";

  // Gridlines and ticks.
  const auto xticks = log_x ? log_ticks(xlo, xhi) : linear_ticks(xlo, xhi);
  const auto yticks = log_y ? log_ticks(ylo, yhi) : linear_ticks(ylo, yhi);
  out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (double v : xticks) {
    out << "<line x1=\"" << fmt(px(v)) << "\" y1=\"" << fmt(top) << "\" x2=\"" << fmt(px(v))
        << "\" y2=\"" << fmt(bottom) << "\"/>\n";
  }
  for (double v : yticks) {
    out << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(py(v)) << "\" x2=\"" << fmt(right)
        << "\" y2=\"" << fmt(py(v)) << "\"/>\n";
  }
  out << "</g>\n";
  out << "<g font-size=\"11\" font-family=\"sans-serif\" fill=\"#333333\">\n";
  for (double v : xticks) {
    out << "<text x=\"" << fmt(px(v)) << "\" y=\"" << fmt(bottom + 16)
        << "\" text-anchor=\"middle\">" << tick_label(v, log_x) << "</text>\n";
  }
  for (double v : yticks) {
    out << "<text x=\"" << fmt(left - 6) << "\" y=\"" << fmt(py(v) + 4)
        << "\" text-anchor=\"end\">" << tick_label(v, log_y) << "</text>\n";
  }
  out << "</g>\n";

  // Axes frame.
  out << "<rect x=\"" << fmt(left) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(right - left)
      << "\" height=\"" << fmt(bottom - top) << "\" fill=\"none\" stroke=\"#333333\"/>\n";
  out << "<text x=\"" << (left + right) / 2 << "\" y=\"" << height - 14
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">"
      << xml_escape(x_label) << "</text>\n";
  out << "<text x=\"18\" y=\"" << (top + bottom) / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
         "transform=\"rotate(-90 18 "
      << (top + bottom) / 2 << ")\">" << xml_escape(y_label) << "</text>\n";

  // Series.
  for (std::size_t s = 0; s < series.size(); ++s) {
    const Series& ser = series[s];
    const std::string color =
        ser.color.empty() ? kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))] : ser.color;
    std::ostringstream pts;
    bool any = false;
    for (const auto& [x, y] : ser.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      if (log_x && x <= 0.0) continue;
      if (log_y && y <= 0.0) continue;
      pts << fmt(px(x)) << ',' << fmt(py(y)) << ' ';
      any = true;
    }
    if (!any) continue;
    if (ser.line) {
      out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.6\"";
      if (ser.dashed) out << " stroke-dasharray=\"6 4\"";
      out << " points=\"" << pts.str() << "\"/>\n";
    }
    if (ser.markers || !ser.line) {
      for (const auto& [x, y] : ser.points) {
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        if (log_x && x <= 0.0) continue;
        if (log_y && y <= 0.0) continue;
        out << "<circle cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(y))
            << "\" r=\"2.6\" fill=\"" << color << "\"/>\n";
      }
    }
  }

  // Legend, top-right inside the frame.
  double ly = top + 16;
  for (std::size_t s = 0; s < series.size(); ++s) {
    const Series& ser = series[s];
    if (ser.label.empty()) continue;
    const std::string color =
        ser.color.empty() ? kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))] : ser.color;
    out << "<line x1=\"" << fmt(right - 150) << "\" y1=\"" << fmt(ly - 4) << "\" x2=\""
        << fmt(right - 126) << "\" y2=\"" << fmt(ly - 4) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"";
    if (ser.dashed) out << " stroke-dasharray=\"6 4\"";
    out << "/>\n";
    out << "<text x=\"" << fmt(right - 120) << "\" y=\"" << fmt(ly)
        << "\" font-size=\"11\" font-family=\"sans-serif\">" << xml_escape(ser.label)
        << "</text>\n";
    ly += 16;
  }

  out << "</svg>\n";
  return out.str();
}

std::string render_heatmap(const WeightMatrix& W, const std::string& title) {
  const std::size_t n = W.rows();
  const std::size_t m = W.cols();
  const int cell = std::max(6, static_cast<int>(640 / std::max<std::size_t>(m, 1)));
  const int left = 60, top = 50;
  const int width = left + cell * static_cast<int>(m) + 30;
  const int height = top + cell * static_cast<int>(n) + 40;

  double max_abs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < m; ++k) max_abs = std::max(max_abs, std::fabs(W(i, k)));
  }
  if (max_abs == 0.0) max_abs = 1.0;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\" "
         "font-family=\"sans-serif\">"
      << xml_escape(title) << "</text>\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      const double v = W(i, k) / max_abs;  // [-1, 1]; positive red, negative blue
      const double a = std::fabs(v);
      const int r = static_cast<int>(v > 0 ? 255 : 255 * (1 - a));
      const int g = static_cast<int>(255 * (1 - a));
      const int b = static_cast<int>(v > 0 ? 255 * (1 - a) : 255);
      out << "<rect x=\"" << left + cell * static_cast<int>(k) << "\" y=\""
          << top + cell * static_cast<int>(i) << "\" width=\"" << cell << "\" height=\"" << cell
          << "\" fill=\"rgb(" << r << ',' << g << ',' << b << ")\" stroke=\"#cccccc\"/>\n";
    }
    out << "<text x=\"" << left - 8 << "\" y=\"" << top + cell * static_cast<int>(i) + cell / 2 + 4
        << "\" text-anchor=\"end\" font-size=\"10\" font-family=\"sans-serif\">" << i
        << "</text>\n";
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (m > 32 && k % 4 != 0) continue;
    out << "<text x=\"" << left + cell * static_cast<int>(k) + cell / 2 << "\" y=\""
        << top + cell * static_cast<int>(n) + 14
        << "\" text-anchor=\"middle\" font-size=\"10\" font-family=\"sans-serif\">" << k
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_svg(const std::string& content, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace polysem::svg
