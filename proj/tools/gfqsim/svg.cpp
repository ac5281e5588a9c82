// Copyright 2026 The gfqsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace gfqsim::svg {

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 20, kTop = 36, kBottom = 50;
constexpr double kPlotW = kWidth - kLeft - kRight;
constexpr double kPlotH = kHeight - kTop - kBottom;

constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c",
                                                 "#9467bd", "#ff7f0e", "#17becf"};

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!std::isfinite(lo)) lo = 0, hi = 1;
    if (hi - lo < 1e-300) {
      const double d = std::max(1e-12, 0.5 * std::abs(lo));
      lo -= d;
      hi += d;
    }
  }
  double frac(double v) const { return (v - lo) / (hi - lo); }
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string header(const Axes& axes) {
  std::string s = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\" font-family=\"sans-serif\" font-size=\"12\">\n",
      kWidth, kHeight, kWidth, kHeight);
  s += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", kWidth, kHeight);
  s += fmt::format("<text x=\"{}\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
                   kWidth / 2, escape(axes.title));
  s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", kLeft + kPlotW / 2,
                   kHeight - 12, escape(axes.x_label));
  s += fmt::format(
      "<text x=\"16\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {})\">{}</text>\n",
      kTop + kPlotH / 2, kTop + kPlotH / 2, escape(axes.y_label));
  return s;
}

std::string frame(const Range& x, const Range& y) {
  std::string s = fmt::format(
      "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
      kLeft, kTop, kPlotW, kPlotH);
  for (int k = 0; k <= 4; ++k) {
    const double t = k / 4.0;
    const double px = kLeft + t * kPlotW, py = kTop + kPlotH - t * kPlotH;
    s += fmt::format("<text x=\"{:.1f}\" y=\"{}\" text-anchor=\"middle\">{:.4g}</text>\n", px,
                     kTop + kPlotH + 16, x.lo + t * (x.hi - x.lo));
    s += fmt::format("<text x=\"{}\" y=\"{:.1f}\" text-anchor=\"end\">{:.4g}</text>\n", kLeft - 4,
                     py + 4, y.lo + t * (y.hi - y.lo));
  }
  return s;
}

// Blue-white-red ramp over [0, 1].
std::string ramp(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const auto mix = [](double a, double b, double u) { return static_cast<int>(std::lround(a + (b - a) * u)); };
  if (t < 0.5) {
    const double u = t / 0.5;
    return fmt::format("#{:02x}{:02x}{:02x}", mix(33, 247, u), mix(102, 247, u), mix(172, 247, u));
  }
  const double u = (t - 0.5) / 0.5;
  return fmt::format("#{:02x}{:02x}{:02x}", mix(247, 178, u), mix(247, 24, u), mix(247, 43, u));
}

}  // namespace

std::string line_plot(const Axes& axes, const std::vector<Series>& series) {
  Range x, y;
  for (const Series& s : series) {
    for (double v : s.x) x.add(v);
    for (double v : s.y) y.add(v);
  }
  x.pad();
  y.pad();
  std::string out = header(axes) + frame(x, y);
  for (std::size_t k = 0; k < series.size(); ++k) {
    const Series& s = series[k];
    const char* colour = kPalette[k % kPalette.size()];
    std::string points;
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      points += fmt::format("{:.2f},{:.2f} ", kLeft + x.frac(s.x[i]) * kPlotW,
                            kTop + kPlotH - y.frac(s.y[i]) * kPlotH);
    }
    out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
                       colour, points);
    if (!s.label.empty()) {
      const double ly = kTop + 14 + 16 * static_cast<double>(k);
      out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"2\"/>\n",
                         kLeft + kPlotW - 110, ly - 4, kLeft + kPlotW - 90, ly - 4, colour);
      out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", kLeft + kPlotW - 86, ly, escape(s.label));
    }
  }
  return out + "</svg>\n";
}

std::string heatmap(const Axes& axes, const std::vector<double>& xs, const std::vector<double>& ys,
                    const std::vector<double>& values) {
  Range x, y, v;
  for (double a : xs) x.add(a);
  for (double a : ys) y.add(a);
  for (double a : values) v.add(a);
  x.pad();
  y.pad();
  v.pad();
  std::string out = header(axes);
  const double cw = kPlotW / static_cast<double>(xs.size());
  const double ch = kPlotH / static_cast<double>(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"{}\"/>\n",
                         kLeft + static_cast<double>(i) * cw,
                         kTop + kPlotH - static_cast<double>(j + 1) * ch, cw + 0.05, ch + 0.05,
                         ramp(v.frac(values[i * ys.size() + j])));
    }
  }
  out += frame(x, y);
  out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">range [{:.4g}, {:.4g}]</text>\n",
                     kLeft + kPlotW, kTop - 4, v.lo, v.hi);
  return out + "</svg>\n";
}

}  // namespace gfqsim::svg
