// Copyright 2026 ranklaw authors.
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

#include "ranklaw/plotio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "ranklaw/error.hpp"
#include "ranklaw/numfmt.hpp"

namespace ranklaw {

namespace {

constexpr double kCanvasWidth = 800.0;
constexpr double kCanvasHeight = 600.0;
constexpr double kMargin = 60.0;
constexpr double kPlotWidth = kCanvasWidth - 2.0 * kMargin;
constexpr double kPlotHeight = kCanvasHeight - 2.0 * kMargin;

std::string px(double value) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), value,
                           std::chars_format::fixed, 2);
  return std::string(buf, res.ptr);
}

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

void validate_spec(const PlotSpec& spec) {
  if (spec.points.empty()) {
    throw Error(ErrorKind::kEmptyPlot, "plot has no points");
  }
  for (const auto& [x, y] : spec.points) {
    if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
      throw Error(ErrorKind::kDomain,
                  "log axes need strictly positive finite points, got (" +
                      format_double(x) + ", " + format_double(y) + ")");
    }
  }
  if (spec.fit_line) {
    const auto& [exponent, prefactor] = *spec.fit_line;
    if (!(prefactor > 0.0) || !std::isfinite(prefactor) ||
        !std::isfinite(exponent)) {
      throw Error(ErrorKind::kDomain,
                  "fit line needs a positive prefactor and finite exponent");
    }
  }
}

struct DecadeRange {
  long lo = 0;
  long hi = 1;

  double fraction(double value) const {
    return (std::log10(value) - static_cast<double>(lo)) /
           static_cast<double>(hi - lo);
  }
};

DecadeRange decades_covering(double min_value, double max_value) {
  DecadeRange range;
  range.lo = static_cast<long>(std::floor(std::log10(min_value)));
  range.hi = static_cast<long>(std::ceil(std::log10(max_value)));
  if (range.hi <= range.lo) range.hi = range.lo + 1;
  return range;
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  validate_spec(spec);

  double x_min = spec.points.front().first;
  double x_max = x_min;
  double y_min = spec.points.front().second;
  double y_max = y_min;
  for (const auto& [x, y] : spec.points) {
    x_min = std::min(x_min, x);
    x_max = std::max(x_max, x);
    y_min = std::min(y_min, y);
    y_max = std::max(y_max, y);
  }
  // The fitted segment spans the data x-range; widen the y decades so its
  // endpoints stay inside the plot area.
  if (spec.fit_line) {
    const auto& [exponent, prefactor] = *spec.fit_line;
    for (double x : {x_min, x_max}) {
      const double y = prefactor * std::pow(x, exponent);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }

  const DecadeRange xr = decades_covering(x_min, x_max);
  const DecadeRange yr = decades_covering(y_min, y_max);

  const auto map_x = [&](double v) {
    return kMargin + xr.fraction(v) * kPlotWidth;
  };
  const auto map_y = [&](double v) {
    return kMargin + kPlotHeight - yr.fraction(v) * kPlotHeight;
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" "
         "fill=\"#ffffff\"/>\n";

  // Decade grid and tick labels.
  svg += "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (long k = xr.lo; k <= xr.hi; ++k) {
    const std::string x = px(map_x(std::pow(10.0, static_cast<double>(k))));
    svg += "<line x1=\"" + x + "\" y1=\"" + px(kMargin) + "\" x2=\"" + x +
           "\" y2=\"" + px(kMargin + kPlotHeight) + "\"/>\n";
  }
  for (long k = yr.lo; k <= yr.hi; ++k) {
    const std::string y = px(map_y(std::pow(10.0, static_cast<double>(k))));
    svg += "<line x1=\"" + px(kMargin) + "\" y1=\"" + y + "\" x2=\"" +
           px(kMargin + kPlotWidth) + "\" y2=\"" + y + "\"/>\n";
  }
  svg += "</g>\n";

  svg += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n";
  for (long k = xr.lo; k <= xr.hi; ++k) {
    const std::string x = px(map_x(std::pow(10.0, static_cast<double>(k))));
    svg += "<text x=\"" + x + "\" y=\"" + px(kMargin + kPlotHeight + 18.0) +
           "\" text-anchor=\"middle\">10^" + std::to_string(k) + "</text>\n";
  }
  for (long k = yr.lo; k <= yr.hi; ++k) {
    const std::string y = px(map_y(std::pow(10.0, static_cast<double>(k))));
    svg += "<text x=\"" + px(kMargin - 8.0) + "\" y=\"" + y +
           "\" text-anchor=\"end\" dominant-baseline=\"middle\">10^" +
           std::to_string(k) + "</text>\n";
  }
  svg += "</g>\n";

  svg += "<rect x=\"" + px(kMargin) + "\" y=\"" + px(kMargin) +
         "\" width=\"" + px(kPlotWidth) + "\" height=\"" + px(kPlotHeight) +
         "\" fill=\"none\" stroke=\"#000000\"/>\n";

  if (spec.fit_line) {
    const auto& [exponent, prefactor] = *spec.fit_line;
    const double y1 = prefactor * std::pow(x_min, exponent);
    const double y2 = prefactor * std::pow(x_max, exponent);
    svg += "<line class=\"fit\" x1=\"" + px(map_x(x_min)) + "\" y1=\"" +
           px(map_y(y1)) + "\" x2=\"" + px(map_x(x_max)) + "\" y2=\"" +
           px(map_y(y2)) + "\" stroke=\"#c0392b\" stroke-width=\"1.5\"/>\n";
  }

  svg += "<g fill=\"#2f6fab\">\n";
  for (const auto& [x, y] : spec.points) {
    svg += "<circle cx=\"" + px(map_x(x)) + "\" cy=\"" + px(map_y(y)) +
           "\" r=\"3\"/>\n";
  }
  svg += "</g>\n";

  svg += "<g font-family=\"sans-serif\" fill=\"#000000\">\n";
  svg += "<text x=\"400\" y=\"32\" font-size=\"16\" "
         "text-anchor=\"middle\">" + xml_escape(spec.title) + "</text>\n";
  svg += "<text x=\"400\" y=\"585\" font-size=\"13\" "
         "text-anchor=\"middle\">" + xml_escape(spec.x_label) + "</text>\n";
  svg += "<text x=\"20\" y=\"300\" font-size=\"13\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 20 300)\">" + xml_escape(spec.y_label) +
         "</text>\n";
  svg += "</g>\n";
  svg += "</svg>\n";
  return svg;
}

std::string emit_table(const PlotSpec& spec) {
  validate_spec(spec);
  std::string out = "x\ty\ty_fit\n";
  for (const auto& [x, y] : spec.points) {
    out += format_double(x);
    out += '\t';
    out += format_double(y);
    out += '\t';
    if (spec.fit_line) {
      const auto& [exponent, prefactor] = *spec.fit_line;
      out += format_double(prefactor * std::pow(x, exponent));
    }
    out += '\n';
  }
  return out;
}

}  // namespace ranklaw
