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

#ifndef RANKLAW_PLOTIO_HPP_
#define RANKLAW_PLOTIO_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ranklaw {

/// A log-log scatter plot, optionally with a fitted power law drawn as a
/// straight segment across the x-range of the data. Log base is 10; all
/// points must be strictly positive.
struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<std::pair<double, double>> points;
  std::optional<std::pair<double, double>> fit_line;  // (exponent, prefactor)
};

/// Renders a self-contained SVG 1.1 document: 800x600 canvas, 60 px
/// margins, decade tick marks only. Output is deterministic for identical
/// input.
std::string render_svg(const PlotSpec& spec);

/// Machine-readable companion table, TSV with header `x	y	y_fit` in input
/// order at full double precision; y_fit is blank without a fit line.
std::string emit_table(const PlotSpec& spec);

}  // namespace ranklaw

#endif  // RANKLAW_PLOTIO_HPP_
