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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "ranklaw/error.hpp"
#include "ranklaw/numfmt.hpp"
#include "ranklaw/plotio.hpp"
#include "ranklaw/powerfit.hpp"
#include "svg_check.hpp"

using namespace ranklaw;
using testsupport::extract_attr;
using testsupport::xml_well_formed;

namespace {

double point_segment_distance(double px, double py, double x1, double y1,
                              double x2, double y2) {
  const double dx = x2 - x1;
  const double dy = y2 - y1;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((px - x1) * dx + (py - y1) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double cx = x1 + t * dx;
  const double cy = y1 + t * dy;
  return std::hypot(px - cx, py - cy);
}

}  // namespace

TEST_SUITE("plotio") {

TEST_CASE("exact-law markers sit on the fitted segment") {
  PlotSpec spec;
  spec.title = "exact law";
  spec.x_label = "x";
  spec.y_label = "y";
  spec.points = {{1, 100}, {2, 50}, {4, 25}};
  spec.fit_line = {{-1.0, 100.0}};

  const std::string svg = render_svg(spec);
  CHECK(xml_well_formed(svg));

  const auto cx = extract_attr(svg, "circle", "cx");
  const auto cy = extract_attr(svg, "circle", "cy");
  REQUIRE(cx.size() == 3);
  // the fit segment is the line element with class="fit"
  const auto pos = svg.find("class=\"fit\"");
  REQUIRE(pos != std::string::npos);
  const auto tail = svg.substr(svg.rfind("<line", pos));
  const auto x1 = extract_attr(tail, "line", "x1");
  const auto y1 = extract_attr(tail, "line", "y1");
  const auto x2 = extract_attr(tail, "line", "x2");
  const auto y2 = extract_attr(tail, "line", "y2");
  REQUIRE(x1.size() >= 1);
  for (std::size_t i = 0; i < cx.size(); ++i) {
    CHECK(point_segment_distance(cx[i], cy[i], x1[0], y1[0], x2[0], y2[0]) <=
          0.5);
  }
}

TEST_CASE("a single unit point lands at the log origin") {
  PlotSpec spec;
  spec.points = {{1.0, 1.0}};
  const std::string svg = render_svg(spec);
  CHECK(xml_well_formed(svg));
  const auto cx = extract_attr(svg, "circle", "cx");
  const auto cy = extract_attr(svg, "circle", "cy");
  REQUIRE(cx.size() == 1);
  CHECK(cx[0] == doctest::Approx(60.0));   // left margin
  CHECK(cy[0] == doctest::Approx(540.0));  // bottom margin
}

TEST_CASE("sample hosts markers descend left to right") {
  const auto snapshot = testsupport::sample_snapshot();
  PlotSpec spec;
  spec.title = "hosts vs rank";
  for (const auto& [x, y] :
       relation_pairs(snapshot, Relation::kHostsVsRank)) {
    spec.points.emplace_back(x, y);
  }
  const auto fit = fit_hosts_vs_rank(snapshot);
  spec.fit_line = {{fit.exponent, fit.prefactor}};

  const std::string svg = render_svg(spec);
  CHECK(xml_well_formed(svg));
  const auto cy = extract_attr(svg, "circle", "cy");
  REQUIRE(cy.size() == 10);
  // svg y grows downward, so non-increasing hosts means non-decreasing cy
  for (std::size_t i = 1; i < cy.size(); ++i) {
    CHECK(cy[i] >= cy[i - 1] - 1e-9);
  }
}

TEST_CASE("empty and non-positive specs are rejected") {
  PlotSpec empty;
  try {
    render_svg(empty);
    FAIL("expected empty-plot error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kEmptyPlot);
  }

  PlotSpec bad;
  bad.points = {{1.0, 1.0}, {2.0, 0.0}};
  try {
    render_svg(bad);
    FAIL("expected domain error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDomain);
  }
  CHECK_THROWS_AS(emit_table(bad), Error);
}

TEST_CASE("titles with markup are escaped") {
  PlotSpec spec;
  spec.title = "hits <&> \"quotes\"";
  spec.points = {{1, 2}, {10, 1}};
  const auto svg = render_svg(spec);
  CHECK(xml_well_formed(svg));
  CHECK(svg.find("hits &lt;&amp;&gt;") != std::string::npos);
}

TEST_CASE("output is deterministic and random specs stay well-formed") {
  testsupport::TestRng rng(8);
  for (int round = 0; round < 25; ++round) {
    PlotSpec spec;
    spec.title = "t" + std::to_string(round);
    spec.x_label = "x";
    spec.y_label = "y";
    const int n = 1 + static_cast<int>(rng.uniform(0.0, 40.0));
    for (int i = 0; i < n; ++i) {
      spec.points.emplace_back(std::exp(rng.uniform(-3.0, 8.0)),
                               std::exp(rng.uniform(-3.0, 12.0)));
    }
    if (rng.raw() % 2 == 0) {
      spec.fit_line = {{rng.uniform(-3.0, 3.0), std::exp(rng.uniform(-2.0, 5.0))}};
    }
    const auto svg = render_svg(spec);
    CHECK(xml_well_formed(svg));
    CHECK(render_svg(spec) == svg);
  }
}

TEST_CASE("tables round-trip bit-exactly") {
  testsupport::TestRng rng(9);
  PlotSpec spec;
  for (int i = 0; i < 30; ++i) {
    spec.points.emplace_back(std::exp(rng.uniform(-5.0, 10.0)),
                             std::exp(rng.uniform(-5.0, 15.0)));
  }
  spec.fit_line = {{-1.25, 320.0}};

  const std::string tsv = emit_table(spec);
  std::istringstream lines(tsv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "x\ty\ty_fit");
  std::size_t row = 0;
  while (std::getline(lines, line)) {
    const auto tab1 = line.find('\t');
    const auto tab2 = line.find('\t', tab1 + 1);
    REQUIRE(tab1 != std::string::npos);
    REQUIRE(tab2 != std::string::npos);
    double x = 0.0, y = 0.0;
    REQUIRE(parse_double(line.substr(0, tab1), x));
    REQUIRE(parse_double(line.substr(tab1 + 1, tab2 - tab1 - 1), y));
    CHECK(x == spec.points[row].first);
    CHECK(y == spec.points[row].second);
    ++row;
  }
  CHECK(row == spec.points.size());

  // without a fit line the third column is blank
  spec.fit_line.reset();
  const std::string bare = emit_table(spec);
  std::istringstream bare_lines(bare);
  std::getline(bare_lines, line);
  std::getline(bare_lines, line);
  CHECK(line.back() == '\t');
}

}  // TEST_SUITE
