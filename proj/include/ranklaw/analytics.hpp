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

#ifndef RANKLAW_ANALYTICS_HPP_
#define RANKLAW_ANALYTICS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ranklaw/corpus.hpp"
#include "ranklaw/powerfit.hpp"

namespace ranklaw {

struct SiteResidual {
  std::int64_t rank = 0;
  std::string label;
  double observed = 0.0;
  double predicted = 0.0;
  double log_residual = 0.0;  // ln(observed) - ln(predicted)
  double zscore = 0.0;
};

/// Per-site deviations from a fitted law. Residuals are taken in log space
/// (the model is multiplicative); zscore divides by the population standard
/// deviation of the log residuals, and ranks whose |zscore| exceeds the
/// threshold land in flagged, sorted ascending.
struct AnomalyReport {
  Relation relation = Relation::kHitsVsHosts;
  std::vector<SiteResidual> per_site;  // exactly the sites that entered the fit
  double residual_std = 0.0;
  std::vector<std::int64_t> flagged;
  double threshold = 0.0;
};

inline constexpr double kDefaultAnomalyThreshold = 2.0;

nlohmann::ordered_json anomaly_report_to_json(const AnomalyReport& report);

/// Scores every site that entered the fit. The fit must have been produced
/// from this snapshot's pairs for the given relation; a relation or count
/// mismatch is a usage error. residual_std of zero (all residuals equal)
/// yields all-zero zscores and an empty flagged list.
AnomalyReport score_anomalies(const RatingSnapshot& snapshot,
                              const PowerLawFit& fit,
                              double threshold = kDefaultAnomalyThreshold);

struct PagesPerHostRow {
  std::int64_t rank = 0;
  std::optional<double> s_over_h;  // undefined when the site has no hosts
};

struct PagesPerHost {
  std::vector<PagesPerHostRow> per_site;
  double aggregate = 0.0;  // total hits / total hosts, raw column totals
};

/// Average viewed pages per visitor, per site and in aggregate.
/// Throws kUndefinedAggregate when the snapshot has no hosts at all.
PagesPerHost pages_per_host(const RatingSnapshot& snapshot);

/// Evaluates the hits-vs-hosts law at a (possibly fractional) host count.
double predict_hits(double hosts, const PowerLawFit& relation_fit);

/// Evaluates a rank law forward: prefactor * rank^exponent.
double predict_by_rank(double rank, const PowerLawFit& fit);

/// Inverts a rank law: the rank at which the law attains `value`,
/// (value / prefactor)^(1 / exponent). Zero exponent is not invertible.
double invert_rank(double value, const PowerLawFit& fit);

}  // namespace ranklaw

#endif  // RANKLAW_ANALYTICS_HPP_
