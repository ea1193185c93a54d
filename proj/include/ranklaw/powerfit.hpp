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

#ifndef RANKLAW_POWERFIT_HPP_
#define RANKLAW_POWERFIT_HPP_

#include <cstdint>
#include <span>
#include <utility>

#include "json.hpp"
#include "ranklaw/corpus.hpp"

namespace ranklaw {

enum class FitMethod { kLoglogOls, kMleTail };

/// Which empirical relation a fit instantiates.
enum class Relation { kHostsVsRank, kHitsVsRank, kHitsVsHosts };

const char* fit_method_name(FitMethod method);
const char* relation_name(Relation relation);
Relation relation_from_name(std::string_view name);

/// A fitted power law y = prefactor * x^exponent with fit-quality
/// diagnostics.
///
/// For kLoglogOls, r_squared is the coefficient of determination in log-log
/// space and exponent_stderr the standard OLS slope error. For kMleTail,
/// exponent is the value-distribution tail exponent (positive by
/// convention) and r_squared is a Kolmogorov-Smirnov pseudo-diagnostic,
/// 1 - D, clamped to [0,1]; the method enum keeps consumers from mixing
/// the two.
struct PowerLawFit {
  double exponent = 0.0;
  double prefactor = 1.0;
  double exponent_stderr = 0.0;
  double r_squared = 0.0;
  std::int64_t n_used = 0;
  std::int64_t n_excluded = 0;
  FitMethod method = FitMethod::kLoglogOls;
  Relation relation = Relation::kHostsVsRank;
};

nlohmann::ordered_json fit_to_json(const PowerLawFit& fit);

/// Ordinary least squares on (ln x, ln y). Pairs with x <= 0, y <= 0 or
/// non-finite components are excluded and counted in n_excluded; no offset
/// smoothing is applied.
///
/// Throws kInsufficientData with fewer than 2 usable pairs and
/// kDegenerateAbscissa when all usable x coincide.
PowerLawFit fit_loglog_ols(std::span<const std::pair<double, double>> pairs,
                           Relation relation);

/// Continuous maximum-likelihood tail-exponent estimator
/// alpha = 1 + n / sum(ln(x_i / x_min)) over values >= x_min, provided as a
/// cross-check on the value distribution of hosts or hits. The prefactor is
/// the implied density normalization (alpha-1) * x_min^(alpha-1).
PowerLawFit fit_mle_tail(std::span<const double> values, double x_min,
                         Relation relation);

PowerLawFit fit_hosts_vs_rank(const RatingSnapshot& snapshot);
PowerLawFit fit_hits_vs_rank(const RatingSnapshot& snapshot);
PowerLawFit fit_hits_vs_hosts(const RatingSnapshot& snapshot);

/// The (x, y) pairs a snapshot contributes to a relation, in rank order and
/// unfiltered; estimators and plots apply their own positivity exclusions.
std::vector<std::pair<double, double>> relation_pairs(
    const RatingSnapshot& snapshot, Relation relation);

}  // namespace ranklaw

#endif  // RANKLAW_POWERFIT_HPP_
