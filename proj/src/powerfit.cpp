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

#include "ranklaw/powerfit.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ranklaw/error.hpp"

namespace ranklaw {

namespace {

bool usable_pair(double x, double y) {
  return std::isfinite(x) && std::isfinite(y) && x > 0.0 && y > 0.0;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

const char* fit_method_name(FitMethod method) {
  return method == FitMethod::kLoglogOls ? "loglog_ols" : "mle_tail";
}

const char* relation_name(Relation relation) {
  switch (relation) {
    case Relation::kHostsVsRank: return "hosts_vs_rank";
    case Relation::kHitsVsRank: return "hits_vs_rank";
    case Relation::kHitsVsHosts: return "hits_vs_hosts";
  }
  return "unknown";
}

Relation relation_from_name(std::string_view name) {
  if (name == "hosts_vs_rank" || name == "hosts-vs-rank")
    return Relation::kHostsVsRank;
  if (name == "hits_vs_rank" || name == "hits-vs-rank")
    return Relation::kHitsVsRank;
  if (name == "hits_vs_hosts" || name == "hits-vs-hosts")
    return Relation::kHitsVsHosts;
  throw Error(ErrorKind::kUsage,
              "unknown relation '" + std::string(name) + "'");
}

nlohmann::ordered_json fit_to_json(const PowerLawFit& fit) {
  nlohmann::ordered_json j;
  j["exponent"] = fit.exponent;
  j["prefactor"] = fit.prefactor;
  j["exponent_stderr"] = fit.exponent_stderr;
  j["r_squared"] = fit.r_squared;
  j["n_used"] = fit.n_used;
  j["n_excluded"] = fit.n_excluded;
  j["method"] = fit_method_name(fit.method);
  j["relation"] = relation_name(fit.relation);
  return j;
}

PowerLawFit fit_loglog_ols(std::span<const std::pair<double, double>> pairs,
                           Relation relation) {
  std::vector<double> lx;
  std::vector<double> ly;
  lx.reserve(pairs.size());
  ly.reserve(pairs.size());
  for (const auto& [x, y] : pairs) {
    if (!usable_pair(x, y)) continue;
    lx.push_back(std::log(x));
    ly.push_back(std::log(y));
  }

  const auto n = lx.size();
  const std::string where = relation_name(relation);
  if (n < 2) {
    throw Error(ErrorKind::kInsufficientData,
                where + ": need at least 2 positive points, have " +
                    std::to_string(n));
  }
  if (std::all_of(lx.begin(), lx.end(),
                  [&](double v) { return v == lx.front(); })) {
    throw Error(ErrorKind::kDegenerateAbscissa,
                where + ": all usable x values are identical");
  }

  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += lx[i];
    mean_y += ly[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = lx[i] - mean_x;
    const double dy = ly[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }

  const double slope = sxy / sxx;
  const double intercept = mean_y - slope * mean_x;
  const double ss_res = std::max(0.0, syy - slope * sxy);

  PowerLawFit fit;
  fit.exponent = slope;
  fit.prefactor = std::exp(intercept);
  // Constant y is a perfect zero-slope fit, not an undefined one.
  fit.r_squared = syy > 0.0 ? clamp01((sxy * sxy) / (sxx * syy)) : 1.0;
  fit.exponent_stderr =
      n > 2 ? std::sqrt(ss_res / (static_cast<double>(n - 2) * sxx)) : 0.0;
  fit.n_used = static_cast<std::int64_t>(n);
  fit.n_excluded = static_cast<std::int64_t>(pairs.size() - n);
  fit.method = FitMethod::kLoglogOls;
  fit.relation = relation;
  return fit;
}

PowerLawFit fit_mle_tail(std::span<const double> values, double x_min,
                         Relation relation) {
  if (!(x_min > 0.0) || !std::isfinite(x_min)) {
    throw Error(ErrorKind::kDomain, "x_min must be a positive finite value");
  }

  std::vector<double> tail;
  tail.reserve(values.size());
  for (double v : values) {
    if (std::isfinite(v) && v >= x_min) tail.push_back(v);
  }
  const auto n = tail.size();
  const std::string where = relation_name(relation);
  if (n < 2) {
    throw Error(ErrorKind::kInsufficientData,
                where + ": need at least 2 values >= x_min, have " +
                    std::to_string(n));
  }

  double sum_log = 0.0;
  for (double v : tail) sum_log += std::log(v / x_min);
  if (!(sum_log > 0.0)) {
    throw Error(ErrorKind::kDegenerateData,
                where + ": all tail values equal x_min");
  }

  const double nd = static_cast<double>(n);
  const double alpha = 1.0 + nd / sum_log;

  // Kolmogorov-Smirnov distance between the empirical tail CDF and the
  // fitted one, F(x) = 1 - (x_min/x)^(alpha-1).
  std::sort(tail.begin(), tail.end());
  double ks = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double cdf = 1.0 - std::pow(x_min / tail[i], alpha - 1.0);
    const double lo = static_cast<double>(i) / nd;
    const double hi = static_cast<double>(i + 1) / nd;
    ks = std::max(ks, std::max(std::fabs(cdf - lo), std::fabs(hi - cdf)));
  }

  PowerLawFit fit;
  fit.exponent = alpha;
  fit.prefactor = (alpha - 1.0) * std::pow(x_min, alpha - 1.0);
  fit.exponent_stderr = (alpha - 1.0) / std::sqrt(nd);
  fit.r_squared = clamp01(1.0 - ks);
  fit.n_used = static_cast<std::int64_t>(n);
  fit.n_excluded = static_cast<std::int64_t>(values.size() - n);
  fit.method = FitMethod::kMleTail;
  fit.relation = relation;
  return fit;
}

PowerLawFit fit_hosts_vs_rank(const RatingSnapshot& snapshot) {
  auto pairs = relation_pairs(snapshot, Relation::kHostsVsRank);
  return fit_loglog_ols(pairs, Relation::kHostsVsRank);
}

PowerLawFit fit_hits_vs_rank(const RatingSnapshot& snapshot) {
  auto pairs = relation_pairs(snapshot, Relation::kHitsVsRank);
  return fit_loglog_ols(pairs, Relation::kHitsVsRank);
}

PowerLawFit fit_hits_vs_hosts(const RatingSnapshot& snapshot) {
  auto pairs = relation_pairs(snapshot, Relation::kHitsVsHosts);
  return fit_loglog_ols(pairs, Relation::kHitsVsHosts);
}

std::vector<std::pair<double, double>> relation_pairs(
    const RatingSnapshot& snapshot, Relation relation) {
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(snapshot.entries.size());
  for (const auto& entry : snapshot.entries) {
    switch (relation) {
      case Relation::kHostsVsRank:
        pairs.emplace_back(static_cast<double>(entry.rank), entry.hosts);
        break;
      case Relation::kHitsVsRank:
        pairs.emplace_back(static_cast<double>(entry.rank), entry.hits);
        break;
      case Relation::kHitsVsHosts:
        pairs.emplace_back(entry.hosts, entry.hits);
        break;
    }
  }
  return pairs;
}

}  // namespace ranklaw
