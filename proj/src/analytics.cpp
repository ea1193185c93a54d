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

#include "ranklaw/analytics.hpp"

#include <cmath>
#include <string>

#include "ranklaw/error.hpp"

namespace ranklaw {

namespace {

// Below this the residual spread is floating-point noise, not signal;
// treating it as zero keeps exact-law data from flagging its own rounding.
constexpr double kResidualStdFloor = 1e-12;

struct Observation {
  std::int64_t rank;
  const std::string* label;
  double x;
  double y;
};

std::vector<Observation> usable_observations(const RatingSnapshot& snapshot,
                                             Relation relation) {
  std::vector<Observation> obs;
  obs.reserve(snapshot.entries.size());
  for (const auto& entry : snapshot.entries) {
    double x = 0.0;
    double y = 0.0;
    switch (relation) {
      case Relation::kHostsVsRank:
        x = static_cast<double>(entry.rank);
        y = entry.hosts;
        break;
      case Relation::kHitsVsRank:
        x = static_cast<double>(entry.rank);
        y = entry.hits;
        break;
      case Relation::kHitsVsHosts:
        x = entry.hosts;
        y = entry.hits;
        break;
    }
    if (std::isfinite(x) && std::isfinite(y) && x > 0.0 && y > 0.0) {
      obs.push_back({entry.rank, &entry.label, x, y});
    }
  }
  return obs;
}

void require_rank_relation(const PowerLawFit& fit) {
  if (fit.relation == Relation::kHitsVsHosts) {
    throw Error(ErrorKind::kUsage,
                "fit must be a rank relation (hosts_vs_rank or "
                "hits_vs_rank), got hits_vs_hosts");
  }
}

double require_positive_finite(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorKind::kDomain,
                std::string(name) + " must be a positive finite value");
  }
  return value;
}

}  // namespace

nlohmann::ordered_json anomaly_report_to_json(const AnomalyReport& report) {
  nlohmann::ordered_json j;
  j["relation"] = relation_name(report.relation);
  auto per_site = nlohmann::ordered_json::array();
  for (const auto& site : report.per_site) {
    nlohmann::ordered_json s;
    s["rank"] = site.rank;
    s["label"] = site.label;
    s["observed"] = site.observed;
    s["predicted"] = site.predicted;
    s["log_residual"] = site.log_residual;
    s["zscore"] = site.zscore;
    per_site.push_back(std::move(s));
  }
  j["per_site"] = std::move(per_site);
  j["residual_std"] = report.residual_std;
  j["flagged"] = report.flagged;
  j["threshold"] = report.threshold;
  return j;
}

AnomalyReport score_anomalies(const RatingSnapshot& snapshot,
                              const PowerLawFit& fit, double threshold) {
  if (!(threshold > 0.0) || !std::isfinite(threshold)) {
    throw Error(ErrorKind::kUsage, "anomaly threshold must be positive");
  }
  auto obs = usable_observations(snapshot, fit.relation);
  if (static_cast<std::int64_t>(obs.size()) != fit.n_used) {
    throw Error(ErrorKind::kUsage,
                std::string("fit does not match snapshot: fit used ") +
                    std::to_string(fit.n_used) + " points, snapshot has " +
                    std::to_string(obs.size()) + " usable " +
                    relation_name(fit.relation) + " points");
  }

  AnomalyReport report;
  report.relation = fit.relation;
  report.threshold = threshold;
  report.per_site.reserve(obs.size());

  const double log_prefactor = std::log(fit.prefactor);
  double sum = 0.0;
  for (const auto& o : obs) {
    SiteResidual site;
    site.rank = o.rank;
    site.label = *o.label;
    site.observed = o.y;
    site.predicted = fit.prefactor * std::pow(o.x, fit.exponent);
    site.log_residual =
        std::log(o.y) - (log_prefactor + fit.exponent * std::log(o.x));
    sum += site.log_residual;
    report.per_site.push_back(std::move(site));
  }

  const double n = static_cast<double>(report.per_site.size());
  const double mean = sum / n;
  double var = 0.0;
  for (const auto& site : report.per_site) {
    const double d = site.log_residual - mean;
    var += d * d;
  }
  report.residual_std = std::sqrt(var / n);

  if (report.residual_std > kResidualStdFloor) {
    for (auto& site : report.per_site) {
      site.zscore = site.log_residual / report.residual_std;
      if (std::fabs(site.zscore) > threshold) {
        report.flagged.push_back(site.rank);
      }
    }
  }
  // per_site follows snapshot order, so flagged is already ascending.
  return report;
}

PagesPerHost pages_per_host(const RatingSnapshot& snapshot) {
  PagesPerHost result;
  result.per_site.reserve(snapshot.entries.size());
  double total_hosts = 0.0;
  double total_hits = 0.0;
  for (const auto& entry : snapshot.entries) {
    PagesPerHostRow row;
    row.rank = entry.rank;
    if (entry.hosts > 0.0) {
      row.s_over_h = entry.hits / entry.hosts;
    }
    result.per_site.push_back(row);
    total_hosts += entry.hosts;
    total_hits += entry.hits;
  }
  if (!(total_hosts > 0.0)) {
    throw Error(ErrorKind::kUndefinedAggregate,
                "total hosts is zero, aggregate pages per host undefined");
  }
  result.aggregate = total_hits / total_hosts;
  return result;
}

double predict_hits(double hosts, const PowerLawFit& relation_fit) {
  if (relation_fit.relation != Relation::kHitsVsHosts) {
    throw Error(ErrorKind::kUsage,
                std::string("predict_hits needs a hits_vs_hosts fit, got ") +
                    relation_name(relation_fit.relation));
  }
  require_positive_finite(hosts, "hosts");
  return relation_fit.prefactor * std::pow(hosts, relation_fit.exponent);
}

double predict_by_rank(double rank, const PowerLawFit& fit) {
  require_rank_relation(fit);
  require_positive_finite(rank, "rank");
  return fit.prefactor * std::pow(rank, fit.exponent);
}

double invert_rank(double value, const PowerLawFit& fit) {
  require_rank_relation(fit);
  require_positive_finite(value, "value");
  if (fit.exponent == 0.0) {
    throw Error(ErrorKind::kNonInvertible,
                "law with zero exponent cannot be inverted");
  }
  return std::pow(value / fit.prefactor, 1.0 / fit.exponent);
}

}  // namespace ranklaw
