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

#include "ranklaw/relation.hpp"

#include <cmath>
#include <string>

#include "ranklaw/error.hpp"

namespace ranklaw {

namespace {

void require_relation(const PowerLawFit& fit, Relation expected,
                      const char* role) {
  if (fit.relation != expected) {
    throw Error(ErrorKind::kUsage,
                std::string(role) + " fit must be tagged " +
                    relation_name(expected) + ", got " +
                    relation_name(fit.relation));
  }
}

}  // namespace

nlohmann::ordered_json relation_to_json(const DerivedRelation& relation) {
  nlohmann::ordered_json j;
  j["alpha"] = relation.alpha;
  j["beta"] = relation.beta;
  j["gamma_derived"] = relation.gamma_derived;
  j["prefactor_derived"] = relation.prefactor_derived;
  j["gamma_direct"] = relation.gamma_direct;
  j["prefactor_direct"] = relation.prefactor_direct;
  j["gamma_discrepancy"] = relation.gamma_discrepancy;
  j["linear_regime"] = relation.linear_regime;
  return j;
}

DerivedRelation derive_relation(const PowerLawFit& host_fit,
                                const PowerLawFit& hit_fit,
                                const PowerLawFit& direct_fit,
                                double linearity_tolerance) {
  require_relation(host_fit, Relation::kHostsVsRank, "host");
  require_relation(hit_fit, Relation::kHitsVsRank, "hit");
  require_relation(direct_fit, Relation::kHitsVsHosts, "direct");
  if (!(linearity_tolerance > 0.0)) {
    throw Error(ErrorKind::kUsage, "linearity tolerance must be positive");
  }
  if (host_fit.exponent == 0.0) {
    throw Error(ErrorKind::kDivisionByZero,
                "hosts-vs-rank exponent is zero: rank cannot be eliminated "
                "from the rank laws");
  }

  DerivedRelation out;
  out.alpha = host_fit.exponent;
  out.beta = hit_fit.exponent;
  out.gamma_derived = out.beta / out.alpha;
  out.prefactor_derived =
      hit_fit.prefactor * std::pow(host_fit.prefactor, -out.gamma_derived);
  out.gamma_direct = direct_fit.exponent;
  out.prefactor_direct = direct_fit.prefactor;
  out.gamma_discrepancy = std::fabs(out.gamma_derived - out.gamma_direct);
  out.linear_regime = std::fabs(out.gamma_derived - 1.0) <= linearity_tolerance;
  return out;
}

}  // namespace ranklaw
