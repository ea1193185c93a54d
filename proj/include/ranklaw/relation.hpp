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

#ifndef RANKLAW_RELATION_HPP_
#define RANKLAW_RELATION_HPP_

#include "json.hpp"
#include "ranklaw/powerfit.hpp"

namespace ranklaw {

/// The hits-vs-hosts law S = C * H^gamma in both of its forms: derived by
/// eliminating rank between the hosts-vs-rank law (exponent alpha) and the
/// hits-vs-rank law (exponent beta), and fitted directly from per-site
/// (hosts, hits) pairs.
///
/// gamma_derived = beta / alpha and
/// prefactor_derived = C_s * C_h^(-beta/alpha) hold as arithmetic
/// identities over the stored fields. The two routes agree exactly on data
/// that follows both rank laws without noise; on real data the discrepancy
/// is reported, never judged.
struct DerivedRelation {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma_derived = 0.0;
  double prefactor_derived = 1.0;
  double gamma_direct = 0.0;
  double prefactor_direct = 1.0;
  double gamma_discrepancy = 0.0;
  bool linear_regime = false;
};

inline constexpr double kDefaultLinearityTolerance = 0.1;

nlohmann::ordered_json relation_to_json(const DerivedRelation& relation);

/// Combines the two rank fits with the direct fit. linear_regime is the
/// predicate |gamma_derived - 1| <= linearity_tolerance.
///
/// Throws kUsage on mismatched relation tags and kDivisionByZero when
/// host_fit.exponent is 0 (rank has no explanatory power over hosts, so it
/// cannot be eliminated).
DerivedRelation derive_relation(
    const PowerLawFit& host_fit, const PowerLawFit& hit_fit,
    const PowerLawFit& direct_fit,
    double linearity_tolerance = kDefaultLinearityTolerance);

}  // namespace ranklaw

#endif  // RANKLAW_RELATION_HPP_
