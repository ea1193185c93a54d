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

#include "doctest.h"
#include "oracle.hpp"
#include "ranklaw/error.hpp"
#include "ranklaw/powerfit.hpp"
#include "ranklaw/relation.hpp"

using namespace ranklaw;
using doctest::Approx;

namespace {

PowerLawFit make_fit(Relation relation, double exponent, double prefactor) {
  PowerLawFit fit;
  fit.relation = relation;
  fit.exponent = exponent;
  fit.prefactor = prefactor;
  fit.n_used = 10;
  fit.method = FitMethod::kLoglogOls;
  return fit;
}

}  // namespace

TEST_SUITE("relation") {

TEST_CASE("substitution arithmetic") {
  const auto rel = derive_relation(
      make_fit(Relation::kHostsVsRank, -1.0, 100.0),
      make_fit(Relation::kHitsVsRank, -2.0, 1000.0),
      make_fit(Relation::kHitsVsHosts, 2.0, 0.1));
  CHECK(rel.alpha == -1.0);
  CHECK(rel.beta == -2.0);
  CHECK(rel.gamma_derived == Approx(2.0).epsilon(1e-15));
  CHECK(rel.prefactor_derived == Approx(0.1).epsilon(1e-12));
  CHECK(rel.gamma_direct == 2.0);
  CHECK(rel.gamma_discrepancy == Approx(0.0).epsilon(1e-12));
  CHECK_FALSE(rel.linear_regime);
}

TEST_CASE("the linear case is recognized") {
  const auto rel = derive_relation(
      make_fit(Relation::kHostsVsRank, -1.0, 50.0),
      make_fit(Relation::kHitsVsRank, -1.0, 50.0),
      make_fit(Relation::kHitsVsHosts, 1.0, 1.0));
  CHECK(rel.gamma_derived == Approx(1.0).epsilon(1e-15));
  CHECK(rel.prefactor_derived == Approx(1.0).epsilon(1e-12));
  CHECK(rel.linear_regime);
}

TEST_CASE("linearity tolerance is a knob") {
  const auto host = make_fit(Relation::kHostsVsRank, -1.0, 10.0);
  const auto hit = make_fit(Relation::kHitsVsRank, -1.15, 10.0);
  const auto direct = make_fit(Relation::kHitsVsHosts, 1.15, 1.0);
  CHECK_FALSE(derive_relation(host, hit, direct, 0.1).linear_regime);
  CHECK(derive_relation(host, hit, direct, 0.2).linear_regime);
  CHECK_THROWS_AS(derive_relation(host, hit, direct, 0.0), Error);
}

TEST_CASE("prefactors never affect the linearity verdict") {
  testsupport::TestRng rng(31);
  for (int round = 0; round < 20; ++round) {
    const double alpha = rng.uniform(-3.0, -0.2);
    const double beta = rng.uniform(-3.0, -0.2);
    const auto base = derive_relation(
        make_fit(Relation::kHostsVsRank, alpha, 1.0),
        make_fit(Relation::kHitsVsRank, beta, 1.0),
        make_fit(Relation::kHitsVsHosts, beta / alpha, 1.0));
    const auto scaled = derive_relation(
        make_fit(Relation::kHostsVsRank, alpha, rng.uniform(0.1, 1e4)),
        make_fit(Relation::kHitsVsRank, beta, rng.uniform(0.1, 1e4)),
        make_fit(Relation::kHitsVsHosts, beta / alpha,
                 rng.uniform(0.1, 1e4)));
    CHECK(base.linear_regime == scaled.linear_regime);
  }
}

TEST_CASE("identities hold over random fit values") {
  testsupport::TestRng rng(17);
  for (int round = 0; round < 50; ++round) {
    const double alpha = rng.uniform(-3.0, -0.1);
    const double beta = rng.uniform(-3.0, 3.0);
    const double c_h = std::exp(rng.uniform(-2.0, 8.0));
    const double c_s = std::exp(rng.uniform(-2.0, 8.0));
    const auto rel = derive_relation(
        make_fit(Relation::kHostsVsRank, alpha, c_h),
        make_fit(Relation::kHitsVsRank, beta, c_s),
        make_fit(Relation::kHitsVsHosts, 1.0, 1.0));
    CHECK(rel.gamma_derived * rel.alpha == Approx(rel.beta).epsilon(1e-12));
    CHECK(rel.prefactor_derived ==
          Approx(c_s * std::pow(c_h, -rel.gamma_derived)).epsilon(1e-12));
    CHECK(rel.gamma_discrepancy >= 0.0);
  }
}

TEST_CASE("exact rank laws close the loop through the direct fit") {
  testsupport::TestRng rng(47);
  for (int round = 0; round < 10; ++round) {
    const double alpha = rng.uniform(-3.0, -0.1);
    const double beta = rng.uniform(-3.0, -0.1);
    const double c_h = std::exp(rng.uniform(0.0, 6.0));
    const double c_s = std::exp(rng.uniform(0.0, 6.0));
    const auto snapshot =
        testsupport::exact_law_snapshot(60, alpha, c_h, beta, c_s);
    const auto rel = derive_relation(fit_hosts_vs_rank(snapshot),
                                     fit_hits_vs_rank(snapshot),
                                     fit_hits_vs_hosts(snapshot));
    CHECK(rel.gamma_discrepancy <= 1e-6);
    CHECK(std::fabs(rel.prefactor_direct - rel.prefactor_derived) /
              rel.prefactor_derived <=
          1e-6);
  }
}

TEST_CASE("mismatched fit tags are rejected") {
  const auto host = make_fit(Relation::kHostsVsRank, -1.0, 10.0);
  const auto hit = make_fit(Relation::kHitsVsRank, -2.0, 10.0);
  const auto direct = make_fit(Relation::kHitsVsHosts, 2.0, 1.0);
  try {
    derive_relation(hit, hit, direct);
    FAIL("expected usage error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kUsage);
  }
  CHECK_THROWS_AS(derive_relation(host, direct, direct), Error);
  CHECK_THROWS_AS(derive_relation(host, hit, host), Error);
}

TEST_CASE("a flat hosts law cannot be eliminated") {
  try {
    derive_relation(make_fit(Relation::kHostsVsRank, 0.0, 10.0),
                    make_fit(Relation::kHitsVsRank, -2.0, 10.0),
                    make_fit(Relation::kHitsVsHosts, 2.0, 1.0));
    FAIL("expected division-by-zero error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDivisionByZero);
  }
}

}  // TEST_SUITE
