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

#include "ranklaw/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "ranklaw/error.hpp"

namespace ranklaw {

namespace {

// Gaussian pairs from mt19937_64 via Box-Muller over explicitly constructed
// 53-bit uniforms. std::normal_distribution is implementation-defined, so
// rolling the mapping by hand keeps the stream identical across standard
// libraries.
class NormalPairSource {
 public:
  explicit NormalPairSource(std::uint64_t seed) : engine_(seed) {}

  std::pair<double, double> next() {
    double u1 = 0.0;
    do {
      u1 = uniform01();
    } while (u1 <= 0.0);
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

 private:
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::mt19937_64 engine_;
};

void validate_spec(const SynthSpec& spec) {
  if (spec.n_sites < 1) {
    throw Error(ErrorKind::kUsage, "n_sites must be at least 1");
  }
  if (!(spec.c_h > 0.0) || !std::isfinite(spec.c_h) || !(spec.c_s > 0.0) ||
      !std::isfinite(spec.c_s)) {
    throw Error(ErrorKind::kUsage, "c_h and c_s must be positive");
  }
  if (!(spec.noise_sigma >= 0.0) || !std::isfinite(spec.noise_sigma)) {
    throw Error(ErrorKind::kUsage, "noise_sigma must be non-negative");
  }
  if (!std::isfinite(spec.alpha) || !std::isfinite(spec.beta)) {
    throw Error(ErrorKind::kUsage, "alpha and beta must be finite");
  }
}

double integerized(double value) {
  // Round half away from zero, then clamp: a listed site was visited at
  // least once.
  return std::max(1.0, std::round(value));
}

}  // namespace

SynthSpec synth_spec_from_json(const nlohmann::json& j) {
  try {
    SynthSpec spec;
    spec.n_sites = j.at("n_sites").get<std::int64_t>();
    spec.alpha = j.at("alpha").get<double>();
    spec.c_h = j.at("c_h").get<double>();
    spec.beta = j.at("beta").get<double>();
    spec.c_s = j.at("c_s").get<double>();
    spec.noise_sigma = j.value("noise_sigma", 0.0);
    spec.integerize = j.value("integerize", false);
    spec.seed = j.value("seed", std::uint64_t{0});
    validate_spec(spec);
    return spec;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::kParse,
                std::string("malformed synth spec: ") + ex.what());
  }
}

nlohmann::ordered_json synth_spec_to_json(const SynthSpec& spec) {
  nlohmann::ordered_json j;
  j["n_sites"] = spec.n_sites;
  j["alpha"] = spec.alpha;
  j["c_h"] = spec.c_h;
  j["beta"] = spec.beta;
  j["c_s"] = spec.c_s;
  j["noise_sigma"] = spec.noise_sigma;
  j["integerize"] = spec.integerize;
  j["seed"] = spec.seed;
  return j;
}

RatingSnapshot generate(const SynthSpec& spec) {
  validate_spec(spec);

  RatingSnapshot snapshot;
  snapshot.category = "synthetic";
  snapshot.period = "seed-" + std::to_string(spec.seed);
  snapshot.rank_key = RankKey::kHosts;
  snapshot.entries.reserve(static_cast<std::size_t>(spec.n_sites));

  NormalPairSource normals(spec.seed);
  for (std::int64_t r = 1; r <= spec.n_sites; ++r) {
    const double rd = static_cast<double>(r);
    double hosts = spec.c_h * std::pow(rd, spec.alpha);
    double hits = spec.c_s * std::pow(rd, spec.beta);
    if (spec.noise_sigma > 0.0) {
      const auto [eps, del] = normals.next();
      hosts *= std::exp(spec.noise_sigma * eps);
      hits *= std::exp(spec.noise_sigma * del);
    }
    if (spec.integerize) {
      hosts = integerized(hosts);
      hits = integerized(hits);
    }
    if (!std::isfinite(hosts) || !std::isfinite(hits)) {
      throw Error(ErrorKind::kDomain,
                  "synthetic values overflow at rank " + std::to_string(r) +
                      "; shrink the prefactors, exponents or noise");
    }
    SiteEntry entry;
    entry.rank = r;
    entry.label = "site-" + std::to_string(r);
    entry.hosts = hosts;
    entry.hits = hits;
    snapshot.entries.push_back(std::move(entry));
  }

  // Noise can perturb the order; re-rank so the snapshot invariants hold.
  return rerank(snapshot, RankKey::kHosts);
}

}  // namespace ranklaw
