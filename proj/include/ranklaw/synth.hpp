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

#ifndef RANKLAW_SYNTH_HPP_
#define RANKLAW_SYNTH_HPP_

#include <cstdint>

#include "json.hpp"
#include "ranklaw/corpus.hpp"

namespace ranklaw {

/// Recipe for a synthetic rating snapshot that follows the two rank laws
///   hosts(r) = c_h * r^alpha * exp(eps_r)
///   hits(r)  = c_s * r^beta  * exp(del_r)
/// with eps, del independent zero-mean Gaussians of standard deviation
/// noise_sigma (multiplicative log-normal noise; the model is
/// multiplicative, so log-space errors stay symmetric).
struct SynthSpec {
  std::int64_t n_sites = 1;
  double alpha = -1.0;
  double c_h = 100.0;
  double beta = -1.0;
  double c_s = 100.0;
  double noise_sigma = 0.0;
  bool integerize = false;  // round half away from zero, clamp at 1
  std::uint64_t seed = 0;
};

SynthSpec synth_spec_from_json(const nlohmann::json& j);
nlohmann::ordered_json synth_spec_to_json(const SynthSpec& spec);

/// Deterministic in the recipe: the same SynthSpec yields a byte-identical
/// snapshot within one build (seeds are pinned per build; the random stream
/// is not promised bit-exact across standard libraries).
///
/// After generation the snapshot is re-ranked by hosts descending so its
/// invariants hold even when noise perturbs the order; rank_key is kHosts.
RatingSnapshot generate(const SynthSpec& spec);

}  // namespace ranklaw

#endif  // RANKLAW_SYNTH_HPP_
