// Copyright 2026 The ontokit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>

namespace ontokit {

/// SplitMix64 generator. Streams are counter-derived: stream(seed, i) is a
/// pure function of (seed, i), so trial loops stay reproducible regardless of
/// evaluation order. Distributions are implemented here rather than taken
/// from <random>, whose distributions differ between standard libraries.
class Rng {
   public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    static Rng stream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next_u64();
    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform in [0, n).
    std::size_t below(std::size_t n);
    bool coin(double p_true = 0.5) { return uniform() < p_true; }
    /// Standard normal (Box–Muller, one draw per call).
    double normal();

   private:
    std::uint64_t state_;
};

}  // namespace ontokit
