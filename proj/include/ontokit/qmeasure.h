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

#include <cstdint>
#include <string>
#include <vector>

#include "ontokit/kernels.h"
#include "ontokit/linalg.h"

namespace ontokit::qmeasure {

/// Subsets are bitmasks over the points, so spaces stay at ≤ 16 points.
inline constexpr std::size_t kMaxPoints = 16;
inline constexpr double kMeasureTol = 1e-9;

using Subset = std::uint32_t;

/// A set function on all 2^|Λ| subsets; values[U] with U a bitmask.
class QuantumMeasure {
   public:
    /// Throws TooLarge beyond kMaxPoints and DimMismatch unless there is one
    /// value per subset.
    QuantumMeasure(kernels::FiniteSpace space, std::vector<double> values);

    const kernels::FiniteSpace &space() const { return space_; }
    const std::vector<double> &values() const { return values_; }
    double operator()(Subset u) const { return values_.at(u); }
    Subset full() const { return static_cast<Subset>(values_.size() - 1); }

   private:
    kernels::FiniteSpace space_;
    std::vector<double> values_;
};

struct TripleViolation {
    Subset u, v, w;
    double lhs;  // μ(U∪V∪W)
    double rhs;  // μ(U∪V) + μ(U∪W) + μ(V∪W) − μ(U) − μ(V) − μ(W)
};

struct KolmogorovViolation {
    Subset u, v;  // disjoint, nonempty
    double joint;
    double sum;
};

struct MeasureReport {
    std::vector<Subset> negative;  // μ(U) < −tol
    double normalization = 0.0;    // μ(Λ)
    bool normalized = false;
    std::size_t triples = 0;       // pairwise-disjoint triples examined
    std::vector<TripleViolation> sum_rule;
    double max_sum_rule_error = 0.0;
    /// Disjoint pairs where μ fails plain additivity; expected for genuinely
    /// quantum measures, reported for information.
    std::vector<KolmogorovViolation> additivity;
    bool ok() const { return negative.empty() && normalized && sum_rule.empty(); }
};

/// Positivity, normalization and the three-set sum rule over every ordered
/// triple of pairwise-disjoint subsets. At most `max_listed` violations of
/// each kind are stored; the counters cover all of them.
MeasureReport validate_quantum_measure(const QuantumMeasure &q, double tol = kMeasureTol, std::size_t max_listed = 32);

/// 𝒟({x}, {y}) on singletons, extended bi-additively.
class DecoherenceFunctional {
   public:
    /// Throws TooLarge beyond kMaxPoints and DimMismatch for a non-square or
    /// mis-sized table. No validity checks here; see validate_decoherence.
    DecoherenceFunctional(kernels::FiniteSpace space, ComplexMatrix singletons);

    const kernels::FiniteSpace &space() const { return space_; }
    const ComplexMatrix &singletons() const { return d_; }
    /// 𝒟(U, V) = Σ_{x∈U, y∈V} 𝒟({x},{y}).
    Complex operator()(Subset u, Subset v) const;

   private:
    kernels::FiniteSpace space_;
    ComplexMatrix d_;
};

struct DecoherenceReport {
    double hermitian_error = 0.0;
    Complex normalization;
    double min_eigenvalue = 0.0;
    std::size_t families_checked = 0;       // random subset families
    double min_family_eigenvalue = 0.0;
    bool hermitian = false;
    bool normalized = false;
    bool strongly_positive = false;
    bool ok() const { return hermitian && normalized && strongly_positive; }
};

/// Hermiticity, 𝒟(Λ,Λ) = 1 and strong positivity on the singleton matrix,
/// plus a seeded spot check on random families of ≤ 5 subsets.
DecoherenceReport validate_decoherence(const DecoherenceFunctional &d, double tol = kMeasureTol,
                                       std::size_t families = 64, std::uint64_t seed = 0);

/// μ(U) = 𝒟(U, U). Throws InvalidFunctional when validate_decoherence fails.
QuantumMeasure measure_from_decoherence(const DecoherenceFunctional &d);

/// 𝒟({x},{y}) = ψ_x ψ_y* / |Σψ|², so that 𝒟(Λ,Λ) = 1 and
/// μ(U) = |Σ_{x∈U} ψ_x|² / |Σ_x ψ_x|². Throws InvalidFunctional when Σψ = 0.
DecoherenceFunctional interference_functional(const kernels::FiniteSpace &space, const std::vector<Complex> &psi);

}  // namespace ontokit::qmeasure
