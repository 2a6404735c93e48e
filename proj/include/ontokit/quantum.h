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
#include <vector>

#include "ontokit/linalg.h"
#include "ontokit/random.h"

namespace ontokit::quantum {

/// Hermitian, positive semidefinite, unit trace (all within 1e-9).
class DensityMatrix {
   public:
    explicit DensityMatrix(ComplexMatrix m, double tol = kDerivedTol);
    static DensityMatrix from_ket(const Ket &k) { return DensityMatrix(k.projector()); }

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix &matrix() const { return m_; }

   private:
    ComplexMatrix m_;
};

/// Completely positive map in Kraus form; each Kraus operator is
/// out_dim × in_dim. Trace-preserving channels satisfy Σ K†K = I, the rest
/// are trace non-increasing (Σ K†K ≤ I).
class Channel {
   public:
    Channel(std::size_t in_dim, std::size_t out_dim, std::vector<ComplexMatrix> kraus, bool trace_preserving);

    static Channel identity(std::size_t d);
    static Channel unitary(const ComplexMatrix &u);
    /// ρ ↦ Tr(ρ) I/d.
    static Channel depolarizing(std::size_t d);
    /// C → Cᵈ, 1 ↦ |ψ⟩⟨ψ|.
    static Channel prepare(const Ket &psi);
    /// C → Cᵈ, 1 ↦ ρ (Kraus from the eigendecomposition of ρ).
    static Channel prepare(const DensityMatrix &rho);
    /// Cᵈ → C², ρ ↦ Tr(Eρ)|0⟩⟨0| + Tr((I−E)ρ)|1⟩⟨1|.
    static Channel two_outcome(const ComplexMatrix &effect);

    std::size_t in_dim() const { return in_dim_; }
    std::size_t out_dim() const { return out_dim_; }
    const std::vector<ComplexMatrix> &kraus() const { return kraus_; }
    bool trace_preserving() const { return trace_preserving_; }

   private:
    std::size_t in_dim_;
    std::size_t out_dim_;
    std::vector<ComplexMatrix> kraus_;
    bool trace_preserving_;
};

/// Orthonormal basis measurement; outcome k has projector |φ_k⟩⟨φ_k|.
class ProjectiveMeasurement {
   public:
    explicit ProjectiveMeasurement(std::vector<Ket> outcomes, double tol = kDerivedTol);
    static ProjectiveMeasurement computational(std::size_t d);

    std::size_t dim() const { return outcomes_.front().dim(); }
    std::size_t size() const { return outcomes_.size(); }
    const std::vector<Ket> &outcomes() const { return outcomes_; }
    ComplexMatrix projector(std::size_t k) const { return outcomes_.at(k).projector(); }

   private:
    std::vector<Ket> outcomes_;
};

/// Effect E with 0 ≤ E ≤ I; outcome 0 fires with probability Tr(Eρ).
class TwoOutcomeMeasurement {
   public:
    explicit TwoOutcomeMeasurement(ComplexMatrix effect, double tol = kDerivedTol);

    std::size_t dim() const { return effect_.rows(); }
    const ComplexMatrix &effect() const { return effect_; }
    double probability(const DensityMatrix &rho) const;
    Channel as_channel() const { return Channel::two_outcome(effect_); }

   private:
    ComplexMatrix effect_;
};

/// Tr(P_k ρ), clamped into [0, 1] when it lies within 1e-9 of the interval.
double born(const DensityMatrix &state, const ProjectiveMeasurement &m, std::size_t k);

/// Σ K ρ K† on an arbitrary operator (no positivity or trace checks).
ComplexMatrix apply_map(const Channel &ch, const ComplexMatrix &x);
/// Requires a trace-preserving channel; the output is revalidated.
DensityMatrix apply(const Channel &ch, const DensityMatrix &state);

/// g ∘ f; requires f.out_dim == g.in_dim.
Channel compose(const Channel &g, const Channel &f);
/// f ⊗ g with Kraus set {Fᵢ ⊗ Gⱼ}.
Channel tensor(const Channel &f, const Channel &g);

/// Largest entrywise deviation between the actions of two channels on the
/// matrix-unit basis |i⟩⟨j| of the input space.
double action_distance(const Channel &a, const Channel &b);

Complex overlap(const Ket &psi, const Ket &phi);
/// The measurement a state induces through the Born rule: effect |ψ⟩⟨ψ|.
TwoOutcomeMeasurement dual_state_quantum(const Ket &psi);

/// Frequently used qubit kets.
Ket ket_zero();
Ket ket_one();
Ket ket_plus();
Ket ket_minus();

// Seeded random objects for property tests and randomized checks.
Ket random_ket(std::size_t d, Rng &rng);
/// Ginibre-induced mixed state (G G† / Tr).
DensityMatrix random_density(std::size_t d, Rng &rng);
/// Haar-like unitary from Gram–Schmidt on a complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t d, Rng &rng);
/// Random CPTP channel with `kraus_count` Kraus operators, obtained by
/// slicing a random isometry C^in → C^(kraus_count·out).
Channel random_channel(std::size_t in_dim, std::size_t out_dim, std::size_t kraus_count, Rng &rng);
/// Projector onto a random subspace of the given rank.
ComplexMatrix random_projector(std::size_t d, std::size_t rank, Rng &rng);

}  // namespace ontokit::quantum
