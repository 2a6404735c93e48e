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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ontokit/kernels.h"
#include "ontokit/linalg.h"
#include "ontokit/quantum.h"

namespace ontokit::antidist {

inline constexpr double kCertificateTol = 1e-7;

struct AntidistProblem {
    std::vector<kernels::Distribution> ensemble;  // common space, may be signed
    std::size_t target = 0;
};

struct AntidistCertificate {
    kernels::ResponseFunction response;
    double on_target = 0.0;  // ⟨χ∘ψ⟩, ≈ 0
    double on_others = 0.0;  // Σ_{φ≠ψ} ⟨χ∘φ⟩, ≈ 1
};

/// Dual witness for infeasibility: a direction u = (u_target, u_others) with
/// u_others > Σᵢ max(0, u·(wᵢ^target, wᵢ^others)) + margin, so no response in
/// [0,1]^k can reach the point (0, 1).
struct Refutation {
    double u_target = 0.0;
    double u_others = 0.0;
    double margin = 0.0;
};

struct AntidistResult {
    std::optional<AntidistCertificate> certificate;
    std::optional<Refutation> refutation;
    bool certified() const { return certificate.has_value(); }
};

/// Decides whether some χ ∈ [0,1]^k satisfies Σ χ·w_target = 0 and
/// Σ_{others} χ·w = 1. The image of the box under χ ↦ (χ·a, χ·b) is a planar
/// zonotope, so feasibility is a point-in-zonotope test: it is decided by the
/// support function along every edge normal (exact; no iterative solver), and
/// a feasible χ is assembled from the zonotope's 0/1 vertices.
AntidistResult antidist_classical(const AntidistProblem &p);

/// Definition-level check: every member of the ensemble is anti-distinguishable.
bool ensemble_antidistinguishable(const std::vector<kernels::Distribution> &ensemble);

/// A single |Ψ|-outcome measurement whose k-th outcome never fires on the
/// k-th state (the measurement style of the PBR argument). Nonnegative
/// distributions only; returns the responses or nullopt.
std::optional<std::vector<kernels::ResponseFunction>> antidist_joint(
    const std::vector<kernels::Distribution> &ensemble);

/// True iff born(state_i, m, assignment[i]) ≤ 1e-9 for every i.
bool antidist_quantum_check(const std::vector<Ket> &states, const quantum::ProjectiveMeasurement &m,
                            const std::vector<std::size_t> &assignment);
bool antidist_quantum_check(const std::vector<quantum::DensityMatrix> &states,
                            const quantum::ProjectiveMeasurement &m, const std::vector<std::size_t> &assignment);

/// The entangled two-qubit basis χ₁..χ₄ (qubit A is the major index).
quantum::ProjectiveMeasurement pbr_measurement();

/// Candidate readings of the K₀ = |0⟩⟨0| + tan(·)|1⟩⟨1| parameter.
enum class GammaConvention { TanOfOverlap, TanOfArcsin, TanOfArccos };
std::string_view convention_name(GammaConvention c);

struct CompressionCandidate {
    GammaConvention convention;
    double tan_parameter;     // NaN when the reading gives |t| > 1
    double residual_zero;     // ‖𝓔(ψ⊗ⁿ) − |0⟩⟨0|‖_max
    double residual_plus;     // ‖𝓔(φ⊗ⁿ) − |+⟩⟨+|‖_max
    bool passed;
};

/// Largest d^n for which the channel is also materialized on (Cᵈ)^⊗n.
inline constexpr std::size_t kMaxExplicitCompressionDim = 256;

struct CompressionResult {
    std::size_t n = 0;
    double overlap = 0.0;   // |⟨ψ|φ⟩|
    double gamma = 0.0;     // |⟨ψ|φ⟩|ⁿ
    GammaConvention convention = GammaConvention::TanOfArcsin;
    double tan_parameter = 0.0;
    std::vector<CompressionCandidate> candidates;
    /// 𝓔 restricted to span{ψ⊗ⁿ, φ⊗ⁿ} in the orthonormal basis
    /// (ψ⊗ⁿ, normalized component of e^{-iθ}φ⊗ⁿ orthogonal to ψ⊗ⁿ).
    quantum::Channel span_channel;
    /// Coordinates of ψ⊗ⁿ and the phase-aligned φ⊗ⁿ in that basis.
    Ket psi_coords;
    Ket phi_coords;
    /// The full CPTP map (Cᵈ)^⊗n → C² when d^n ≤ kMaxExplicitCompressionDim.
    std::optional<quantum::Channel> full_channel;
    double output_overlap = 0.0;  // |⟨0|+⟩| recovered from the outputs
};

/// Builds and verifies the two-Kraus compression map sending ψ⊗ⁿ ↦ |0⟩⟨0| and
/// φ⊗ⁿ ↦ |+⟩⟨+|. `n` is auto-selected as the least n with |⟨ψ|φ⟩|ⁿ ≤ 1/√2.
/// Throws BadOverlap unless 0 < |⟨ψ|φ⟩| < 1 and VerificationFailed when no
/// parametrization reproduces the outputs within 1e-8.
CompressionResult compression_channel(const Ket &psi, const Ket &phi, std::optional<std::size_t> n = std::nullopt);

/// Least n ≥ 1 with overlapⁿ ≤ 1/√2.
std::size_t auto_copies(double overlap);

struct PbrReport {
    CompressionResult compression;
    /// Rows: ψψ, ψφ, φψ, φφ (after compression |00⟩, |0+⟩, |+0⟩, |++⟩);
    /// columns: χ₁..χ₄.
    std::array<std::array<double, 4>, 4> table{};
    std::array<double, 4> assigned{};  // table[i][i]
    bool anti_distinguished = false;
    double max_row_sum_error = 0.0;
};

PbrReport pbr_demo(const Ket &psi, const Ket &phi, std::optional<std::size_t> n = std::nullopt);

struct LemmaCheck {
    std::string name;
    std::size_t premises = 0;
    std::size_t violations = 0;
    /// First violating pair as (weights of μ, weights of ν).
    std::optional<std::pair<std::vector<double>, std::vector<double>>> counterexample;
    bool ok() const { return violations == 0; }
};

struct LemmaReport {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<LemmaCheck> checks;
    bool ok() const;
    const LemmaCheck &check(const std::string &name) const;
};

/// Randomized suite over probability-distribution pairs on spaces of size
/// ≤ 5. Checks, per trial:
///  - "ntensor_n2", "ntensor_n3": {μ⊗ⁿ, ν⊗ⁿ} anti-distinguishable ⇒ {μ, ν} is;
///  - "four_family": {νν, νμ, μν, μμ} anti-distinguishable (per member) ⇒ {μ, ν} is;
///  - "four_family_joint": the same premise with one 4-outcome measurement;
///  - "product_overlap": D(μ,ν) < 1 ⇒ D(μ⊗μ, ν⊗ν) < 1;
///  - "disjoint_support": {μ, ν} anti-distinguishable ⇔ disjoint supports.
LemmaReport lemma_suite(std::size_t trials, std::uint64_t seed);

}  // namespace ontokit::antidist
