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

#include "ontokit/antidist.h"
#include "ontokit/kernels.h"
#include "ontokit/linalg.h"
#include "ontokit/ontomodel.h"
#include "ontokit/quantum.h"

namespace ontokit::wigner {

inline constexpr double kFrameTol = 1e-10;
inline constexpr double kFrameSumTol = 1e-9;
inline constexpr double kTransferTol = 1e-8;

enum class Algebra { Matrix, Commutative };

/// A representable object: the full matrix algebra 𝕄_n or the commutative ℂ^k.
struct Object {
    Algebra algebra = Algebra::Matrix;
    std::size_t dim = 1;

    static Object matrix(std::size_t n) { return {Algebra::Matrix, n}; }
    static Object commutative(std::size_t k) { return {Algebra::Commutative, k}; }
    bool operator==(const Object &) const = default;
};

/// Largest deviation from each frame condition.
struct FrameCheck {
    std::size_t count = 0;
    double hermitian = 0.0;      // ‖σ − σ†‖
    double unit_trace = 0.0;     // |Tr σ − 1|
    double involution = 0.0;     // ‖σ² − I‖ (matrix) or ‖σ² − σ‖ (commutative)
    double orthogonality = 0.0;  // |Tr(σᵢσⱼ) − c·δᵢⱼ|
    double completeness = 0.0;   // ‖Σσᵢ − c·I‖
    bool ok() const;
};

/// n² (or k) operators with Tr σᵢ = 1, Tr(σᵢσⱼ) = c·δᵢⱼ and Σσᵢ = c·I.
class WignerFrame {
   public:
    /// Verifies the frame conditions; throws VerificationFailed otherwise.
    WignerFrame(Algebra algebra, std::size_t dim, std::vector<ComplexMatrix> operators, double norm_const,
                std::vector<std::string> labels);

    Algebra algebra() const { return algebra_; }
    std::size_t dim() const { return dim_; }
    const std::vector<ComplexMatrix> &operators() const { return ops_; }
    std::size_t size() const { return ops_.size(); }
    double norm_const() const { return c_; }
    /// The ontic space Λ of the frame.
    const kernels::FiniteSpace &space() const { return space_; }

   private:
    Algebra algebra_;
    std::size_t dim_;
    std::vector<ComplexMatrix> ops_;
    double c_;
    kernels::FiniteSpace space_;
};

FrameCheck check_frame(Algebra algebra, std::size_t dim, const std::vector<ComplexMatrix> &ops, double c);
FrameCheck check_frame(const WignerFrame &f);

/// Weyl displacement τ^{qp} X^q Z^p with τ = ω^{(n+1)/2}.
ComplexMatrix displacement(std::size_t n, std::size_t q, std::size_t p);
/// σ_(q,p) = D(q,p) A₀ D(q,p)†, A₀|x⟩ = |−x⟩, indexed q·n + p. Throws
/// EvenDimension for even n.
WignerFrame phase_point_operators(std::size_t n);
/// Diagonal rank-one projectors on ℂ^k, c = 1.
WignerFrame commutative_frame(std::size_t k);
/// {σ⊗τ} with constant c_a·c_b on the product space.
WignerFrame tensor_frame(const WignerFrame &a, const WignerFrame &b);
/// The frame of an object after padding even matrix dimensions.
WignerFrame frame_for(const Object &obj);

struct WignerVector {
    std::size_t dim;
    kernels::Distribution weights;
};

/// vᵢ = Tr(ρσᵢ)/c with ρ = Σ vᵢσᵢ re-verified at 1e-9.
WignerVector wigner_vector(const quantum::DensityMatrix &rho, const WignerFrame &frame);

struct TransferMatrix {
    std::size_t in_dim;
    std::size_t out_dim;
    RealMatrix matrix;         // |out frame| × |in frame|
    double max_imaginary = 0;  // largest discarded imaginary part
};

/// fᵢⱼ = Tr(σᵢ^out f(σⱼ^in)) / c_out.
TransferMatrix transfer_matrix(const quantum::Channel &f, const WignerFrame &in, const WignerFrame &out);

/// Hilbert-space padding d → d+1 on the chosen sides. The extra Kraus
/// element sends the new basis vector to the new output vector when both
/// sides are padded, and to |0⟩ otherwise.
quantum::Channel pad_odd(const quantum::Channel &f, bool pad_in, bool pad_out);
/// Pads every even side.
quantum::Channel pad_odd(const quantum::Channel &f);
quantum::DensityMatrix pad_state(const quantum::DensityMatrix &rho);

kernels::FiniteSpace functor_object(const Object &obj);
/// The signed kernel F(f) between the frame spaces of the (padded) objects.
/// Throws NotTracePreserving, DimMismatch.
kernels::SignedKernel functor_morphism(const quantum::Channel &f, const Object &in, const Object &out);
/// Both endpoints read as matrix algebras.
kernels::SignedKernel functor_morphism(const quantum::Channel &f);

/// σ ↦ u†σu permutes the frame: returns π with u†σᵢu = σ_{π(i)} at 1e-9, or
/// throws VerificationFailed.
std::vector<std::size_t> induced_permutation(const WignerFrame &frame, const ComplexMatrix &u);

struct WignerFragment {
    ontomodel::FunctorFragment fragment;
    std::vector<ontomodel::CompositionTest> tests;
};

/// Objects I, 2 and M<dim>; `pairs` random channel pairs f_k, g_k with their
/// composites, `probes` random pure states psi_k and two-outcome measurements
/// chi_k, and the identity id.
WignerFragment make_fragment(std::size_t dim, std::size_t pairs, std::size_t probes, std::uint64_t seed);

struct MonoidalityReport {
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t trials = 0;
    FrameCheck product_frame;
    double identity_error = 0.0;
    double max_transfer_error = 0.0;
    bool ok() const;
};

/// Frame conditions for {σ⊗τ} and transfer(f⊗g) = transfer(f) ⊗ transfer(g)
/// on seeded random channels 𝕄_m → 𝕄_m, 𝕄_n → 𝕄_n.
MonoidalityReport monoidality_check(std::size_t m, std::size_t n, std::size_t trials, std::uint64_t seed);

struct EpistemicReport {
    antidist::AntidistResult target_psi;
    antidist::AntidistResult target_phi;
    bool anti_distinguishable = false;  // both targets certified
    double overlap = 0.0;               // |⟨ψ|φ⟩|
    double trace_distance = 0.0;        // ½‖ρ − τ‖₁
    double l1_bound = 0.0;              // (n/2)·Σ|vᵢ(ρ) − vᵢ(τ)|
    bool bound_holds = false;           // trace_distance ≤ l1_bound + 1e-9
    double gap = 0.0;                   // l1_bound − trace_distance
};

EpistemicReport epistemic_report(const Ket &psi, const Ket &phi, const WignerFrame &frame);

}  // namespace ontokit::wigner
