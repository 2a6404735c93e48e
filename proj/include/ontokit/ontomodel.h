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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ontokit/kernels.h"
#include "ontokit/linalg.h"
#include "ontokit/quantum.h"

namespace ontokit::ontomodel {

inline constexpr double kBornTol = 1e-7;
/// Strict inequalities such as D < 1 are tested with this margin.
inline constexpr double kStrictMargin = 1e-9;
inline constexpr double kFunctorTol = 1e-8;

struct OntMeasurement {
    quantum::ProjectiveMeasurement basis;
    std::vector<kernels::ResponseFunction> responses;  // ξ_k, one per outcome
};

/// Finite restriction of an ontological model: an ontic space, a catalog of
/// named pure states with their distributions, and measurements with their
/// response functions.
struct OntModel {
    kernels::FiniteSpace ontic;
    std::vector<std::pair<std::string, Ket>> states;
    std::map<std::string, kernels::Distribution> distributions;
    std::vector<OntMeasurement> measurements;

    const kernels::Distribution &distribution(const std::string &label) const;
};

struct BornDeviation {
    std::string state;
    std::size_t measurement;
    std::size_t outcome;
    double born;
    double reproduced;
};

struct SumRuleViolation {
    std::size_t measurement;
    std::size_t point;
    double sum;
};

struct ModelReport {
    std::vector<std::string> structural;  // malformed pieces, one message each
    std::vector<BornDeviation> born;
    std::vector<SumRuleViolation> sum_rule;
    double max_born_deviation = 0.0;
    bool ok() const { return structural.empty() && born.empty() && sum_rule.empty(); }
};

ModelReport validate_model(const OntModel &m, double tol = kBornTol);

/// Λ = the catalog itself, μ_ψ = δ_ψ, ξ_k(φ) = |⟨φ_k|φ⟩|².
OntModel dirac_restriction_model(const std::vector<std::pair<std::string, Ket>> &catalog,
                                 const std::vector<quantum::ProjectiveMeasurement> &measurements);

struct Classification {
    bool epistemic = false;
    std::optional<std::pair<std::string, std::string>> witness;
    double witness_distance = 1.0;  // D(μ_ψ, μ_φ) of the witness
};

/// Epistemic iff some catalog pair has 0 < |⟨ψ|φ⟩| < 1 and D(μ_ψ, μ_φ) < 1,
/// each strict inequality taken with kStrictMargin.
Classification classify_model(const OntModel &m);

struct PairViolation {
    std::string psi;
    std::string phi;
    double measure;  // μ_ψ(Λ_φ)
    double born;     // |⟨φ|ψ⟩|²
};

struct MaximalReport {
    bool maximally_epistemic = true;
    bool maximally_nontrivial = true;
    std::vector<PairViolation> epistemic_violations;
    std::vector<PairViolation> nontrivial_violations;
};

/// Checks μ_ψ(Λ_φ) = |⟨φ|ψ⟩|² and (⟨φ|ψ⟩ = 0 ⇔ μ_ψ(Λ_φ) = 0) over all ordered
/// catalog pairs, where Λ_φ is the support of μ_φ.
MaximalReport maximal_predicates(const OntModel &m, double tol = kBornTol);

/// One quantum channel and its image under a candidate functor.
struct MorphismImage {
    std::string name;
    std::string source;  // object names; "I" is the unit, "2" the distinguished object
    std::string target;
    quantum::Channel channel;
    kernels::SignedKernel image;
};

/// Finite table of a functor on objects and morphisms.
struct FunctorFragment {
    std::map<std::string, kernels::FiniteSpace> objects;
    std::vector<MorphismImage> morphisms;

    /// Throws MissingMorphism.
    const MorphismImage &morphism(const std::string &name) const;
};

/// `composite` must be the tabulated image of outer ∘ inner.
struct CompositionTest {
    std::string outer;
    std::string inner;
    std::string composite;
};

struct OperationalReport {
    std::vector<std::string> failures;
    std::size_t compositions = 0;
    std::size_t identities = 0;
    std::size_t evaluations = 0;
    double max_composition_error = 0.0;
    double max_identity_error = 0.0;
    double max_evaluation_error = 0.0;
    bool ok() const { return failures.empty(); }
};

/// Checks F(I) = I and F(2) = 2, that every image lives between the images of
/// its endpoints, F(g∘f) = F(g)∘F(f) for the listed tests, F(id) = id for
/// every tabulated identity channel, and ⟨F(χ)∘F(ψ)⟩ = ⟨χ∘ψ⟩ for every
/// tabulated state ψ : I → A and measurement χ : A → 2.
OperationalReport check_operational_model(const FunctorFragment &frag, const std::vector<CompositionTest> &tests,
                                          double tol = kFunctorTol);

/// A set-valued action on singletons, extended by unions. For a channel
/// f : A → B the entry for point j of F(B) is the subset f·{j} ⊆ F(A), so
/// that F(f∘ψ)(∗, U) = F(ψ)(∗, f·U).
struct ActionTable {
    std::map<std::string, std::vector<std::vector<std::size_t>>> images;

    /// Throws MissingAction.
    std::vector<std::size_t> act(const std::string &channel, const std::vector<std::size_t> &subset) const;
};

struct EquivarianceReport {
    std::vector<std::string> failures;
    std::size_t checks = 0;
    double max_error = 0.0;
    bool ok() const { return failures.empty(); }
};

/// Verifies F(f∘ψ)(∗, {j}) = F(ψ)(∗, f·{j}) for every listed state ψ, channel
/// f with matching endpoints, and singleton j, with F(f∘ψ) = F(f)·F(ψ).
EquivarianceReport check_equivariance(const FunctorFragment &frag, const ActionTable &act,
                                      const std::vector<std::string> &states, const std::vector<std::string> &channels,
                                      double tol = kFunctorTol);

/// (g∘f)·U = f·(g·U) on singletons for each test (the action reverses arrows).
bool action_compositional(const FunctorFragment &frag, const ActionTable &act,
                          const std::vector<CompositionTest> &tests);

}  // namespace ontokit::ontomodel
