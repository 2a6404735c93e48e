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

#include "ontokit/ontomodel.h"

#include <gtest/gtest.h>

#include <cmath>

#include "test_util.h"

namespace ontokit::ontomodel {
namespace {

using kernels::Distribution;
using kernels::FiniteSpace;
using kernels::ResponseFunction;
using kernels::SignedKernel;
using quantum::Channel;
using quantum::ket_minus;
using quantum::ket_one;
using quantum::ket_plus;
using quantum::ket_zero;
using quantum::ProjectiveMeasurement;

const ProjectiveMeasurement &z_basis() {
    static const ProjectiveMeasurement m = ProjectiveMeasurement::computational(2);
    return m;
}
const ProjectiveMeasurement &x_basis() {
    static const ProjectiveMeasurement m({ket_plus(), ket_minus()});
    return m;
}

// Two-state model on Λ = {a, b} with μ_0 = μ_+ = uniform. ξ values are
// chosen so Born statistics in the Z and X bases are reproduced.
OntModel uniform_overlap_model() {
    const FiniteSpace lam({"a", "b"});
    OntModel m{lam, {{"0", ket_zero()}, {"+", ket_plus()}}, {}, {}};
    m.distributions.emplace("0", Distribution::uniform(lam));
    m.distributions.emplace("+", Distribution::uniform(lam));
    // Z: P(0|0) = 1 and P(0|+) = 1/2 cannot both come from the same μ, so the
    // responses here only have to satisfy the sum rule for the classifier tests.
    m.measurements.push_back({z_basis(), {ResponseFunction(lam, {1.0, 1.0}), ResponseFunction(lam, {0.0, 0.0})}});
    return m;
}

TEST(ValidateModel, DiracRestrictionValidatesAtTightTolerance) {
    const std::vector<std::pair<std::string, Ket>> catalog = {
        {"0", ket_zero()}, {"1", ket_one()}, {"+", ket_plus()}, {"-", ket_minus()}};
    const OntModel m = dirac_restriction_model(catalog, {z_basis(), x_basis()});
    const ModelReport r = validate_model(m, 1e-10);
    EXPECT_TRUE(r.ok());
    EXPECT_LT(r.max_born_deviation, 1e-12);
}

TEST(ValidateModel, ReportsSumRuleViolation) {
    OntModel m = dirac_restriction_model({{"0", ket_zero()}, {"1", ket_one()}}, {z_basis()});
    const FiniteSpace &lam = m.ontic;
    m.measurements[0].responses[1] = ResponseFunction(lam, {0.0, 0.9});  // ξ_0 + ξ_1 = 0.9 at "1"
    const ModelReport r = validate_model(m);
    ASSERT_EQ(r.sum_rule.size(), 1u);
    EXPECT_EQ(r.sum_rule[0].point, 1u);
    EXPECT_NEAR(r.sum_rule[0].sum, 0.9, 1e-15);
}

TEST(ValidateModel, ReportsBornDeviationAfterPerturbation) {
    OntModel m = dirac_restriction_model({{"0", ket_zero()}, {"+", ket_plus()}}, {z_basis()});
    m.distributions.at("0") = Distribution(m.ontic, {1.0 - 1e-3, 1e-3});
    const ModelReport r = validate_model(m);
    ASSERT_FALSE(r.born.empty());
    // Direct summation oracle: ∫ξ_0 dμ_0 = 0.999·1 + 0.001·½.
    const auto &d = r.born.front();
    EXPECT_EQ(d.state, "0");
    EXPECT_NEAR(d.reproduced, (1 - 1e-3) + 1e-3 * 0.5, 1e-15);
    EXPECT_NEAR(r.max_born_deviation, 5e-4, 1e-12);
}

TEST(ValidateModel, ReportsStructuralProblems) {
    OntModel m = dirac_restriction_model({{"0", ket_zero()}}, {z_basis()});
    m.distributions.clear();
    m.measurements[0].responses.pop_back();
    const ModelReport r = validate_model(m);
    EXPECT_FALSE(r.ok());
    EXPECT_GE(r.structural.size(), 2u);
}

TEST(ClassifyModel, DiracModelIsOntic) {
    const OntModel m = dirac_restriction_model({{"0", ket_zero()}, {"+", ket_plus()}}, {z_basis()});
    const Classification c = classify_model(m);
    EXPECT_FALSE(c.epistemic);
    EXPECT_FALSE(c.witness.has_value());
}

TEST(ClassifyModel, UniformOverlapIsEpistemicWithWitness) {
    const Classification c = classify_model(uniform_overlap_model());
    EXPECT_TRUE(c.epistemic);
    ASSERT_TRUE(c.witness.has_value());
    EXPECT_EQ(c.witness->first, "0");
    EXPECT_EQ(c.witness->second, "+");
    EXPECT_NEAR(c.witness_distance, 0.0, 1e-15);
}

TEST(ClassifyModel, OrthogonalOnlyCatalogIsOntic) {
    OntModel m = uniform_overlap_model();
    m.states = {{"0", ket_zero()}, {"+", ket_one()}};
    EXPECT_FALSE(classify_model(m).epistemic);
}

TEST(MaximalPredicates, DiracOrthogonalCatalog) {
    const OntModel m = dirac_restriction_model({{"0", ket_zero()}, {"1", ket_one()}}, {z_basis()});
    const MaximalReport r = maximal_predicates(m);
    EXPECT_TRUE(r.maximally_epistemic);
    EXPECT_TRUE(r.maximally_nontrivial);
}

TEST(MaximalPredicates, UniformOverlapModel) {
    // μ_0(Λ_+) = 1 while |<+|0>|^2 = 1/2. No pair is orthogonal and every
    // μ_ψ(Λ_φ) is positive, so maximal nontriviality holds.
    const MaximalReport r = maximal_predicates(uniform_overlap_model());
    EXPECT_FALSE(r.maximally_epistemic);
    EXPECT_EQ(r.epistemic_violations.size(), 2u);
    EXPECT_NEAR(r.epistemic_violations[0].measure, 1.0, 1e-15);
    EXPECT_NEAR(r.epistemic_violations[0].born, 0.5, 1e-15);
    EXPECT_TRUE(r.maximally_nontrivial);
}

TEST(MaximalPredicates, NontrivialityFailsWhenOrthogonalStatesOverlap) {
    OntModel m = uniform_overlap_model();
    m.states = {{"0", ket_zero()}, {"+", ket_one()}};
    const MaximalReport r = maximal_predicates(m);
    EXPECT_FALSE(r.maximally_nontrivial);
    EXPECT_EQ(r.nontrivial_violations.size(), 2u);
}

TEST(MaximalPredicates, SingleStateCatalogIsVacuous) {
    const OntModel m = dirac_restriction_model({{"psi", ket_plus()}}, {z_basis()});
    const MaximalReport r = maximal_predicates(m);
    EXPECT_TRUE(r.maximally_epistemic);
    EXPECT_TRUE(r.maximally_nontrivial);
}

// Classical qubit fragment: computational-basis states, the bit flip, and the
// Z measurement sent to point masses, a swap and an indicator.
FunctorFragment classical_fragment() {
    const FiniteSpace bit({"z0", "z1"});
    const SignedKernel swap(bit, bit, RealMatrix{{0, 1}, {1, 0}});
    const ComplexMatrix x{{0, 1}, {1, 0}};
    FunctorFragment f;
    f.objects = {{"I", FiniteSpace::unit()}, {"2", FiniteSpace::two()}, {"Q", bit}};
    f.morphisms = {
        {"id", "Q", "Q", Channel::identity(2), SignedKernel::identity(bit)},
        {"flip", "Q", "Q", Channel::unitary(x), swap},
        {"flip.flip", "Q", "Q", quantum::compose(Channel::unitary(x), Channel::unitary(x)), SignedKernel::identity(bit)},
        {"zero", "I", "Q", Channel::prepare(ket_zero()), kernels::as_state_kernel(Distribution::point(bit, 0))},
        {"one", "I", "Q", Channel::prepare(ket_one()), kernels::as_state_kernel(Distribution::point(bit, 1))},
        {"flip.zero", "I", "Q", quantum::compose(Channel::unitary(x), Channel::prepare(ket_zero())),
         kernels::as_state_kernel(Distribution::point(bit, 1))},
        {"measure", "Q", "2", Channel::two_outcome(ket_zero().projector()), ResponseFunction(bit, {1, 0}).as_kernel()},
    };
    return f;
}

const std::vector<CompositionTest> kClassicalTests = {{"flip", "flip", "flip.flip"}, {"flip", "zero", "flip.zero"}};

TEST(OperationalModel, ClassicalFragmentPasses) {
    const OperationalReport r = check_operational_model(classical_fragment(), kClassicalTests);
    EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_EQ(r.compositions, 2u);
    EXPECT_EQ(r.identities, 2u);  // "id" and "flip.flip"
    EXPECT_EQ(r.evaluations, 3u);
}

TEST(OperationalModel, IdentityOnlyFragmentPasses) {
    FunctorFragment f;
    f.objects = {{"I", FiniteSpace::unit()}, {"2", FiniteSpace::two()}};
    f.morphisms = {{"id", "2", "2", Channel::identity(2), SignedKernel::identity(FiniteSpace::two())}};
    EXPECT_TRUE(check_operational_model(f, {}).ok());
}

TEST(OperationalModel, UniformResetFragmentFailsIdentityAndEvaluation) {
    FunctorFragment f = classical_fragment();
    for (auto &m : f.morphisms) m.image = SignedKernel::uniform_reset(m.image.from(), m.image.to());
    const OperationalReport r = check_operational_model(f, kClassicalTests);
    EXPECT_FALSE(r.ok());
    // Uniform reset composed with anything is uniform reset.
    EXPECT_LT(r.max_composition_error, 1e-15);
    EXPECT_GT(r.max_identity_error, 0.4);
    EXPECT_GT(r.max_evaluation_error, 0.4);
}

TEST(OperationalModel, DetectsWrongUnitAndDistinguishedObject) {
    FunctorFragment f = classical_fragment();
    f.objects.at("I") = FiniteSpace::two();
    f.objects.at("2") = FiniteSpace({"yes", "no"});
    const OperationalReport r = check_operational_model(f, {});
    EXPECT_FALSE(r.ok());
}

TEST(OperationalModel, MissingMorphismThrows) {
    EXPECT_ONTOKIT_ERROR(check_operational_model(classical_fragment(), {{"flip", "nope", "flip"}}),
                         ErrorCode::MissingMorphism);
}

TEST(Equivariance, IdentityActionPasses) {
    const FunctorFragment f = classical_fragment();
    ActionTable act;
    act.images["id"] = {{0}, {1}};
    const EquivarianceReport r = check_equivariance(f, act, {"zero", "one"}, {"id"});
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.checks, 4u);
}

TEST(Equivariance, SwapActionMatchesFlip) {
    const FunctorFragment f = classical_fragment();
    ActionTable act;
    act.images["flip"] = {{1}, {0}};
    act.images["flip.flip"] = {{0}, {1}};
    EXPECT_TRUE(check_equivariance(f, act, {"zero", "one"}, {"flip"}).ok());
    EXPECT_TRUE(action_compositional(f, act, {{"flip", "flip", "flip.flip"}}));
}

TEST(Equivariance, WrongActionFailsOnNonSymmetricKernel) {
    const FunctorFragment f = classical_fragment();
    ActionTable act;
    act.images["id"] = {{1}, {0}};  // swapped points for the identity
    EXPECT_FALSE(check_equivariance(f, act, {"zero"}, {"id"}).ok());
    act.images["flip.flip"] = {{1}, {0}};
    act.images["flip"] = {{1}, {0}};
    EXPECT_FALSE(action_compositional(f, act, {{"flip", "flip", "flip.flip"}}));
}

TEST(Equivariance, MissingActionThrows) {
    ActionTable act;
    EXPECT_ONTOKIT_ERROR(check_equivariance(classical_fragment(), act, {"zero"}, {"flip"}), ErrorCode::MissingAction);
    act.images["flip"] = {{1}};
    EXPECT_ONTOKIT_ERROR(act.act("flip", {1}), ErrorCode::MissingAction);
}

}  // namespace
}  // namespace ontokit::ontomodel
