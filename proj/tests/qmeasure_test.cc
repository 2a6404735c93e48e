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

#include "ontokit/qmeasure.h"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "ontokit/random.h"
#include "test_util.h"

namespace ontokit::qmeasure {
namespace {

using kernels::FiniteSpace;

QuantumMeasure from_function(std::size_t n, double (*f)(Subset, std::size_t)) {
    std::vector<double> v(std::size_t{1} << n);
    for (Subset u = 0; u < v.size(); ++u) v[u] = f(u, n);
    return QuantumMeasure(FiniteSpace::indexed(n), v);
}

TEST(QuantumMeasure, ConstructorChecks) {
    EXPECT_ONTOKIT_ERROR(QuantumMeasure(FiniteSpace::indexed(2), {0, 0.5, 0.5}), ErrorCode::DimMismatch);
    EXPECT_ONTOKIT_ERROR(QuantumMeasure(FiniteSpace::indexed(17), std::vector<double>(4)), ErrorCode::TooLarge);
}

TEST(QuantumMeasure, ClassicalMeasurePassesAndIsAdditive) {
    const QuantumMeasure q =
        from_function(4, [](Subset u, std::size_t n) { return static_cast<double>(std::popcount(u)) / n; });
    const MeasureReport r = validate_quantum_measure(q);
    EXPECT_TRUE(r.ok());
    EXPECT_TRUE(r.additivity.empty());
    EXPECT_GT(r.triples, 0u);
}

TEST(QuantumMeasure, CubicSetFunctionViolatesSumRule) {
    // μ(U) = (|U|/n)^3: three singletons give 27 on the left and 21 on the right (in units of 1/n^3).
    const QuantumMeasure q = from_function(3, [](Subset u, std::size_t n) {
        const double k = static_cast<double>(std::popcount(u)) / n;
        return k * k * k;
    });
    const MeasureReport r = validate_quantum_measure(q);
    EXPECT_FALSE(r.ok());
    ASSERT_FALSE(r.sum_rule.empty());
    EXPECT_NEAR(r.max_sum_rule_error, 6.0 / 27.0, 1e-12);
}

TEST(QuantumMeasure, NegativityAndNormalization) {
    std::vector<double> v = {0.0, -0.2, 1.2, 0.9};
    const MeasureReport r = validate_quantum_measure(QuantumMeasure(FiniteSpace::indexed(2), v));
    EXPECT_EQ(r.negative, std::vector<Subset>{1});
    EXPECT_FALSE(r.normalized);
    EXPECT_NEAR(r.normalization, 0.9, 0.0);
}

TEST(QuantumMeasure, TripleCountMatchesBruteForce) {
    const std::size_t n = 4;
    const QuantumMeasure q =
        from_function(n, [](Subset u, std::size_t m) { return static_cast<double>(std::popcount(u)) / m; });
    // Unordered triples of pairwise-disjoint subsets, counted by brute force.
    std::size_t count = 0;
    const Subset full = (1u << n);
    for (Subset a = 0; a < full; ++a)
        for (Subset b = a; b < full; ++b)
            for (Subset c = b; c < full; ++c)
                if (!(a & b) && !(a & c) && !(b & c)) ++count;
    EXPECT_EQ(validate_quantum_measure(q).triples, count);
}

TEST(Decoherence, DoubleSlitFunctional) {
    const FiniteSpace s = FiniteSpace::indexed(2);
    const std::vector<Complex> psi = {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
    const DecoherenceFunctional d = interference_functional(s, psi);
    EXPECT_TRUE(validate_decoherence(d).ok());
    const QuantumMeasure mu = measure_from_decoherence(d);
    EXPECT_NEAR(mu(0b01), 0.25, 1e-15);
    EXPECT_NEAR(mu(0b10), 0.25, 1e-15);
    EXPECT_NEAR(mu(0b11), 1.0, 1e-15);
    const MeasureReport r = validate_quantum_measure(mu);
    EXPECT_TRUE(r.ok());
    ASSERT_FALSE(r.additivity.empty());
    EXPECT_NEAR(r.additivity[0].joint, 1.0, 1e-15);
    EXPECT_NEAR(r.additivity[0].sum, 0.5, 1e-15);
}

TEST(Decoherence, RandomAmplitudesObeySumRuleUpToSixPoints) {
    for (std::size_t n = 1; n <= 6; ++n) {
        Rng rng = Rng::stream(99, n);
        std::vector<Complex> psi(n);
        for (auto &a : psi) a = Complex(rng.normal(), rng.normal());
        const QuantumMeasure mu = measure_from_decoherence(interference_functional(FiniteSpace::indexed(n), psi));
        const MeasureReport r = validate_quantum_measure(mu);
        EXPECT_TRUE(r.ok()) << n;
        // Direct oracle: |Σ_{x∈U} ψ_x|^2 / |Σ ψ|^2.
        Complex total = 0;
        for (auto a : psi) total += a;
        for (Subset u = 0; u < (1u << n); ++u) {
            Complex part = 0;
            for (std::size_t x = 0; x < n; ++x)
                if (u & (1u << x)) part += psi[x];
            EXPECT_NEAR(mu(u), std::norm(part) / std::norm(total), 1e-12);
        }
    }
}

TEST(Decoherence, KolmogorovViolationExample) {
    // Diagonal 3/4, off-diagonal -1/4: μ({a}) = μ({b}) = 3/4 but μ({a,b}) = 1.
    const DecoherenceFunctional d(FiniteSpace({"a", "b"}), ComplexMatrix{{0.75, -0.25}, {-0.25, 0.75}});
    EXPECT_TRUE(validate_decoherence(d).ok());
    const MeasureReport r = validate_quantum_measure(measure_from_decoherence(d));
    EXPECT_TRUE(r.ok());
    ASSERT_EQ(r.additivity.size(), 1u);
    EXPECT_NEAR(r.additivity[0].joint, 1.0, 1e-15);
    EXPECT_NEAR(r.additivity[0].sum, 1.5, 1e-15);
}

TEST(Decoherence, InvalidFunctionalsAreRejected) {
    const FiniteSpace s({"a", "b"});
    const DecoherenceFunctional unnormalized(s, ComplexMatrix{{0.5, -0.25}, {-0.25, 0.5}});
    const DecoherenceReport r = validate_decoherence(unnormalized);
    EXPECT_FALSE(r.normalized);
    EXPECT_NEAR(r.normalization.real(), 0.5, 1e-15);
    EXPECT_ONTOKIT_ERROR(measure_from_decoherence(unnormalized), ErrorCode::InvalidFunctional);

    const DecoherenceFunctional indefinite(s, ComplexMatrix{{0.5, 1.0}, {1.0, -1.5}});
    const DecoherenceReport ri = validate_decoherence(indefinite);
    EXPECT_TRUE(ri.normalized);
    EXPECT_FALSE(ri.strongly_positive);

    const DecoherenceFunctional skew(s, ComplexMatrix{{0.5, Complex(0, 0.1)}, {Complex(0, 0.1), 0.5}});
    EXPECT_FALSE(validate_decoherence(skew).hermitian);

    EXPECT_ONTOKIT_ERROR(interference_functional(s, {1.0, -1.0}), ErrorCode::InvalidFunctional);
    EXPECT_ONTOKIT_ERROR(DecoherenceFunctional(s, ComplexMatrix(3, 3)), ErrorCode::DimMismatch);
}

TEST(Decoherence, BiAdditiveExtension) {
    const DecoherenceFunctional d(FiniteSpace::indexed(3),
                                  ComplexMatrix{{0.2, Complex(0.1, 0.05), 0.0}, {Complex(0.1, -0.05), 0.3, 0.0}, {0, 0, 0.1}});
    EXPECT_EQ(d(0b011, 0b100), d(0b001, 0b100) + d(0b010, 0b100));
    EXPECT_NEAR(std::abs(d(0b011, 0b011) - Complex(0.7, 0.0)), 0.0, 1e-15);
}

}  // namespace
}  // namespace ontokit::qmeasure
