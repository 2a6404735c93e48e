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

#include "ontokit/kernels.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace ontokit::kernels {
namespace {

TEST(FiniteSpace, Basics) {
    EXPECT_EQ(FiniteSpace::unit().size(), 1u);
    EXPECT_EQ(FiniteSpace::two().labels(), (std::vector<std::string>{"0", "1"}));
    EXPECT_EQ(FiniteSpace::indexed(3).index_of("2"), 2u);
    EXPECT_ONTOKIT_ERROR(FiniteSpace({"a", "a"}), ErrorCode::InvalidArgument);
    EXPECT_ONTOKIT_ERROR(FiniteSpace({}), ErrorCode::InvalidArgument);
    EXPECT_ONTOKIT_ERROR(FiniteSpace::two().index_of("x"), ErrorCode::InvalidArgument);
}

TEST(FiniteSpace, ProductIsLexicographic) {
    const FiniteSpace p = product(FiniteSpace({"a", "b"}), FiniteSpace({"x", "y", "z"}));
    ASSERT_EQ(p.size(), 6u);
    EXPECT_EQ(p.label(0), "a|x");
    EXPECT_EQ(p.label(2), "a|z");
    EXPECT_EQ(p.label(3), "b|x");
}

TEST(SignedKernel, ValidatesColumnSums) {
    const FiniteSpace x = FiniteSpace::two();
    EXPECT_ONTOKIT_ERROR(SignedKernel(x, x, RealMatrix{{0.5, 0.5}, {0.4, 0.5}}), ErrorCode::InvalidArgument);
    EXPECT_ONTOKIT_ERROR(SignedKernel(x, x, RealMatrix{{1.0}}), ErrorCode::DimMismatch);
    const SignedKernel signed_k(x, x, RealMatrix{{1.5, 0.0}, {-0.5, 1.0}});
    EXPECT_FALSE(signed_k.markov());
    EXPECT_FALSE(signed_k.bounded());
    const SignedKernel m(x, x, RealMatrix{{0.3, 1.0}, {0.7, 0.0}});
    EXPECT_TRUE(m.markov());
    EXPECT_TRUE(m.bounded());
}

TEST(SignedKernel, CompositionIsMatrixProductAndChecksSpaces) {
    const FiniteSpace x = FiniteSpace::two(), y = FiniteSpace::indexed(3);
    const SignedKernel f(x, y, RealMatrix{{0.5, 0.0}, {0.5, 0.2}, {0.0, 0.8}});
    const SignedKernel g(y, x, RealMatrix{{1.0, 0.0, 0.5}, {0.0, 1.0, 0.5}});
    const SignedKernel gf = kcompose(g, f);
    EXPECT_NEAR(gf(0, 0), 0.5, 1e-15);
    EXPECT_NEAR(gf(0, 1), 0.4, 1e-15);
    EXPECT_NEAR(gf(1, 1), 0.6, 1e-15);
    EXPECT_ONTOKIT_ERROR(kcompose(f, f), ErrorCode::SpaceMismatch);
    const SignedKernel id = SignedKernel::identity(x);
    EXPECT_EQ(max_abs_diff(kcompose(f, id).matrix(), f.matrix()), 0.0);
}

TEST(SignedKernel, TensorOfPointMassesIsPointMass) {
    const FiniteSpace x = FiniteSpace::two();
    const SignedKernel swap(x, x, RealMatrix{{0, 1}, {1, 0}});
    const SignedKernel t = ktensor(swap, SignedKernel::identity(x));
    const Distribution out = push_forward(t, Distribution::point(t.from(), 1));  // "0|1"
    EXPECT_EQ(out[3], 1.0);                                                     // "1|1"
}

TEST(SignedKernel, UniformReset) {
    const SignedKernel r = SignedKernel::uniform_reset(FiniteSpace::two(), FiniteSpace::indexed(4));
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(r(i, 1), 0.25);
}

TEST(Distribution, ValidationAndMeasures) {
    const FiniteSpace x = FiniteSpace::indexed(3);
    EXPECT_ONTOKIT_ERROR(Distribution(x, {0.5, 0.5, 0.5}), ErrorCode::InvalidArgument);
    EXPECT_ONTOKIT_ERROR(Distribution(x, {1.0}), ErrorCode::DimMismatch);
    const Distribution mu(x, {0.2, 0.3, 0.5});
    EXPECT_NEAR(mu.measure({0, 2}), 0.7, 1e-15);
    EXPECT_TRUE(mu.is_probability());
    const Distribution s(x, {1.5, -0.5, 0.0});
    EXPECT_FALSE(s.is_probability());
    EXPECT_ONTOKIT_ERROR(support(s), ErrorCode::SignedUnsupported);
    EXPECT_EQ(support(mu), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Distribution, VariationalDistanceAndOverlap) {
    const FiniteSpace x = FiniteSpace::indexed(3);
    const Distribution mu(x, {0.5, 0.5, 0.0}), nu(x, {0.0, 0.5, 0.5});
    EXPECT_NEAR(variational_distance(mu, nu), 0.5, 1e-15);
    EXPECT_NEAR(overlap_mass(mu, nu), 0.5, 1e-15);
    // Brute force over all subsets as an oracle.
    double best = 0;
    for (unsigned m = 0; m < 8; ++m) {
        std::vector<std::size_t> u;
        for (std::size_t i = 0; i < 3; ++i)
            if (m & (1u << i)) u.push_back(i);
        best = std::max(best, std::abs(mu.measure(u) - nu.measure(u)));
    }
    EXPECT_NEAR(variational_distance(mu, nu), best, 1e-15);
}

TEST(Distribution, ProductsAndPowers) {
    const Distribution mu(FiniteSpace::two(), {0.25, 0.75});
    const Distribution p = tensor_power(mu, 3);
    ASSERT_EQ(p.size(), 8u);
    EXPECT_NEAR(p[0], 1.0 / 64.0, 1e-15);
    EXPECT_NEAR(p[7], 27.0 / 64.0, 1e-15);
    EXPECT_EQ(p.space().label(5), "1|0|1");
    EXPECT_NEAR(evaluate(mu), 0.25, 0.0);
    EXPECT_ONTOKIT_ERROR(evaluate(p), ErrorCode::WrongSpace);
}

TEST(Distribution, StateKernelRoundTrip) {
    const Distribution mu(FiniteSpace::indexed(3), {0.1, 0.2, 0.7});
    const SignedKernel k = as_state_kernel(mu);
    EXPECT_EQ(k.from().size(), 1u);
    EXPECT_EQ(state_of(k).weights(), mu.weights());
    EXPECT_ONTOKIT_ERROR(state_of(SignedKernel::identity(FiniteSpace::two())), ErrorCode::WrongSpace);
}

TEST(ResponseFunction, IntegratesAndActsAsKernel) {
    const FiniteSpace x = FiniteSpace::indexed(3);
    EXPECT_ONTOKIT_ERROR(ResponseFunction(x, {0.0, 1.1, 0.0}), ErrorCode::InvalidArgument);
    const ResponseFunction f(x, {1.0, 0.5, 0.0});
    const Distribution mu(x, {0.2, 0.4, 0.4});
    EXPECT_NEAR(f.integrate(mu), 0.4, 1e-15);
    EXPECT_NEAR(evaluate(push_forward(f.as_kernel(), mu)), 0.4, 1e-15);
    const ResponseFunction dual = dual_state_kernel(mu);
    EXPECT_EQ(dual.values(), mu.weights());
}

}  // namespace
}  // namespace ontokit::kernels
