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
#include <string>
#include <vector>

#include "ontokit/linalg.h"

namespace ontokit::kernels {

/// Below this weight a point counts as outside a distribution's support.
inline constexpr double kSupportEps = 1e-12;

/// Finite measurable space with the power-set σ-algebra.
class FiniteSpace {
   public:
    explicit FiniteSpace(std::vector<std::string> labels);

    /// The tensor unit {*}.
    static FiniteSpace unit();
    /// The distinguished object 2 = {0, 1}.
    static FiniteSpace two();
    /// Points labelled "0", …, "n-1".
    static FiniteSpace indexed(std::size_t n);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string> &labels() const { return labels_; }
    const std::string &label(std::size_t i) const { return labels_.at(i); }
    /// Throws InvalidArgument for an unknown label.
    std::size_t index_of(const std::string &label) const;

    bool operator==(const FiniteSpace &) const = default;

   private:
    std::vector<std::string> labels_;
};

/// Product space X × Y, lexicographic with the left factor major. Labels are
/// joined as "x|y".
FiniteSpace product(const FiniteSpace &x, const FiniteSpace &y);

/// Finite signed Markov kernel. Column j holds the signed measure f(x_j, -):
/// entry (i, j) = f(x_j, {y_i}). Every column sums to 1 within 1e-9.
class SignedKernel {
   public:
    SignedKernel(FiniteSpace from, FiniteSpace to, RealMatrix matrix, double tol = kDerivedTol);

    static SignedKernel identity(const FiniteSpace &x);
    /// Every input is sent to the uniform distribution on `to`.
    static SignedKernel uniform_reset(const FiniteSpace &from, const FiniteSpace &to);

    const FiniteSpace &from() const { return from_; }
    const FiniteSpace &to() const { return to_; }
    const RealMatrix &matrix() const { return matrix_; }
    double operator()(std::size_t to_index, std::size_t from_index) const { return matrix_(to_index, from_index); }

    /// All entries ≥ -1e-9: an ordinary Markov kernel.
    bool markov() const { return markov_; }
    /// All entries in [-1-1e-9, 1+1e-9]. Images of the phase-space functor
    /// into commutative algebras may leave this range (see README).
    bool bounded() const { return bounded_; }

   private:
    FiniteSpace from_;
    FiniteSpace to_;
    RealMatrix matrix_;
    bool markov_ = true;
    bool bounded_ = true;
};

/// Normalized (possibly signed) measure on a finite space.
class Distribution {
   public:
    Distribution(FiniteSpace space, std::vector<double> weights, double tol = kDerivedTol);

    static Distribution point(const FiniteSpace &space, std::size_t i);
    static Distribution uniform(const FiniteSpace &space);

    const FiniteSpace &space() const { return space_; }
    const std::vector<double> &weights() const { return weights_; }
    double operator[](std::size_t i) const { return weights_[i]; }
    std::size_t size() const { return weights_.size(); }

    /// All weights ≥ -1e-9.
    bool is_probability() const;
    /// μ(U) for U given as point indices.
    double measure(const std::vector<std::size_t> &subset) const;

   private:
    FiniteSpace space_;
    std::vector<double> weights_;
};

/// Measurable function λ ↦ f(λ, 0) ∈ [0, 1]; a measurement X → 2.
class ResponseFunction {
   public:
    ResponseFunction(FiniteSpace space, std::vector<double> values, double tol = kDerivedTol);

    const FiniteSpace &space() const { return space_; }
    const std::vector<double> &values() const { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    /// ∫ f dμ.
    double integrate(const Distribution &mu) const;
    /// The kernel X → 2 with columns (f(λ), 1 − f(λ)).
    SignedKernel as_kernel() const;

   private:
    FiniteSpace space_;
    std::vector<double> values_;
};

/// g ∘ f as the matrix product g·f.
SignedKernel kcompose(const SignedKernel &g, const SignedKernel &f);
SignedKernel ktensor(const SignedKernel &f, const SignedKernel &g);
/// A state I → X viewed as a kernel and back.
SignedKernel as_state_kernel(const Distribution &mu);
Distribution state_of(const SignedKernel &k);
/// Push a distribution through a kernel.
Distribution push_forward(const SignedKernel &k, const Distribution &mu);
Distribution product(const Distribution &mu, const Distribution &nu);
Distribution tensor_power(const Distribution &mu, std::size_t n);

/// Weight of the point "0" of a distribution over 2.
double evaluate(const Distribution &p);

/// sup_U |μ(U) − ν(U)|, i.e. max(Σ positive parts, Σ |negative parts|) of μ − ν.
double variational_distance(const Distribution &mu, const Distribution &nu);
/// Σ min(μ_i, ν_i); equals 1 − D(μ, ν) for probability distributions and is
/// computed without cancellation.
double overlap_mass(const Distribution &mu, const Distribution &nu);
/// Points with weight > eps. Throws SignedUnsupported for signed input.
std::vector<std::size_t> support(const Distribution &mu, double eps = kSupportEps);
/// The measurement λ ↦ μ{λ}.
ResponseFunction dual_state_kernel(const Distribution &mu);

}  // namespace ontokit::kernels
