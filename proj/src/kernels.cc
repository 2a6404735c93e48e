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

#include <algorithm>
#include <cmath>
#include <set>

#include "ontokit/error.h"

namespace ontokit::kernels {

namespace {

void require_same_space(const FiniteSpace &a, const FiniteSpace &b, const char *what) {
    if (!(a == b)) throw Error(ErrorCode::SpaceMismatch, what);
}

}  // namespace

FiniteSpace::FiniteSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw Error(ErrorCode::InvalidArgument, "finite space must be nonempty");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw Error(ErrorCode::InvalidArgument, "finite space labels must be distinct");
}

FiniteSpace FiniteSpace::unit() { return FiniteSpace({"*"}); }
FiniteSpace FiniteSpace::two() { return FiniteSpace({"0", "1"}); }

FiniteSpace FiniteSpace::indexed(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return FiniteSpace(std::move(labels));
}

std::size_t FiniteSpace::index_of(const std::string &label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw Error(ErrorCode::InvalidArgument, "unknown point label '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

FiniteSpace product(const FiniteSpace &x, const FiniteSpace &y) {
    std::vector<std::string> labels;
    labels.reserve(x.size() * y.size());
    for (const auto &a : x.labels())
        for (const auto &b : y.labels()) labels.push_back(a + "|" + b);
    return FiniteSpace(std::move(labels));
}

SignedKernel::SignedKernel(FiniteSpace from, FiniteSpace to, RealMatrix matrix, double tol)
    : from_(std::move(from)), to_(std::move(to)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != to_.size() || matrix_.cols() != from_.size())
        throw Error(ErrorCode::DimMismatch, "kernel matrix must be |to| x |from|");
    if (!matrix_.all_finite()) throw Error(ErrorCode::InvalidArgument, "kernel has non-finite entries");
    for (std::size_t c = 0; c < matrix_.cols(); ++c) {
        if (std::abs(matrix_.column_sum(c) - 1.0) > tol)
            throw Error(ErrorCode::InvalidArgument,
                        "kernel column '" + from_.label(c) + "' does not sum to 1");
    }
    for (double x : matrix_.entries()) {
        if (x < -kDerivedTol) markov_ = false;
        if (x < -1.0 - kDerivedTol || x > 1.0 + kDerivedTol) bounded_ = false;
    }
}

SignedKernel SignedKernel::identity(const FiniteSpace &x) { return SignedKernel(x, x, RealMatrix::identity(x.size())); }

SignedKernel SignedKernel::uniform_reset(const FiniteSpace &from, const FiniteSpace &to) {
    RealMatrix m(to.size(), from.size(), std::vector<double>(to.size() * from.size(), 1.0 / static_cast<double>(to.size())));
    return SignedKernel(from, to, std::move(m));
}

Distribution::Distribution(FiniteSpace space, std::vector<double> weights, double tol)
    : space_(std::move(space)), weights_(std::move(weights)) {
    if (weights_.size() != space_.size()) throw Error(ErrorCode::DimMismatch, "weight count does not match the space");
    double s = 0.0;
    for (double w : weights_) {
        if (!std::isfinite(w)) throw Error(ErrorCode::InvalidArgument, "distribution weight is not finite");
        s += w;
    }
    if (std::abs(s - 1.0) > tol) throw Error(ErrorCode::InvalidArgument, "distribution weights do not sum to 1");
}

Distribution Distribution::point(const FiniteSpace &space, std::size_t i) {
    std::vector<double> w(space.size());
    w.at(i) = 1.0;
    return Distribution(space, std::move(w));
}

Distribution Distribution::uniform(const FiniteSpace &space) {
    return Distribution(space, std::vector<double>(space.size(), 1.0 / static_cast<double>(space.size())));
}

bool Distribution::is_probability() const {
    return std::all_of(weights_.begin(), weights_.end(), [](double w) { return w >= -kDerivedTol; });
}

double Distribution::measure(const std::vector<std::size_t> &subset) const {
    double s = 0.0;
    for (std::size_t i : subset) s += weights_.at(i);
    return s;
}

ResponseFunction::ResponseFunction(FiniteSpace space, std::vector<double> values, double tol)
    : space_(std::move(space)), values_(std::move(values)) {
    if (values_.size() != space_.size()) throw Error(ErrorCode::DimMismatch, "response value count does not match the space");
    for (double v : values_)
        if (!std::isfinite(v) || v < -tol || v > 1.0 + tol)
            throw Error(ErrorCode::InvalidArgument, "response function value outside [0, 1]");
}

double ResponseFunction::integrate(const Distribution &mu) const {
    require_same_space(space_, mu.space(), "response function and distribution live on different spaces");
    double s = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) s += values_[i] * mu[i];
    return s;
}

SignedKernel ResponseFunction::as_kernel() const {
    RealMatrix m(2, space_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        m(0, i) = values_[i];
        m(1, i) = 1.0 - values_[i];
    }
    return SignedKernel(space_, FiniteSpace::two(), std::move(m));
}

SignedKernel kcompose(const SignedKernel &g, const SignedKernel &f) {
    require_same_space(f.to(), g.from(), "kcompose: f.to != g.from");
    return SignedKernel(f.from(), g.to(), g.matrix() * f.matrix());
}

SignedKernel ktensor(const SignedKernel &f, const SignedKernel &g) {
    return SignedKernel(product(f.from(), g.from()), product(f.to(), g.to()), kron(f.matrix(), g.matrix()));
}

SignedKernel as_state_kernel(const Distribution &mu) {
    return SignedKernel(FiniteSpace::unit(), mu.space(), RealMatrix(mu.size(), 1, mu.weights()));
}

Distribution state_of(const SignedKernel &k) {
    if (k.from().size() != 1) throw Error(ErrorCode::WrongSpace, "a state kernel must start at the unit space");
    return Distribution(k.to(), k.matrix().column(0));
}

Distribution push_forward(const SignedKernel &k, const Distribution &mu) {
    require_same_space(k.from(), mu.space(), "push_forward: kernel source differs from the distribution's space");
    return Distribution(k.to(), k.matrix() * std::span<const double>(mu.weights()));
}

Distribution product(const Distribution &mu, const Distribution &nu) {
    std::vector<double> w;
    w.reserve(mu.size() * nu.size());
    for (double a : mu.weights())
        for (double b : nu.weights()) w.push_back(a * b);
    return Distribution(product(mu.space(), nu.space()), std::move(w));
}

Distribution tensor_power(const Distribution &mu, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "tensor power must be >= 1");
    Distribution out = mu;
    for (std::size_t i = 1; i < n; ++i) out = product(out, mu);
    return out;
}

double evaluate(const Distribution &p) {
    if (!(p.space() == FiniteSpace::two()))
        throw Error(ErrorCode::WrongSpace, "evaluate needs a distribution over the distinguished space {0, 1}");
    return p[0];
}

double variational_distance(const Distribution &mu, const Distribution &nu) {
    require_same_space(mu.space(), nu.space(), "variational_distance: different spaces");
    double pos = 0.0, neg = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const double d = mu[i] - nu[i];
        if (d > 0) pos += d;
        else neg -= d;
    }
    return std::max(pos, neg);
}

double overlap_mass(const Distribution &mu, const Distribution &nu) {
    require_same_space(mu.space(), nu.space(), "overlap_mass: different spaces");
    double s = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) s += std::min(mu[i], nu[i]);
    return s;
}

std::vector<std::size_t> support(const Distribution &mu, double eps) {
    if (!mu.is_probability())
        throw Error(ErrorCode::SignedUnsupported, "support is only defined for nonnegative distributions");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] > eps) out.push_back(i);
    return out;
}

ResponseFunction dual_state_kernel(const Distribution &mu) {
    if (!mu.is_probability())
        throw Error(ErrorCode::SignedUnsupported, "the state-induced measurement needs a nonnegative distribution");
    std::vector<double> values(mu.weights());
    for (double &v : values) v = std::clamp(v, 0.0, 1.0);
    return ResponseFunction(mu.space(), std::move(values));
}

}  // namespace ontokit::kernels
