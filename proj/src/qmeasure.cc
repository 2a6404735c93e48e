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

#include <algorithm>
#include <cmath>

#include "ontokit/error.h"
#include "ontokit/random.h"

namespace ontokit::qmeasure {

namespace {

void require_small(const kernels::FiniteSpace &space) {
    if (space.size() > kMaxPoints)
        throw Error(ErrorCode::TooLarge, "at most " + std::to_string(kMaxPoints) + " points are supported, got " +
                                             std::to_string(space.size()));
}

}  // namespace

QuantumMeasure::QuantumMeasure(kernels::FiniteSpace space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
    require_small(space_);
    if (values_.size() != (std::size_t{1} << space_.size()))
        throw Error(ErrorCode::DimMismatch, "a quantum measure needs one value per subset");
    for (double v : values_)
        if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "measure value is not finite");
}

MeasureReport validate_quantum_measure(const QuantumMeasure &q, double tol, std::size_t max_listed) {
    MeasureReport r;
    const Subset all = q.full();
    for (Subset u = 0; u <= all; ++u) {
        if (q(u) < -tol && r.negative.size() < max_listed) r.negative.push_back(u);
        if (u == all) break;
    }
    r.normalization = q(all);
    r.normalized = std::abs(r.normalization - 1.0) <= tol;

    // The rule is symmetric in (U, V, W), so unordered triples U ≤ V ≤ W
    // suffice; only the empty set may repeat.
    for (Subset u = 0;; ++u) {
        const Subset rest_u = all & ~u;
        for (Subset v = rest_u;; v = (v - 1) & rest_u) {
            if (v > u || (v == u && u == 0)) {
                const Subset rest_uv = rest_u & ~v;
                for (Subset w = rest_uv;; w = (w - 1) & rest_uv) {
                    if (w > v || (w == v && v == 0)) {
                        ++r.triples;
                        const double lhs = q(u | v | w);
                        const double rhs = q(u | v) + q(u | w) + q(v | w) - q(u) - q(v) - q(w);
                        const double err = std::abs(lhs - rhs);
                        r.max_sum_rule_error = std::max(r.max_sum_rule_error, err);
                        if (err > tol && r.sum_rule.size() < max_listed) r.sum_rule.push_back({u, v, w, lhs, rhs});
                    }
                    if (w == 0) break;
                }
            }
            if (v == 0) break;
        }
        if (u == all) break;
    }

    for (Subset u = 1; u < all; ++u) {
        const Subset rest = all & ~u;
        for (Subset v = rest; v > u; v = (v - 1) & rest) {
            const double joint = q(u | v), sum = q(u) + q(v);
            if (std::abs(joint - sum) > tol && r.additivity.size() < max_listed) r.additivity.push_back({u, v, joint, sum});
        }
    }
    return r;
}

DecoherenceFunctional::DecoherenceFunctional(kernels::FiniteSpace space, ComplexMatrix singletons)
    : space_(std::move(space)), d_(std::move(singletons)) {
    require_small(space_);
    if (d_.rows() != space_.size() || d_.cols() != space_.size())
        throw Error(ErrorCode::DimMismatch, "decoherence table must be |points| x |points|");
    if (!d_.all_finite()) throw Error(ErrorCode::InvalidArgument, "decoherence table has non-finite entries");
}

Complex DecoherenceFunctional::operator()(Subset u, Subset v) const {
    Complex s = 0.0;
    for (std::size_t x = 0; x < space_.size(); ++x) {
        if (!(u >> x & 1u)) continue;
        for (std::size_t y = 0; y < space_.size(); ++y)
            if (v >> y & 1u) s += d_(x, y);
    }
    return s;
}

DecoherenceReport validate_decoherence(const DecoherenceFunctional &d, double tol, std::size_t families,
                                       std::uint64_t seed) {
    DecoherenceReport r;
    const ComplexMatrix &m = d.singletons();
    const std::size_t n = d.space().size();
    r.hermitian_error = max_abs_diff(m, dagger(m));
    r.hermitian = r.hermitian_error <= tol;
    const Subset all = static_cast<Subset>((std::size_t{1} << n) - 1);
    r.normalization = d(all, all);
    r.normalized = std::abs(r.normalization - 1.0) <= tol;

    // Eigenvalues of the Hermitian part; a non-Hermitian table already fails.
    ComplexMatrix sym = m + dagger(m);
    sym *= 0.5;
    r.min_eigenvalue = hermitian_eigenvalues(sym).front();

    r.min_family_eigenvalue = r.min_eigenvalue;
    for (std::size_t f = 0; f < families; ++f) {
        Rng rng = Rng::stream(seed, f);
        const std::size_t size = 1 + rng.below(5);
        std::vector<Subset> sets(size);
        for (Subset &s : sets) s = static_cast<Subset>(rng.below(std::size_t{1} << n));
        ComplexMatrix g(size, size);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) g(i, j) = d(sets[i], sets[j]);
        ComplexMatrix gs = g + dagger(g);
        gs *= 0.5;
        r.min_family_eigenvalue = std::min(r.min_family_eigenvalue, hermitian_eigenvalues(gs).front());
        ++r.families_checked;
    }
    r.strongly_positive = r.min_eigenvalue >= -tol && r.min_family_eigenvalue >= -tol;
    return r;
}

QuantumMeasure measure_from_decoherence(const DecoherenceFunctional &d) {
    const DecoherenceReport rep = validate_decoherence(d);
    if (!rep.ok()) {
        std::string why;
        if (!rep.hermitian) why += " not Hermitian;";
        if (!rep.normalized) why += " D(L,L) != 1;";
        if (!rep.strongly_positive) why += " not strongly positive;";
        throw Error(ErrorCode::InvalidFunctional, "invalid decoherence functional:" + why);
    }
    const std::size_t count = std::size_t{1} << d.space().size();
    std::vector<double> values(count);
    for (std::size_t u = 0; u < count; ++u) values[u] = d(static_cast<Subset>(u), static_cast<Subset>(u)).real();
    return QuantumMeasure(d.space(), std::move(values));
}

DecoherenceFunctional interference_functional(const kernels::FiniteSpace &space, const std::vector<Complex> &psi) {
    if (psi.size() != space.size()) throw Error(ErrorCode::DimMismatch, "one amplitude per point");
    Complex total = 0.0;
    for (const Complex &a : psi) total += a;
    if (std::abs(total) <= kMeasureTol)
        throw Error(ErrorCode::InvalidFunctional, "amplitudes sum to zero; the functional cannot be normalized");
    ComplexMatrix m(psi.size(), psi.size());
    for (std::size_t x = 0; x < psi.size(); ++x)
        for (std::size_t y = 0; y < psi.size(); ++y) m(x, y) = psi[x] * std::conj(psi[y]) / std::norm(total);
    return DecoherenceFunctional(space, std::move(m));
}

}  // namespace ontokit::qmeasure
