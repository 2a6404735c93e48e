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

#include "ontokit/quantum.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "ontokit/error.h"

namespace ontokit::quantum {

namespace {

bool is_zero(const ComplexMatrix &m) {
    return std::all_of(m.entries().begin(), m.entries().end(), [](Complex z) { return z == Complex{}; });
}

ComplexMatrix kraus_sum(const std::vector<ComplexMatrix> &kraus, std::size_t in_dim) {
    ComplexMatrix s(in_dim, in_dim);
    for (const auto &k : kraus) s += dagger(k) * k;
    return s;
}

/// Orthonormalizes the columns of g in place (modified Gram–Schmidt).
void orthonormalize_columns(ComplexMatrix &g) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            Complex proj{};
            for (std::size_t r = 0; r < g.rows(); ++r) proj += std::conj(g(r, prev)) * g(r, c);
            for (std::size_t r = 0; r < g.rows(); ++r) g(r, c) -= proj * g(r, prev);
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < g.rows(); ++r) norm += std::norm(g(r, c));
        norm = std::sqrt(norm);
        if (norm < 1e-12) throw Error(ErrorCode::VerificationFailed, "degenerate Gaussian sample");
        for (std::size_t r = 0; r < g.rows(); ++r) g(r, c) /= norm;
    }
}

ComplexMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng &rng) {
    ComplexMatrix g(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(r, c) = Complex(re, im);
        }
    return g;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
    if (!m_.is_square()) throw Error(ErrorCode::DimMismatch, "density matrix must be square");
    if (!m_.all_finite()) throw Error(ErrorCode::InvalidArgument, "density matrix has non-finite entries");
    if (!is_hermitian(m_, tol)) throw Error(ErrorCode::NotHermitian, "density matrix is not Hermitian");
    if (std::abs(trace(m_) - 1.0) > tol)
        throw Error(ErrorCode::InvalidArgument, "density matrix trace is not 1");
    const auto eig = hermitian_eigenvalues(m_);
    if (eig.front() < -tol) throw Error(ErrorCode::InvalidArgument, "density matrix has a negative eigenvalue");
}

Channel::Channel(std::size_t in_dim, std::size_t out_dim, std::vector<ComplexMatrix> kraus, bool trace_preserving)
    : in_dim_(in_dim), out_dim_(out_dim), kraus_(std::move(kraus)), trace_preserving_(trace_preserving) {
    if (in_dim == 0 || out_dim == 0) throw Error(ErrorCode::InvalidArgument, "channel dimensions must be >= 1");
    if (kraus_.empty()) throw Error(ErrorCode::InvalidArgument, "channel needs at least one Kraus operator");
    for (const auto &k : kraus_) {
        if (k.rows() != out_dim || k.cols() != in_dim)
            throw Error(ErrorCode::DimMismatch, "Kraus operator is not out_dim x in_dim");
        if (!k.all_finite()) throw Error(ErrorCode::InvalidArgument, "Kraus operator has non-finite entries");
    }
    const ComplexMatrix s = kraus_sum(kraus_, in_dim);
    if (trace_preserving_) {
        const double dev = max_abs_diff(s, ComplexMatrix::identity(in_dim));
        if (dev > kDerivedTol)
            throw Error(ErrorCode::NotTracePreserving,
                        "sum of K^dagger K deviates from identity by " + std::to_string(dev));
    } else {
        if (hermitian_eigenvalues(s).back() > 1.0 + kDerivedTol)
            throw Error(ErrorCode::InvalidArgument, "sum of K^dagger K exceeds the identity");
    }
}

Channel Channel::identity(std::size_t d) { return Channel(d, d, {ComplexMatrix::identity(d)}, true); }

Channel Channel::unitary(const ComplexMatrix &u) {
    if (!u.is_square()) throw Error(ErrorCode::DimMismatch, "unitary must be square");
    return Channel(u.rows(), u.rows(), {u}, true);
}

Channel Channel::depolarizing(std::size_t d) {
    std::vector<ComplexMatrix> kraus;
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            ComplexMatrix k(d, d);
            k(i, j) = scale;
            kraus.push_back(std::move(k));
        }
    return Channel(d, d, std::move(kraus), true);
}

Channel Channel::prepare(const Ket &psi) { return Channel(1, psi.dim(), {psi.column()}, true); }

Channel Channel::prepare(const DensityMatrix &rho) {
    const auto eig = hermitian_eigen(rho.matrix());
    const std::size_t d = rho.dim();
    std::vector<ComplexMatrix> kraus;
    double total = 0.0;
    for (std::size_t k = 0; k < d; ++k) total += std::max(eig.values[k], 0.0);
    for (std::size_t k = 0; k < d; ++k) {
        const double l = std::max(eig.values[k], 0.0) / total;
        if (l <= 0.0) continue;
        ComplexMatrix col(d, 1);
        for (std::size_t r = 0; r < d; ++r) col(r, 0) = std::sqrt(l) * eig.vectors(r, k);
        kraus.push_back(std::move(col));
    }
    return Channel(1, d, std::move(kraus), true);
}

Channel Channel::two_outcome(const ComplexMatrix &effect) {
    const TwoOutcomeMeasurement checked(effect);
    const std::size_t d = effect.rows();
    const ComplexMatrix root_yes = psd_sqrt(effect);
    const ComplexMatrix root_no = psd_sqrt(ComplexMatrix::identity(d) - effect);
    std::vector<ComplexMatrix> kraus;
    for (std::size_t outcome = 0; outcome < 2; ++outcome) {
        const ComplexMatrix &root = outcome == 0 ? root_yes : root_no;
        for (std::size_t k = 0; k < d; ++k) {
            ComplexMatrix op(2, d);
            for (std::size_t c = 0; c < d; ++c) op(outcome, c) = root(k, c);
            if (!is_zero(op)) kraus.push_back(std::move(op));
        }
    }
    return Channel(d, 2, std::move(kraus), true);
}

ProjectiveMeasurement::ProjectiveMeasurement(std::vector<Ket> outcomes, double tol) : outcomes_(std::move(outcomes)) {
    if (outcomes_.empty()) throw Error(ErrorCode::InvalidArgument, "measurement needs at least one outcome");
    const std::size_t d = outcomes_.front().dim();
    if (outcomes_.size() != d)
        throw Error(ErrorCode::DimMismatch, "orthonormal measurement needs exactly dim outcome vectors");
    for (std::size_t i = 0; i < d; ++i) {
        if (outcomes_[i].dim() != d) throw Error(ErrorCode::DimMismatch, "outcome vectors differ in dimension");
        for (std::size_t j = 0; j < d; ++j) {
            const Complex g = inner(outcomes_[i], outcomes_[j]);
            if (std::abs(g - (i == j ? 1.0 : 0.0)) > tol)
                throw Error(ErrorCode::InvalidArgument, "measurement vectors are not orthonormal");
        }
    }
}

ProjectiveMeasurement ProjectiveMeasurement::computational(std::size_t d) {
    std::vector<Ket> basis;
    for (std::size_t k = 0; k < d; ++k) basis.push_back(Ket::basis(d, k));
    return ProjectiveMeasurement(std::move(basis));
}

TwoOutcomeMeasurement::TwoOutcomeMeasurement(ComplexMatrix effect, double tol) : effect_(std::move(effect)) {
    if (!is_hermitian(effect_, tol)) throw Error(ErrorCode::NotHermitian, "effect is not Hermitian");
    const auto eig = hermitian_eigenvalues(effect_);
    if (eig.front() < -tol || eig.back() > 1.0 + tol)
        throw Error(ErrorCode::InvalidArgument, "effect spectrum leaves [0, 1]");
}

double TwoOutcomeMeasurement::probability(const DensityMatrix &rho) const {
    if (rho.dim() != dim()) throw Error(ErrorCode::DimMismatch, "effect and state dimensions differ");
    return trace_of_product(effect_, rho.matrix()).real();
}

double born(const DensityMatrix &state, const ProjectiveMeasurement &m, std::size_t k) {
    if (state.dim() != m.dim()) throw Error(ErrorCode::DimMismatch, "state and measurement dimensions differ");
    if (k >= m.size()) throw Error(ErrorCode::InvalidArgument, "outcome index out of range");
    const Ket &phi = m.outcomes()[k];
    Complex p{};
    for (std::size_t i = 0; i < phi.dim(); ++i)
        for (std::size_t j = 0; j < phi.dim(); ++j) p += std::conj(phi[i]) * state.matrix()(i, j) * phi[j];
    double v = p.real();
    if (v < 0.0 && v >= -kDerivedTol) v = 0.0;
    if (v > 1.0 && v <= 1.0 + kDerivedTol) v = 1.0;
    return v;
}

ComplexMatrix apply_map(const Channel &ch, const ComplexMatrix &x) {
    if (x.rows() != ch.in_dim() || x.cols() != ch.in_dim())
        throw Error(ErrorCode::DimMismatch, "operator does not match channel input dimension");
    ComplexMatrix out(ch.out_dim(), ch.out_dim());
    for (const auto &k : ch.kraus()) out += k * x * dagger(k);
    return out;
}

DensityMatrix apply(const Channel &ch, const DensityMatrix &state) {
    if (!ch.trace_preserving())
        throw Error(ErrorCode::NotTracePreserving, "apply() needs a trace-preserving channel; use apply_map");
    return DensityMatrix(apply_map(ch, state.matrix()));
}

Channel compose(const Channel &g, const Channel &f) {
    if (f.out_dim() != g.in_dim()) throw Error(ErrorCode::DimMismatch, "compose: f.out_dim != g.in_dim");
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(g.kraus().size() * f.kraus().size());
    for (const auto &gj : g.kraus())
        for (const auto &fi : f.kraus()) kraus.push_back(gj * fi);
    return Channel(f.in_dim(), g.out_dim(), std::move(kraus), f.trace_preserving() && g.trace_preserving());
}

Channel tensor(const Channel &f, const Channel &g) {
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(f.kraus().size() * g.kraus().size());
    for (const auto &fi : f.kraus())
        for (const auto &gj : g.kraus()) kraus.push_back(kron(fi, gj));
    return Channel(f.in_dim() * g.in_dim(), f.out_dim() * g.out_dim(), std::move(kraus),
                   f.trace_preserving() && g.trace_preserving());
}

double action_distance(const Channel &a, const Channel &b) {
    if (a.in_dim() != b.in_dim() || a.out_dim() != b.out_dim())
        throw Error(ErrorCode::DimMismatch, "channels have different signatures");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.in_dim(); ++i)
        for (std::size_t j = 0; j < a.in_dim(); ++j) {
            ComplexMatrix unit(a.in_dim(), a.in_dim());
            unit(i, j) = 1.0;
            worst = std::max(worst, max_abs_diff(apply_map(a, unit), apply_map(b, unit)));
        }
    return worst;
}

Complex overlap(const Ket &psi, const Ket &phi) { return inner(psi, phi); }

TwoOutcomeMeasurement dual_state_quantum(const Ket &psi) { return TwoOutcomeMeasurement(psi.projector()); }

Ket ket_zero() { return Ket::basis(2, 0); }
Ket ket_one() { return Ket::basis(2, 1); }
Ket ket_plus() { return Ket::normalized({1.0, 1.0}); }
Ket ket_minus() { return Ket::normalized({1.0, -1.0}); }

Ket random_ket(std::size_t d, Rng &rng) {
    std::vector<Complex> a(d);
    for (auto &z : a) {
        const double re = rng.normal();
        const double im = rng.normal();
        z = Complex(re, im);
    }
    return Ket::normalized(std::move(a));
}

DensityMatrix random_density(std::size_t d, Rng &rng) {
    const ComplexMatrix g = gaussian_matrix(d, d, rng);
    ComplexMatrix rho = g * dagger(g);
    rho *= 1.0 / trace(rho).real();
    return DensityMatrix(0.5 * (rho + dagger(rho)));
}

ComplexMatrix random_unitary(std::size_t d, Rng &rng) {
    ComplexMatrix g = gaussian_matrix(d, d, rng);
    orthonormalize_columns(g);
    return g;
}

Channel random_channel(std::size_t in_dim, std::size_t out_dim, std::size_t kraus_count, Rng &rng) {
    if (kraus_count * out_dim < in_dim)
        throw Error(ErrorCode::InvalidArgument, "too few Kraus operators for a trace-preserving channel");
    ComplexMatrix v = gaussian_matrix(kraus_count * out_dim, in_dim, rng);
    orthonormalize_columns(v);
    std::vector<ComplexMatrix> kraus;
    for (std::size_t k = 0; k < kraus_count; ++k) {
        ComplexMatrix op(out_dim, in_dim);
        for (std::size_t r = 0; r < out_dim; ++r)
            for (std::size_t c = 0; c < in_dim; ++c) op(r, c) = v(k * out_dim + r, c);
        kraus.push_back(std::move(op));
    }
    return Channel(in_dim, out_dim, std::move(kraus), true);
}

ComplexMatrix random_projector(std::size_t d, std::size_t rank, Rng &rng) {
    if (rank > d) throw Error(ErrorCode::InvalidArgument, "projector rank exceeds dimension");
    const ComplexMatrix u = random_unitary(d, rng);
    ComplexMatrix p(d, d);
    for (std::size_t k = 0; k < rank; ++k)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) p(i, j) += u(i, k) * std::conj(u(j, k));
    return p;
}

}  // namespace ontokit::quantum
