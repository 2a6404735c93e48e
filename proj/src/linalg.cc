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

#include "ontokit/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ontokit/error.h"

namespace ontokit {

namespace {

void require_dims(bool ok, const char *what) {
    if (!ok) throw Error(ErrorCode::DimMismatch, what);
}

double off_diagonal_norm(const ComplexMatrix &a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be >= 1");
    require_dims(data_.size() == rows * cols, "entry count does not match rows*cols");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0) throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be >= 1");
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        require_dims(r.size() == cols_, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &o) {
    require_dims(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &o) {
    require_dims(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex s) {
    for (auto &x : data_) x *= s;
    return *this;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_dims(a.cols() == b.rows(), "matrix product");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

ComplexMatrix dagger(const ComplexMatrix &a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

Complex trace(const ComplexMatrix &a) {
    require_dims(a.is_square(), "trace of non-square matrix");
    Complex t{};
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_dims(a.cols() == b.rows() && a.rows() == b.cols(), "trace of product");
    Complex t{};
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
    return t;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_dims(a.rows() == b.rows() && a.cols() == b.cols(), "matrix comparison");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    return m;
}

double frobenius_norm(const ComplexMatrix &a) {
    double s = 0.0;
    for (Complex z : a.entries()) s += std::norm(z);
    return std::sqrt(s);
}

bool is_hermitian(const ComplexMatrix &a, double tol) {
    if (!a.is_square()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
    return true;
}

HermitianEigen hermitian_eigen(const ComplexMatrix &input) {
    if (!is_hermitian(input, kDerivedTol))
        throw Error(ErrorCode::NotHermitian, "matrix deviates from its adjoint by more than 1e-9");
    const std::size_t n = input.rows();

    // Symmetrize so the rotations act on an exactly Hermitian matrix.
    ComplexMatrix a = 0.5 * (input + dagger(input));
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = kJacobiOffDiagTol * std::max(1.0, frobenius_norm(a));

    for (int sweep = 0; sweep < 100 && off_diagonal_norm(a) > threshold; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex b = a(p, q);
                const double mag = std::abs(b);
                if (mag == 0.0) continue;
                const Complex phase = b / mag;  // e^{iφ}
                const double alpha = a(p, p).real();
                const double beta = a(q, q).real();
                const double theta = (beta - alpha) / (2.0 * mag);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // Unitary acting on (p, q): diag(1, e^{-iφ}) followed by a real rotation.
                const Complex vpp = c, vpq = s;
                const Complex vqp = -s * std::conj(phase), vqq = c * std::conj(phase);

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * vpp + akq * vqp;
                    a(k, q) = akp * vpq + akq * vqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
                    a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * vpp + vkq * vqp;
                    v(k, q) = vkp * vpq + vkq * vqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a) { return hermitian_eigen(a).values; }

double trace_norm(const ComplexMatrix &a) {
    double s = 0.0;
    for (double l : hermitian_eigenvalues(a)) s += std::abs(l);
    return s;
}

ComplexMatrix psd_sqrt(const ComplexMatrix &a, double tol) {
    const auto eig = hermitian_eigen(a);
    const std::size_t n = a.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double l = eig.values[k];
        if (l < -tol) throw Error(ErrorCode::InvalidArgument, "psd_sqrt of a matrix with negative eigenvalue");
        const double r = std::sqrt(std::max(l, 0.0));
        if (r == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += r * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
    }
    return out;
}

Ket::Ket(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.empty()) throw Error(ErrorCode::InvalidArgument, "ket must have dimension >= 1");
    double n2 = 0.0;
    for (Complex z : amps_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw Error(ErrorCode::InvalidArgument, "ket amplitude is not finite");
        n2 += std::norm(z);
    }
    if (std::abs(std::sqrt(n2) - 1.0) > kKetNormTol)
        throw Error(ErrorCode::InvalidArgument, "ket is not normalized (norm " + std::to_string(std::sqrt(n2)) + ")");
}

Ket Ket::normalized(std::vector<Complex> amplitudes) {
    double n2 = 0.0;
    for (Complex z : amplitudes) n2 += std::norm(z);
    if (!(n2 > 0.0)) throw Error(ErrorCode::InvalidArgument, "cannot normalize the zero vector");
    const double inv = 1.0 / std::sqrt(n2);
    for (Complex &z : amplitudes) z *= inv;
    return Ket(std::move(amplitudes));
}

Ket Ket::basis(std::size_t dim, std::size_t k) {
    if (k >= dim) throw Error(ErrorCode::InvalidArgument, "basis index out of range");
    std::vector<Complex> a(dim);
    a[k] = 1.0;
    return Ket(std::move(a));
}

ComplexMatrix Ket::projector() const {
    ComplexMatrix p(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) p(i, j) = amps_[i] * std::conj(amps_[j]);
    return p;
}

ComplexMatrix Ket::column() const { return ComplexMatrix(dim(), 1, amps_); }

Ket kron(const Ket &a, const Ket &b) {
    std::vector<Complex> out;
    out.reserve(a.dim() * b.dim());
    for (Complex x : a.amplitudes())
        for (Complex y : b.amplitudes()) out.push_back(x * y);
    return Ket::normalized(std::move(out));
}

Ket tensor_power(const Ket &k, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "tensor power must be >= 1");
    Ket out = k;
    for (std::size_t i = 1; i < n; ++i) out = kron(out, k);
    return out;
}

Complex inner(const Ket &a, const Ket &b) {
    require_dims(a.dim() == b.dim(), "inner product of kets with different dimensions");
    Complex s{};
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be >= 1");
}

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be >= 1");
    require_dims(data_.size() == rows * cols, "entry count does not match rows*cols");
}

RealMatrix::RealMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0) throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be >= 1");
    for (const auto &r : rows) {
        require_dims(r.size() == cols_, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RealMatrix RealMatrix::identity(std::size_t n) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double RealMatrix::column_sum(std::size_t c) const {
    double s = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) s += (*this)(r, c);
    return s;
}

std::vector<double> RealMatrix::column(std::size_t c) const {
    std::vector<double> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

bool RealMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

RealMatrix operator*(const RealMatrix &a, const RealMatrix &b) {
    require_dims(a.cols() == b.rows(), "matrix product");
    RealMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

std::vector<double> operator*(const RealMatrix &a, std::span<const double> v) {
    require_dims(a.cols() == v.size(), "matrix-vector product");
    std::vector<double> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
    return out;
}

RealMatrix kron(const RealMatrix &a, const RealMatrix &b) {
    RealMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

double max_abs_diff(const RealMatrix &a, const RealMatrix &b) {
    require_dims(a.rows() == b.rows() && a.cols() == b.cols(), "matrix comparison");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    return m;
}

}  // namespace ontokit
