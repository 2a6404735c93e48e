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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ontokit {

/// Default comparison tolerances. Derived quantities (eigenvalues, Born
/// probabilities, reconstructed operators) use kDerivedTol; pure index
/// bookkeeping identities use kStructuralTol.
inline constexpr double kDerivedTol = 1e-9;
inline constexpr double kStructuralTol = 1e-12;
inline constexpr double kKetNormTol = 1e-10;
inline constexpr double kJacobiOffDiagTol = 1e-12;

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Dimensions in this library stay below a
/// few hundred, so there is no sparse path.
class ComplexMatrix {
   public:
    ComplexMatrix() : ComplexMatrix(1, 1) {}
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const { return data_; }

    ComplexMatrix &operator+=(const ComplexMatrix &o);
    ComplexMatrix &operator-=(const ComplexMatrix &o);
    ComplexMatrix &operator*=(Complex s);

    bool all_finite() const;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);

/// Kronecker product; the left factor indexes the major (slow) position.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix dagger(const ComplexMatrix &a);
Complex trace(const ComplexMatrix &a);
/// Tr(a·b) without forming the product.
Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double frobenius_norm(const ComplexMatrix &a);
bool is_hermitian(const ComplexMatrix &a, double tol = kDerivedTol);

struct HermitianEigen {
    std::vector<double> values;  // nondecreasing
    ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops
/// below kJacobiOffDiagTol (scaled by the matrix norm when it exceeds 1).
/// Throws NotHermitian when ‖a − a†‖_max > 1e-9.
HermitianEigen hermitian_eigen(const ComplexMatrix &a);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a);
/// Σ|λᵢ| for Hermitian a.
double trace_norm(const ComplexMatrix &a);
/// Principal square root of a positive semidefinite matrix; eigenvalues in
/// [-tol, 0) are clamped to zero.
ComplexMatrix psd_sqrt(const ComplexMatrix &a, double tol = kDerivedTol);

/// Unit vector in Cᵈ. Global phase is kept as given.
class Ket {
   public:
    /// Validates ‖amplitudes‖₂ = 1 within kKetNormTol.
    explicit Ket(std::vector<Complex> amplitudes);

    static Ket normalized(std::vector<Complex> amplitudes);
    static Ket basis(std::size_t dim, std::size_t k);

    std::size_t dim() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    const Complex &operator[](std::size_t i) const { return amps_[i]; }

    /// |ψ⟩⟨ψ|
    ComplexMatrix projector() const;
    /// dim × 1 column.
    ComplexMatrix column() const;

   private:
    std::vector<Complex> amps_;
};

Ket kron(const Ket &a, const Ket &b);
Ket tensor_power(const Ket &k, std::size_t n);
/// ⟨a|b⟩, conjugate-linear in the first argument.
Complex inner(const Ket &a, const Ket &b);

/// Dense row-major real matrix; the storage for kernels and transfer matrices.
class RealMatrix {
   public:
    RealMatrix() : RealMatrix(1, 1) {}
    RealMatrix(std::size_t rows, std::size_t cols);
    RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
    RealMatrix(std::initializer_list<std::initializer_list<double>> rows);

    static RealMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const double> entries() const { return data_; }

    double column_sum(std::size_t c) const;
    std::vector<double> column(std::size_t c) const;
    bool all_finite() const;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

RealMatrix operator*(const RealMatrix &a, const RealMatrix &b);
std::vector<double> operator*(const RealMatrix &a, std::span<const double> v);
RealMatrix kron(const RealMatrix &a, const RealMatrix &b);
double max_abs_diff(const RealMatrix &a, const RealMatrix &b);

}  // namespace ontokit
