// Copyright 2026 The esdsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

namespace esd {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
///
/// Sized for the small operators this library works with (at most 81x81);
/// all arithmetic is plain O(n^3) loops.
class ComplexMatrix {
public:
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    /// Row-wise literal, e.g. `{{1, 0}, {0, 1}}`.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const noexcept { return data_; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    bool operator==(const ComplexMatrix&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product. Entry (i*b.rows + k, j*b.cols + l) is a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

ComplexMatrix transpose(const ComplexMatrix& a);

/// Matrix product; throws DimensionError when a.cols() != b.rows().
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

Complex trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// Largest entrywise modulus of a - dagger(a).
double hermiticity_defect(const ComplexMatrix& a);

/// Real eigenvalues of a Hermitian matrix, sorted descending, so that any
/// negative eigenvalues form a suffix.
struct Spectrum {
    std::vector<double> eigenvalues;

    std::size_t size() const noexcept { return eigenvalues.size(); }
    double sum() const noexcept;
    double min() const { return eigenvalues.back(); }
    double max() const { return eigenvalues.front(); }
};

inline constexpr double kDefaultHermiticityTol = 1e-10;

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// The input is first symmetrized as (A + A^dagger)/2. Sweeps continue until
/// the off-diagonal Frobenius norm drops below 1e-13 (scaled by ||A||_F when
/// that exceeds 1).
///
/// Throws DimensionError for non-square input, DomainError when
/// ||A - A^dagger||_max > tol, and NumericalError if the sweeps do not
/// converge or the input has non-finite entries.
Spectrum hermitian_eigenvalues(const ComplexMatrix& a, double tol = kDefaultHermiticityTol);

}  // namespace esd
