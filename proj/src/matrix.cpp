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

#include "esd/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "esd/errors.hpp"

namespace esd {

namespace {

bool all_finite(std::span<const Complex> xs) {
    return std::all_of(xs.begin(), xs.end(),
                       [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("ComplexMatrix: dimensions must be positive");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("ComplexMatrix: dimensions must be positive");
    }
    if (data_.size() != rows * cols) {
        throw DimensionError("ComplexMatrix: entry count does not match rows*cols");
    }
    if (!all_finite(data_)) {
        throw DomainError("ComplexMatrix: entries must be finite");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    if (rows_ == 0 || cols_ == 0) {
        throw DimensionError("ComplexMatrix: dimensions must be positive");
    }
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw DimensionError("ComplexMatrix: ragged row literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
    if (!all_finite(data_)) {
        throw DomainError("ComplexMatrix: entries must be finite");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator+");
    std::transform(data_.begin(), data_.end(), other.data_.begin(), data_.begin(), std::plus<>{});
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator-");
    std::transform(data_.begin(), data_.end(), other.data_.begin(), data_.begin(), std::minus<>{});
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& z : data_) z *= scale;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, Complex scale) { return a *= scale; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
    }
    return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    }
    return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                             std::to_string(b.rows()) + ")");
    }
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

Complex trace(const ComplexMatrix& a) {
    if (!a.is_square()) throw DimensionError("trace: matrix is not square");
    Complex sum{};
    for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
    return sum;
}

double frobenius_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (const auto& z : a.entries()) sum += std::norm(z);
    return std::sqrt(sum);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) worst = std::max(worst, std::abs(ea[i] - eb[i]));
    return worst;
}

double hermiticity_defect(const ComplexMatrix& a) {
    if (!a.is_square()) throw DimensionError("hermiticity_defect: matrix is not square");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i; j < a.cols(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
        }
    }
    return worst;
}

double Spectrum::sum() const noexcept {
    double s = 0.0;
    for (double x : eigenvalues) s += x;
    return s;
}

namespace {

constexpr double kOffDiagonalTarget = 1e-13;
constexpr int kMaxSweeps = 64;

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) sum += std::norm(a(i, j));
        }
    }
    return std::sqrt(sum);
}

// Zeroes a(p,q) and a(q,p) with the unitary U = D R, where D rephases the
// q-th basis vector so the pivot becomes real and R is the usual real Jacobi
// rotation. Applies a <- U^dagger a U in place.
void rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;

    const Complex phase = apq / mag;  // e^{i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * mag);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const Complex phase_conj = std::conj(phase);

    const std::size_t n = a.rows();
    // Columns: a <- a U.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp - s * phase_conj * akq;
        a(k, q) = s * akp + c * phase_conj * akq;
    }
    // Rows: a <- U^dagger a.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - s * phase * aqk;
        a(q, k) = s * apk + c * phase * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

Spectrum hermitian_eigenvalues(const ComplexMatrix& a, double tol) {
    if (!a.is_square()) {
        throw DimensionError("hermitian_eigenvalues: matrix is not square");
    }
    if (!all_finite(a.entries())) {
        throw NumericalError("hermitian_eigenvalues: non-finite entries");
    }
    const double defect = hermiticity_defect(a);
    if (defect > tol) {
        throw DomainError("hermitian_eigenvalues: matrix is not Hermitian (defect " + std::to_string(defect) +
                          ")");
    }

    ComplexMatrix work = (a + dagger(a)) * Complex{0.5};
    const std::size_t n = work.rows();
    const double target = kOffDiagonalTarget * std::max(1.0, frobenius_norm(work));

    int sweep = 0;
    while (off_diagonal_norm(work) >= target) {
        if (++sweep > kMaxSweeps) {
            throw NumericalError("hermitian_eigenvalues: Jacobi sweeps did not converge");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) rotate(work, p, q);
        }
    }

    Spectrum spectrum;
    spectrum.eigenvalues.reserve(n);
    for (std::size_t i = 0; i < n; ++i) spectrum.eigenvalues.push_back(work(i, i).real());
    std::sort(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(), std::greater<>{});
    return spectrum;
}

}  // namespace esd
