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

#include "esd/states.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>

#include "esd/errors.hpp"

namespace esd {

namespace {

bool supported_side(int d) { return d == 2 || d == 3; }

}  // namespace

void require_supported(Dims dims) {
    if (!supported_side(dims.a) || !supported_side(dims.b)) {
        throw DimensionError("unsupported dimensions " + dims.to_string() + " (each side must be 2 or 3)");
    }
}

Dims Dims::parse(std::string_view text) {
    const auto x = text.find('x');
    if (x == std::string_view::npos) {
        throw DimensionError("dims must look like 2x3, got '" + std::string(text) + "'");
    }
    auto parse_int = [&](std::string_view part) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size()) {
            throw DimensionError("dims must look like 2x3, got '" + std::string(text) + "'");
        }
        return value;
    };
    Dims dims{parse_int(text.substr(0, x)), parse_int(text.substr(x + 1))};
    require_supported(dims);
    return dims;
}

std::string Dims::to_string() const { return std::to_string(a) + "x" + std::to_string(b); }

BipartiteState::BipartiteState(Dims dims, std::vector<Complex> amplitudes)
    : dims_(dims), amplitudes_(std::move(amplitudes)) {
    require_supported(dims_);
    if (amplitudes_.size() != static_cast<std::size_t>(dims_.total())) {
        throw DimensionError("BipartiteState: expected " + std::to_string(dims_.total()) + " amplitudes");
    }
    double norm = 0.0;
    for (const auto& z : amplitudes_) norm += std::norm(z);
    if (std::abs(norm - 1.0) > 1e-12) {
        throw DomainError("BipartiteState: amplitudes are not normalized");
    }
}

BipartiteState schmidt_state(double a, int dim_a, int dim_b) {
    if (!(a >= 0.0 && a <= 1.0)) {
        throw DomainError("schmidt_state: coefficient must lie in [0, 1]");
    }
    const Dims dims{dim_a, dim_b};
    require_supported(dims);
    std::vector<Complex> amps(static_cast<std::size_t>(dims.total()));
    amps[0] = a;
    amps[static_cast<std::size_t>(dim_b + 1)] = std::sqrt(1.0 - a * a);
    return {dims, std::move(amps)};
}

BipartiteState max_entangled(int dim_a, int dim_b) {
    const Dims dims{dim_a, dim_b};
    require_supported(dims);
    if (dim_a > dim_b) {
        throw DimensionError("max_entangled: first subsystem must not be larger than the second");
    }
    const int m = std::min(dim_a, dim_b);
    std::vector<Complex> amps(static_cast<std::size_t>(dims.total()));
    const double amp = 1.0 / std::sqrt(static_cast<double>(m));
    for (int k = 0; k < m; ++k) amps[static_cast<std::size_t>(k * dim_b + k)] = amp;
    return {dims, std::move(amps)};
}

DensityMatrix::DensityMatrix(Dims dims, ComplexMatrix matrix) : dims_(dims), matrix_(std::move(matrix)) {
    require_supported(dims_);
    const auto n = static_cast<std::size_t>(dims_.total());
    if (matrix_.rows() != n || matrix_.cols() != n) {
        throw DimensionError("DensityMatrix: matrix size does not match dims " + dims_.to_string());
    }
    if (hermiticity_defect(matrix_) > kHermitianTol) {
        throw NumericalError("DensityMatrix: matrix is not Hermitian");
    }
    if (std::abs(trace(matrix_) - Complex{1.0}) > kTraceTol) {
        throw NumericalError("DensityMatrix: trace differs from 1");
    }
    if (hermitian_eigenvalues(matrix_).min() < -kPositivityTol) {
        throw NumericalError("DensityMatrix: matrix has a negative eigenvalue");
    }
}

double DensityMatrix::purity() const { return trace(matmul(matrix_, matrix_)).real(); }

ComplexMatrix DensityMatrix::reduced_first() const {
    const auto da = static_cast<std::size_t>(dims_.a);
    const auto db = static_cast<std::size_t>(dims_.b);
    ComplexMatrix out(da, da);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t k = 0; k < da; ++k) {
            for (std::size_t j = 0; j < db; ++j) out(i, k) += matrix_(i * db + j, k * db + j);
        }
    }
    return out;
}

ComplexMatrix DensityMatrix::reduced_second() const {
    const auto da = static_cast<std::size_t>(dims_.a);
    const auto db = static_cast<std::size_t>(dims_.b);
    ComplexMatrix out(db, db);
    for (std::size_t j = 0; j < db; ++j) {
        for (std::size_t l = 0; l < db; ++l) {
            for (std::size_t i = 0; i < da; ++i) out(j, l) += matrix_(i * db + j, i * db + l);
        }
    }
    return out;
}

DensityMatrix to_density(const BipartiteState& state) {
    const auto& amps = state.amplitudes();
    const std::size_t n = amps.size();
    ComplexMatrix rho(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) rho(r, c) = amps[r] * std::conj(amps[c]);
    }
    return {state.dims(), std::move(rho)};
}

}  // namespace esd
