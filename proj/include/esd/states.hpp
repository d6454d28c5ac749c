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

#include <string>
#include <string_view>
#include <vector>

#include "esd/matrix.hpp"

namespace esd {

/// Local dimensions of a bipartite system. Only qubits and qutrits are supported.
struct Dims {
    int a = 2;
    int b = 3;

    int total() const noexcept { return a * b; }
    bool operator==(const Dims&) const = default;

    /// Parses "2x3" style text; throws DimensionError on malformed or unsupported input.
    static Dims parse(std::string_view text);
    std::string to_string() const;
};

/// Throws DimensionError unless both sides are 2 or 3.
void require_supported(Dims dims);

/// Pure state sum_{ij} a_ij |i,j>, stored with the second index fastest
/// (|i,j> sits at index i*dim_b + j). This ordering is used throughout.
class BipartiteState {
public:
    /// Throws DimensionError on unsupported dims or wrong amplitude count, and
    /// DomainError when the amplitudes are not normalized to within 1e-12.
    BipartiteState(Dims dims, std::vector<Complex> amplitudes);

    Dims dims() const noexcept { return dims_; }
    const std::vector<Complex>& amplitudes() const noexcept { return amplitudes_; }
    const Complex& amplitude(int i, int j) const { return amplitudes_[static_cast<std::size_t>(i * dims_.b + j)]; }

private:
    Dims dims_;
    std::vector<Complex> amplitudes_;
};

/// a|00> + sqrt(1-a^2)|11>, with 0 <= a <= 1.
BipartiteState schmidt_state(double a, int dim_a, int dim_b);

/// (1/sqrt(m)) sum_{k<m} |kk>, m = min(dim_a, dim_b). Requires dim_a <= dim_b.
BipartiteState max_entangled(int dim_a, int dim_b);
inline BipartiteState max_entangled(Dims dims) { return max_entangled(dims.a, dims.b); }

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPositivityTol = 1e-10;

/// Bipartite density matrix. Construction enforces Hermiticity and unit trace
/// to 1e-12 and a minimum eigenvalue of at least -1e-10; violations throw
/// NumericalError.
class DensityMatrix {
public:
    DensityMatrix(Dims dims, ComplexMatrix matrix);

    Dims dims() const noexcept { return dims_; }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }

    double purity() const;

    /// Traces out the second subsystem (dim_a x dim_a result).
    ComplexMatrix reduced_first() const;
    /// Traces out the first subsystem (dim_b x dim_b result).
    ComplexMatrix reduced_second() const;

private:
    Dims dims_;
    ComplexMatrix matrix_;
};

/// |psi><psi|.
DensityMatrix to_density(const BipartiteState& state);

}  // namespace esd
