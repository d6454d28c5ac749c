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

#include "esd/entanglement.hpp"

#include "esd/errors.hpp"

namespace esd {

ComplexMatrix partial_transpose(const ComplexMatrix& m, Dims dims, Side side) {
    const auto da = static_cast<std::size_t>(dims.a);
    const auto db = static_cast<std::size_t>(dims.b);
    if (m.rows() != da * db || m.cols() != da * db) {
        throw DimensionError("partial_transpose: matrix size does not match dims " + dims.to_string());
    }
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < db; ++j) {
            for (std::size_t k = 0; k < da; ++k) {
                for (std::size_t l = 0; l < db; ++l) {
                    const Complex v = m(i * db + j, k * db + l);
                    if (side == Side::First) {
                        out(k * db + j, i * db + l) = v;
                    } else {
                        out(i * db + l, k * db + j) = v;
                    }
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Side side) {
    return partial_transpose(rho.matrix(), rho.dims(), side);
}

NegativityValue negativity(const DensityMatrix& rho, Side side) {
    const Spectrum spectrum = hermitian_eigenvalues(partial_transpose(rho, side));
    NegativityValue result;
    for (auto it = spectrum.eigenvalues.rbegin(); it != spectrum.eigenvalues.rend(); ++it) {
        if (*it >= kNegativeEigenvalueThreshold) break;
        result.value -= *it;
    }
    const Dims dims = rho.dims();
    result.ppt_certifies_separability = dims.a * dims.b <= 6;
    return result;
}

}  // namespace esd
