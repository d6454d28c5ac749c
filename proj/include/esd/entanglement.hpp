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

#include "esd/channels.hpp"
#include "esd/matrix.hpp"
#include "esd/states.hpp"

namespace esd {

/// Eigenvalues of the partial transpose at or above this are treated as zero.
inline constexpr double kNegativeEigenvalueThreshold = -1e-12;

struct NegativityValue {
    double value = 0.0;

    /// Zero negativity certifies separability only for 2x2 and 2x3 systems.
    /// For 3x3 a PPT state may still be (bound) entangled.
    bool ppt_certifies_separability = true;
};

/// Transposes the indices of one subsystem: entry ((i,j),(k,l)) moves to
/// ((k,j),(i,l)) for Side::First and to ((i,l),(k,j)) for Side::Second.
ComplexMatrix partial_transpose(const DensityMatrix& rho, Side side);
/// Raw form for matrices that are not necessarily states. Requires a square
/// matrix of size dims.total().
ComplexMatrix partial_transpose(const ComplexMatrix& m, Dims dims, Side side);

/// Sum of |lambda| over partial-transpose eigenvalues below -1e-12. The side
/// does not change the value; the two partial transposes are full transposes
/// of each other.
NegativityValue negativity(const DensityMatrix& rho, Side side = Side::First);

}  // namespace esd
