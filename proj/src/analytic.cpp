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

#include "esd/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "esd/errors.hpp"

namespace esd {

namespace {

void require_formula(NoiseKind kind, Dims dims) {
    if (kind == NoiseKind::GeneralizedAmplitudeDamping) {
        throw NoFormulaError("no closed-form negativity for generalized amplitude damping");
    }
    if (!(dims == Dims{2, 3}) && !(dims == Dims{3, 3})) {
        throw NoFormulaError("no closed-form negativity for dims " + dims.to_string());
    }
}

}  // namespace

double analytic_negativity_raw(NoiseKind kind, Dims dims, double gamma_t) {
    require_formula(kind, dims);
    if (!(gamma_t >= 0.0)) throw DomainError("analytic_negativity: gamma_t must be non-negative");
    const double eta = damping_eta(gamma_t);
    const double alpha = depolarizing_alpha(gamma_t);
    const bool qubit = dims.a == 2;
    switch (kind) {
        case NoiseKind::AmplitudeDamping: return qubit ? eta * eta / 2.0 : 5.0 * eta * eta / 6.0;
        case NoiseKind::PhaseDamping: return qubit ? eta / 2.0 : eta * (eta + 2.0) / 3.0;
        case NoiseKind::Depolarizing: return qubit ? (1.0 - 2.0 * alpha) / 2.0 : (2.0 - 3.0 * alpha) / 2.0;
        case NoiseKind::GeneralizedAmplitudeDamping: break;
    }
    throw NoFormulaError("no closed-form negativity");
}

double analytic_negativity(NoiseKind kind, Dims dims, double gamma_t) {
    return std::max(0.0, analytic_negativity_raw(kind, dims, gamma_t));
}

std::optional<double> esd_time_analytic(NoiseKind kind, Dims dims) {
    require_formula(kind, dims);
    if (kind != NoiseKind::Depolarizing) return std::nullopt;
    // alpha = 1/2 (qubit) or 2/3 (qutrit), i.e. e^{-gamma_t/2} = 1/d.
    return 2.0 * std::log(static_cast<double>(dims.a));
}

}  // namespace esd
