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

#include <optional>

#include "esd/channels.hpp"
#include "esd/states.hpp"

namespace esd {

/// Printed closed-form negativity of the maximally entangled state after
/// noise of `kind` on its first subsystem, with eta = e^{-gamma_t/2} and
/// alpha = 1 - eta:
///
///   2x3  AD            eta^2 / 2
///   2x3  PD            eta / 2
///   2x3  depolarizing  (1 - 2 alpha) / 2
///   3x3  AD            5 eta^2 / 6
///   3x3  PD            eta (eta + 2) / 3
///   3x3  depolarizing  (2 - 3 alpha) / 2
///
/// The raw expression can go negative past sudden death; this returns it
/// unclamped. Throws NoFormulaError for GAD or any other dims.
double analytic_negativity_raw(NoiseKind kind, Dims dims, double gamma_t);

/// analytic_negativity_raw clamped below at zero.
double analytic_negativity(NoiseKind kind, Dims dims, double gamma_t);

/// Time at which the closed form first reaches zero: 2 ln 2 for 2x3
/// depolarizing, 2 ln 3 for 3x3 depolarizing, nullopt for AD and PD (which
/// decay asymptotically). Throws NoFormulaError where no closed form exists.
std::optional<double> esd_time_analytic(NoiseKind kind, Dims dims);

}  // namespace esd
