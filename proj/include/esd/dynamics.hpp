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

#include <cstddef>
#include <optional>
#include <vector>

#include "esd/channels.hpp"
#include "esd/states.hpp"

namespace esd {

inline constexpr double kDefaultZeroTol = 1e-9;
inline constexpr double kBisectionWidth = 1e-8;
inline constexpr double kAsymptoticHorizon = 20.0;
inline constexpr std::size_t kDefaultScanSteps = 2001;
inline constexpr double kFigureTMax = 10.0;
inline constexpr std::size_t kFigureSteps = 401;

struct Sample {
    double gamma_t;
    double negativity;
};

/// Negativity sampled on a uniform, strictly increasing gamma_t grid.
struct NegativitySeries {
    NoiseModel model;
    Dims dims;
    Side side;
    std::vector<Sample> samples;
};

enum class EsdVerdict { FiniteTime, Asymptotic };

struct EsdResult {
    EsdVerdict verdict;
    /// Midpoint of the final bisection bracket; set iff verdict is FiniteTime.
    std::optional<double> time;
    /// Width of the final bracket (zero for Asymptotic).
    double bracket_width = 0.0;
    /// Negativity at the end of the scanned interval.
    double final_negativity = 0.0;
    /// False for 3x3, where zero negativity does not prove separability.
    bool ppt_certifies_separability = true;
};

/// Negativity of the maximally entangled state for `dims` after the channel
/// acts on `side` for time gamma_t. The channel dimension is that of the
/// chosen subsystem.
double negativity_at(const NoiseModel& model, Dims dims, Side side, double gamma_t);

/// Uniform grid of `steps` points on [0, t_max]. Throws DomainError unless
/// steps >= 2 and t_max > 0.
std::vector<double> uniform_grid(double t_max, std::size_t steps);

/// Samples negativity_at on uniform_grid(t_max, steps). Grid points are
/// evaluated in parallel; the result does not depend on evaluation order.
NegativitySeries sweep(const NoiseModel& model, Dims dims, Side side, double t_max, std::size_t steps);

/// Scans [0, t_max] on `scan_steps` points for the first sample with
/// negativity <= zero_tol, then bisects the bracketing interval down to
/// kBisectionWidth.
///
/// FiniteTime also requires some later sample to have negativity exactly
/// zero (no partial-transpose eigenvalue below -1e-12). An exponential tail
/// that merely drops under zero_tol near t_max, as for qutrit GAD, is
/// reported as Asymptotic with its small final_negativity.
EsdResult esd_time(const NoiseModel& model, Dims dims, Side side, double t_max = kAsymptoticHorizon,
                   double zero_tol = kDefaultZeroTol, std::size_t scan_steps = kDefaultScanSteps);

/// One series per model, noise on the first subsystem, all on one shared grid.
/// Requires at least two models.
std::vector<NegativitySeries> compare(const std::vector<NoiseModel>& models, Dims dims, double t_max,
                                      std::size_t steps);

/// One GAD series per p, noise on the first subsystem.
std::vector<NegativitySeries> gad_p_scan(Dims dims, const std::vector<double>& p_values, double t_max,
                                         std::size_t steps);

}  // namespace esd
