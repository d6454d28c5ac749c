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

#include "esd/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <thread>

#include "esd/entanglement.hpp"
#include "esd/errors.hpp"

namespace esd {

namespace {

// Runs fn(i) for i in [0, n) on a small pool. Each index writes only its own
// output slot, so results are independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
    if (workers == 1 || n < 2 * workers) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < n; i += workers) fn(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

std::vector<double> evaluate(const NoiseModel& model, Dims dims, Side side, const std::vector<double>& grid) {
    std::vector<double> values(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { values[i] = negativity_at(model, dims, side, grid[i]); });
    return values;
}

}  // namespace

double negativity_at(const NoiseModel& model, Dims dims, Side side, double gamma_t) {
    const DensityMatrix initial = to_density(max_entangled(dims));
    const int dim = side == Side::First ? dims.a : dims.b;
    const DensityMatrix evolved = apply_local(kraus_set(model, dim, gamma_t), initial, side);
    return negativity(evolved, Side::First).value;
}

std::vector<double> uniform_grid(double t_max, std::size_t steps) {
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("t_max must be > 0");
    if (steps < 2) throw DomainError("steps must be >= 2");
    std::vector<double> grid(steps);
    const double denom = static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) grid[i] = t_max * (static_cast<double>(i) / denom);
    grid.back() = t_max;
    return grid;
}

NegativitySeries sweep(const NoiseModel& model, Dims dims, Side side, double t_max, std::size_t steps) {
    require_supported(dims);
    const auto grid = uniform_grid(t_max, steps);
    const auto values = evaluate(model, dims, side, grid);
    NegativitySeries series{model, dims, side, {}};
    series.samples.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) series.samples.push_back({grid[i], values[i]});
    return series;
}

EsdResult esd_time(const NoiseModel& model, Dims dims, Side side, double t_max, double zero_tol,
                   std::size_t scan_steps) {
    if (!(zero_tol > 0.0)) throw DomainError("zero_tol must be > 0");
    require_supported(dims);
    const auto grid = uniform_grid(t_max, scan_steps);
    const auto values = evaluate(model, dims, side, grid);

    EsdResult result{EsdVerdict::Asymptotic, std::nullopt, 0.0, values.back(), dims.a * dims.b <= 6};
    const auto hit = std::find_if(values.begin(), values.end(), [&](double n) { return n <= zero_tol; });
    if (hit == values.end()) return result;

    // Exponential tails also dip below zero_tol eventually. Sudden death
    // additionally requires the partial transpose to turn positive, i.e. the
    // negativity to become exactly zero somewhere past the crossing.
    if (std::none_of(hit, values.end(), [](double n) { return n == 0.0; })) return result;

    const auto idx = static_cast<std::size_t>(hit - values.begin());
    result.verdict = EsdVerdict::FiniteTime;
    if (idx == 0) {
        // Already separable at t = 0.
        result.time = 0.0;
        return result;
    }
    double lo = grid[idx - 1];
    double hi = grid[idx];
    while (hi - lo > kBisectionWidth) {
        const double mid = 0.5 * (lo + hi);
        if (negativity_at(model, dims, side, mid) <= zero_tol) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    result.time = 0.5 * (lo + hi);
    result.bracket_width = hi - lo;
    return result;
}

std::vector<NegativitySeries> compare(const std::vector<NoiseModel>& models, Dims dims, double t_max,
                                      std::size_t steps) {
    if (models.size() < 2) throw DomainError("compare needs at least two models");
    std::vector<NegativitySeries> out;
    out.reserve(models.size());
    for (const auto& model : models) out.push_back(sweep(model, dims, Side::First, t_max, steps));
    return out;
}

std::vector<NegativitySeries> gad_p_scan(Dims dims, const std::vector<double>& p_values, double t_max,
                                         std::size_t steps) {
    std::vector<NegativitySeries> out;
    out.reserve(p_values.size());
    for (double p : p_values) {
        out.push_back(sweep(NoiseModel::generalized_amplitude_damping(p), dims, Side::First, t_max, steps));
    }
    return out;
}

}  // namespace esd
