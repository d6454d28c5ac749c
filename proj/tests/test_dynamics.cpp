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

#include <doctest.h>

#include <cmath>
#include <limits>

#include "esd/dynamics.hpp"
#include "esd/errors.hpp"
#include "reference_states.hpp"

using esd::Dims;
using esd::EsdVerdict;
using esd::NoiseModel;
using esd::Side;

namespace {

std::vector<NoiseModel> all_models() {
    return {NoiseModel::amplitude_damping(), NoiseModel::phase_damping(), NoiseModel::depolarizing(),
            NoiseModel::generalized_amplitude_damping(0.0), NoiseModel::generalized_amplitude_damping(0.25),
            NoiseModel::generalized_amplitude_damping(0.5), NoiseModel::generalized_amplitude_damping(1.0)};
}

}  // namespace

TEST_CASE("uniform_grid") {
    const auto g = esd::uniform_grid(10.0, 101);
    CHECK(g.size() == 101);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 10.0);
    CHECK(g[50] == doctest::Approx(5.0));
    CHECK_THROWS_AS(esd::uniform_grid(0.0, 3), esd::DomainError);
    CHECK_THROWS_AS(esd::uniform_grid(1.0, 1), esd::DomainError);
}

TEST_CASE("amplitude-damping sweep follows e^{-gamma_t}/2") {
    const auto s = esd::sweep(NoiseModel::amplitude_damping(), {2, 3}, Side::First, 10.0, 101);
    REQUIRE(s.samples.size() == 101);
    for (const auto& sample : s.samples) CHECK(std::abs(sample.negativity - std::exp(-sample.gamma_t) / 2) < 1e-10);
}

TEST_CASE("every sweep starts at maximal negativity and never increases") {
    for (const auto& model : all_models()) {
        for (Dims dims : {Dims{2, 3}, Dims{3, 3}}) {
            for (Side side : {Side::First, Side::Second}) {
                const auto s = esd::sweep(model, dims, side, 10.0, 81);
                CAPTURE(model.label());
                CAPTURE(dims.to_string());
                CHECK(std::abs(s.samples.front().negativity - (dims.a == 2 ? 0.5 : 1.0)) < 1e-12);
                for (std::size_t i = 1; i < s.samples.size(); ++i) {
                    CHECK(s.samples[i].gamma_t > s.samples[i - 1].gamma_t);
                    CHECK(s.samples[i].negativity >= 0.0);
                    CHECK(s.samples[i].negativity <= s.samples[i - 1].negativity + 1e-10);
                }
            }
        }
    }
}

TEST_CASE("GAD p = 0.5 sweep crosses zero") {
    const auto s = esd::sweep(NoiseModel::generalized_amplitude_damping(0.5), {2, 3}, Side::First, 5.0, 501);
    const double expected = esd::reference::gad_qubit_esd_time(0.5);
    std::size_t first_zero = 0;
    while (first_zero < s.samples.size() && s.samples[first_zero].negativity > 0.0) ++first_zero;
    REQUIRE(first_zero < s.samples.size());
    REQUIRE(first_zero > 0);
    CHECK(s.samples[first_zero - 1].gamma_t < expected);
    CHECK(s.samples[first_zero].gamma_t >= expected);
}

TEST_CASE("esd_time for depolarizing noise") {
    const auto r23 = esd::esd_time(NoiseModel::depolarizing(), {2, 3}, Side::First);
    REQUIRE(r23.verdict == EsdVerdict::FiniteTime);
    CHECK(std::abs(*r23.time - 2 * std::log(2.0)) < 1e-6);
    CHECK(r23.bracket_width <= esd::kBisectionWidth);
    CHECK(r23.ppt_certifies_separability);

    const auto r33 = esd::esd_time(NoiseModel::depolarizing(), {3, 3}, Side::First);
    REQUIRE(r33.verdict == EsdVerdict::FiniteTime);
    CHECK(std::abs(*r33.time - 2 * std::log(3.0)) < 1e-6);
    CHECK_FALSE(r33.ppt_certifies_separability);
}

TEST_CASE("esd_time bracket straddles the crossing") {
    for (const auto& model : {NoiseModel::depolarizing(), NoiseModel::generalized_amplitude_damping(0.3)}) {
        const auto r = esd::esd_time(model, {2, 3}, Side::First);
        REQUIRE(r.verdict == EsdVerdict::FiniteTime);
        const double half = r.bracket_width / 2;
        CHECK(esd::negativity_at(model, {2, 3}, Side::First, *r.time - half) > esd::kDefaultZeroTol);
        CHECK(esd::negativity_at(model, {2, 3}, Side::First, *r.time + half) <= esd::kDefaultZeroTol);
    }
}

TEST_CASE("esd_time for GAD matches the 2x2 block determinant") {
    for (double p : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        const auto r = esd::esd_time(NoiseModel::generalized_amplitude_damping(p), {2, 3}, Side::First);
        REQUIRE(r.verdict == EsdVerdict::FiniteTime);
        CAPTURE(p);
        CHECK(std::abs(*r.time - esd::reference::gad_qubit_esd_time(p)) < 1e-6);
    }
}

TEST_CASE("esd_time is robust to the scan grid") {
    for (const auto& model : {NoiseModel::depolarizing(), NoiseModel::generalized_amplitude_damping(0.5)}) {
        for (Dims dims : {Dims{2, 3}, Dims{3, 3}}) {
            const auto coarse = esd::esd_time(model, dims, Side::First, 20.0, esd::kDefaultZeroTol, 1001);
            const auto fine = esd::esd_time(model, dims, Side::First, 20.0, esd::kDefaultZeroTol, 2001);
            REQUIRE(coarse.verdict == fine.verdict);
            if (coarse.verdict == EsdVerdict::FiniteTime) {
                CHECK(std::abs(*coarse.time - *fine.time) < esd::kBisectionWidth);
            }
        }
    }
}

TEST_CASE("amplitude and phase damping decay asymptotically") {
    for (const auto& model : {NoiseModel::amplitude_damping(), NoiseModel::phase_damping()}) {
        for (Dims dims : {Dims{2, 3}, Dims{3, 3}}) {
            const auto r = esd::esd_time(model, dims, Side::First, 20.0);
            CHECK(r.verdict == EsdVerdict::Asymptotic);
            CHECK_FALSE(r.time.has_value());
            CHECK(r.final_negativity > esd::kDefaultZeroTol);
        }
    }
}

TEST_CASE("qutrit GAD tail is not mistaken for sudden death") {
    // N ~ e^{-gamma_t}/3 drops below 1e-9 near gamma_t = 19.6 but never vanishes.
    const auto r = esd::esd_time(NoiseModel::generalized_amplitude_damping(0.5), {3, 3}, Side::First, 20.0);
    CHECK(r.verdict == EsdVerdict::Asymptotic);
    CHECK(r.final_negativity > 0.0);
    CHECK(std::abs(r.final_negativity * std::exp(20.0) - 1.0 / 3.0) < 1e-3);
}

TEST_CASE("esd_time argument checks") {
    CHECK_THROWS_AS(esd::esd_time(NoiseModel::depolarizing(), {2, 3}, Side::First, -1.0), esd::DomainError);
    CHECK_THROWS_AS(esd::esd_time(NoiseModel::depolarizing(), {2, 3}, Side::First, 20.0, 0.0), esd::DomainError);
    CHECK_THROWS_AS(esd::sweep(NoiseModel::depolarizing(), {2, 4}, Side::First, 1.0, 3), esd::DimensionError);
}

TEST_CASE("compare") {
    const auto series = esd::compare({NoiseModel::depolarizing(), NoiseModel::generalized_amplitude_damping(0.5)},
                                     {2, 3}, 10.0, 401);
    REQUIRE(series.size() == 2);
    for (std::size_t i = 0; i < series[0].samples.size(); ++i) {
        CHECK(series[0].samples[i].gamma_t == series[1].samples[i].gamma_t);
    }
    const auto dep = esd::esd_time(NoiseModel::depolarizing(), {2, 3}, Side::First);
    const auto gad = esd::esd_time(NoiseModel::generalized_amplitude_damping(0.5), {2, 3}, Side::First);
    CHECK(*dep.time < *gad.time);

    const auto damping = esd::compare({NoiseModel::amplitude_damping(), NoiseModel::phase_damping()}, {2, 3}, 20.0, 201);
    for (const auto& s : damping) CHECK(s.samples.back().negativity > 0.0);

    CHECK_THROWS_AS(esd::compare({NoiseModel::depolarizing()}, {2, 3}, 1.0, 3), esd::DomainError);
}

TEST_CASE("GAD p-scan") {
    const std::vector<double> ps{0.0, 0.25, 0.5, 0.75, 1.0};
    const auto series = esd::gad_p_scan({2, 3}, ps, 10.0, 401);
    REQUIRE(series.size() == ps.size());
    for (std::size_t k = 0; k < ps.size(); ++k) {
        const auto& mirror = series[ps.size() - 1 - k];
        for (std::size_t i = 0; i < series[k].samples.size(); ++i) {
            CHECK(std::abs(series[k].samples[i].negativity - mirror.samples[i].negativity) < 1e-10);
        }
    }
    std::vector<double> times;
    for (double p : ps) {
        const auto r = esd::esd_time(NoiseModel::generalized_amplitude_damping(p), {2, 3}, Side::First);
        const bool interior = p > 0.0 && p < 1.0;
        CHECK((r.verdict == EsdVerdict::FiniteTime) == interior);
        times.push_back(r.time.value_or(std::numeric_limits<double>::infinity()));
    }
    CHECK(times[2] <= times[1]);
    CHECK(times[2] <= times[3]);

    CHECK_THROWS_AS(esd::gad_p_scan({2, 3}, {1.5}, 1.0, 3), esd::DomainError);
}

TEST_CASE("3x3 GAD p-scan is symmetric and asymptotic at the ends") {
    const auto series = esd::gad_p_scan({3, 3}, {0.0, 0.3, 0.7, 1.0}, 10.0, 101);
    for (std::size_t i = 0; i < series[0].samples.size(); ++i) {
        CHECK(std::abs(series[0].samples[i].negativity - series[3].samples[i].negativity) < 1e-10);
        CHECK(std::abs(series[1].samples[i].negativity - series[2].samples[i].negativity) < 1e-10);
    }
    for (double p : {0.0, 1.0}) {
        CHECK(esd::esd_time(NoiseModel::generalized_amplitude_damping(p), {3, 3}, Side::First).verdict ==
              EsdVerdict::Asymptotic);
    }
}
