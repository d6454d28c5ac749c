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

#include <array>
#include <cmath>

#include "esd/errors.hpp"
#include "esd/states.hpp"
#include "reference_states.hpp"

using esd::Complex;
using esd::ComplexMatrix;

TEST_CASE("schmidt_state") {
    const auto product = esd::schmidt_state(1.0, 2, 3);
    CHECK(product.amplitudes() == std::vector<Complex>{1, 0, 0, 0, 0, 0});

    const auto max = esd::schmidt_state(1 / std::sqrt(2.0), 2, 3);
    CHECK(std::abs(max.amplitude(0, 0) - 1 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(max.amplitude(1, 1) - 1 / std::sqrt(2.0)) < 1e-15);

    const auto s = esd::schmidt_state(0.6, 2, 3);
    const std::vector<Complex> expected{0.6, 0, 0, 0, 0.8, 0};
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(std::abs(s.amplitudes()[i] - expected[i]) < 1e-15);

    CHECK_THROWS_AS(esd::schmidt_state(-0.1, 2, 3), esd::DomainError);
    CHECK_THROWS_AS(esd::schmidt_state(1.1, 2, 3), esd::DomainError);
    CHECK_THROWS_AS(esd::schmidt_state(0.5, 2, 4), esd::DimensionError);
    CHECK_THROWS_AS(esd::schmidt_state(0.5, 1, 3), esd::DimensionError);
}

TEST_CASE("max_entangled") {
    const double r2 = 1 / std::sqrt(2.0);
    const double r3 = 1 / std::sqrt(3.0);
    CHECK(esd::max_entangled(2, 3).amplitudes() == std::vector<Complex>{r2, 0, 0, 0, r2, 0});
    CHECK(esd::max_entangled(2, 2).amplitudes() == std::vector<Complex>{r2, 0, 0, r2});
    CHECK(esd::max_entangled(3, 3).amplitudes() == std::vector<Complex>{r3, 0, 0, 0, r3, 0, 0, 0, r3});
    CHECK_THROWS_AS(esd::max_entangled(3, 2), esd::DimensionError);
    CHECK_THROWS_AS(esd::max_entangled(2, 5), esd::DimensionError);
}

TEST_CASE("BipartiteState requires normalization") {
    CHECK_THROWS_AS(esd::BipartiteState({2, 2}, {1, 1, 0, 0}), esd::DomainError);
    CHECK_THROWS_AS(esd::BipartiteState({2, 2}, {1, 0, 0}), esd::DimensionError);
    CHECK_NOTHROW(esd::BipartiteState({2, 2}, {Complex{0, 1}, 0, 0, 0}));
}

TEST_CASE("to_density") {
    SUBCASE("maximally entangled 2x3 is the undamped amplitude-damping matrix") {
        const auto rho = esd::to_density(esd::max_entangled(2, 3));
        CHECK(esd::max_abs_diff(rho.matrix(), esd::reference::amplitude_damped_state(1.0)) < 1e-15);
        CHECK(std::abs(rho.purity() - 1) < 1e-12);
    }
    SUBCASE("product state") {
        const auto rho = esd::to_density(esd::schmidt_state(1.0, 2, 3));
        ComplexMatrix expected(6, 6);
        expected(0, 0) = 1;
        CHECK(rho.matrix() == expected);
    }
    SUBCASE("maximally entangled 3x3 by outer-product indices") {
        const auto rho = esd::to_density(esd::max_entangled(3, 3));
        for (int r = 0; r < 9; ++r) {
            for (int c = 0; c < 9; ++c) {
                const bool on = r % 4 == 0 && c % 4 == 0;  // indices 3k + k
                CHECK(std::abs(rho.matrix()(r, c) - (on ? 1.0 / 3 : 0.0)) < 1e-15);
            }
        }
    }
}

TEST_CASE("Schmidt states have rank at most two") {
    for (int i = 0; i <= 20; ++i) {
        const double a = i / 20.0;
        for (auto [da, db] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
            const auto rho = esd::to_density(esd::schmidt_state(a, da, db));
            const auto s = esd::hermitian_eigenvalues(rho.matrix());
            int above = 0;
            for (double x : s.eigenvalues) above += x > 1e-10;
            CHECK(above <= 2);
            CHECK(s.min() >= -1e-10);
            CHECK(std::abs(s.sum() - 1) < 1e-12);
        }
    }
}

TEST_CASE("maximally entangled square states have maximally mixed marginals") {
    for (int d : {2, 3}) {
        const auto rho = esd::to_density(esd::max_entangled(d, d));
        const auto expected = ComplexMatrix::identity(d) * Complex{1.0 / d};
        CHECK(esd::max_abs_diff(rho.reduced_first(), expected) < 1e-12);
        CHECK(esd::max_abs_diff(rho.reduced_second(), expected) < 1e-12);
    }
}

TEST_CASE("DensityMatrix rejects invalid matrices") {
    CHECK_THROWS_AS(esd::DensityMatrix({2, 2}, ComplexMatrix::identity(4)), esd::NumericalError);
    CHECK_THROWS_AS(esd::DensityMatrix({2, 2}, ComplexMatrix::identity(3)), esd::DimensionError);
    const std::array<Complex, 4> negative{1.5, -0.5, 0, 0};
    CHECK_THROWS_AS(esd::DensityMatrix({2, 2}, ComplexMatrix::diagonal(negative)), esd::NumericalError);
    ComplexMatrix skew = ComplexMatrix::identity(4) * Complex{0.25};
    skew(0, 1) = 0.1;
    CHECK_THROWS_AS(esd::DensityMatrix({2, 2}, skew), esd::NumericalError);
}

TEST_CASE("Dims parsing") {
    CHECK(esd::Dims::parse("2x3") == esd::Dims{2, 3});
    CHECK(esd::Dims::parse("3x3") == esd::Dims{3, 3});
    CHECK(esd::Dims::parse("2x2") == esd::Dims{2, 2});
    CHECK_THROWS_AS(esd::Dims::parse("2x4"), esd::DimensionError);
    CHECK_THROWS_AS(esd::Dims::parse("23"), esd::DimensionError);
    CHECK_THROWS_AS(esd::Dims::parse("2xx3"), esd::DimensionError);
}
