/*
 Copyright 2026 The hexplace authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#include "detmath.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "rng.hpp"

using hexplace::det_cos;
using hexplace::det_sin;
using hexplace::det_sincos;

// The deterministic kernels only need to agree with libm to well below any
// physically meaningful tolerance; their value is being bit-identical across
// platforms, which libm itself does not guarantee.
TEST_CASE("det_sincos tracks libm over the spawn-angle range") {
    hexplace::RngStream rng(2024);
    for (int i = 0; i < 20000; ++i) {
        const double theta = rng.next_double() * 2.0 * std::numbers::pi;
        const auto [s, c] = det_sincos(theta);
        CHECK(std::abs(s - std::sin(theta)) < 1e-13);
        CHECK(std::abs(c - std::cos(theta)) < 1e-13);
    }
}

TEST_CASE("det_sincos handles negative and moderately large arguments") {
    hexplace::RngStream rng(7);
    for (int i = 0; i < 5000; ++i) {
        const double theta = (rng.next_double() - 0.5) * 200.0;
        CHECK(std::abs(det_sin(theta) - std::sin(theta)) < 1e-12);
        CHECK(std::abs(det_cos(theta) - std::cos(theta)) < 1e-12);
    }
}

TEST_CASE("det_sincos exact anchor points") {
    CHECK(det_sin(0.0) == 0.0);
    CHECK(det_cos(0.0) == 1.0);
    const auto quarter = det_sincos(std::numbers::pi / 2.0);
    CHECK(quarter.sin == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(quarter.cos) < 1e-15);
    const auto half = det_sincos(std::numbers::pi);
    CHECK(std::abs(half.sin) < 1e-15);
    CHECK(half.cos == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("det_sincos unit norm") {
    hexplace::RngStream rng(99);
    for (int i = 0; i < 5000; ++i) {
        const double theta = (rng.next_double() - 0.5) * 50.0;
        const auto [s, c] = det_sincos(theta);
        CHECK(std::abs(s * s + c * c - 1.0) < 1e-14);
    }
}
