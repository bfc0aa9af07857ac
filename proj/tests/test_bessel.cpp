// SPDX-License-Identifier: Apache-2.0
//
// numerolab - OFDM numerology selection toolkit
// Copyright (C) 2026 the numerolab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <catch2/catch_amalgamated.hpp>

#include "numerolab/bessel.hpp"
#include "numerolab/channel.hpp"
#include "support/oracles.hpp"

using numerolab::bessel_j0;

TEST_CASE("j0 fixed points") {
    CHECK(bessel_j0(0.0) == 1.0);
    CHECK(std::fabs(bessel_j0(2.404826)) < 1e-6);           // first zero
    CHECK(bessel_j0(1.0) == Catch::Approx(0.7651977).margin(1e-7));
    CHECK(bessel_j0(-1.0) == bessel_j0(1.0));               // even function
}

TEST_CASE("j0 matches quadrature oracle over both branches") {
    for (double x = 0.0; x <= 40.0; x += 0.0625) {
        const double ref = testsupport::j0_quadrature(x);
        CAPTURE(x);
        CHECK(std::fabs(bessel_j0(x) - ref) <= 1e-7);
    }
}

TEST_CASE("reference autocorrelation wraps j0") {
    CHECK(numerolab::reference_autocorr(100.0, 0.0) == 1.0);
    const double fd = 463.0;
    const double dt = 2.404826 / (numerolab::kTwoPi * fd);
    CHECK(std::fabs(numerolab::reference_autocorr(fd, dt)) < 1e-6);
}
