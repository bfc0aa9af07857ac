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

#include "numerolab/numerology.hpp"

using namespace numerolab;

static const SystemConfig cfg(5e6, 2e9);

TEST_CASE("system config derives the sampling time exactly") {
    CHECK(cfg.sample_time() == 1.0 / 5e6);
    CHECK_THROWS_AS(SystemConfig(0.0, 2e9), Error);
    CHECK_THROWS_AS(SystemConfig(5e6, -1.0), Error);
}

TEST_CASE("derive_numerology computes CP length and spacing") {
    const auto a = derive_numerology(240, Ratio(1, 4), cfg);
    CHECK(a.cp_len == 60);
    CHECK(a.spacing_hz == Catch::Approx(20833.33).margin(0.005));

    const auto b = derive_numerology(960, Ratio(1, 10), cfg);
    CHECK(b.cp_len == 96);
    CHECK(b.spacing_hz == Catch::Approx(5208.33).margin(0.005));
}

TEST_CASE("derive_numerology rejects fractional CP sample counts") {
    CHECK_THROWS_AS(derive_numerology(240, Ratio(1, 7), cfg), Error);
    CHECK_THROWS_AS(derive_numerology(0, Ratio(1, 4), cfg), Error);
}

TEST_CASE("candidate set matches the published six entries in order") {
    const auto set = paper_candidate_set(cfg);
    REQUIRE(set.size() == 6);

    const auto& m3 = set.member(3);
    CHECK(m3.idft_size == 960);
    CHECK(m3.cp_ratio == Ratio(1, 4));
    CHECK(m3.cp_len == 240);

    const auto& m4 = set.member(4);
    CHECK(m4.idft_size == 240);
    CHECK(m4.cp_ratio == Ratio(1, 10));
    CHECK(m4.spacing_hz == Catch::Approx(20833.33).margin(0.005));

    for (int u = 1; u <= 6; ++u) CHECK(set.member(u).index == u);

    // All members share the sampling clock: spacing * N == B for each.
    for (const auto& m : set.members)
        CHECK(m.spacing_hz * m.idft_size == Catch::Approx(cfg.bandwidth_hz));
}

TEST_CASE("scaling family exponents relative to the first member") {
    const auto set = paper_candidate_set(cfg);
    REQUIRE(set.member(1).scale_exponent.has_value());
    CHECK(*set.member(1).scale_exponent == 0);
    CHECK(*set.member(2).scale_exponent == -1);
    CHECK(*set.member(3).scale_exponent == -2);
    CHECK(*set.member(6).scale_exponent == -2);
}

TEST_CASE("symbol duration identity (1 + mu) / f_u") {
    const auto set = paper_candidate_set(cfg);
    for (const auto& m : set.members) {
        const double expect = (1.0 + m.cp_ratio.value()) / m.spacing_hz;
        CHECK(m.symbol_duration(cfg) == Catch::Approx(expect).epsilon(1e-15));
        CHECK((m.idft_size + m.cp_len) * cfg.sample_time() ==
              Catch::Approx(expect).epsilon(1e-15));
    }
}

TEST_CASE("set construction is deterministic and rejects duplicates") {
    const auto a = paper_candidate_set(cfg);
    const auto b = paper_candidate_set(cfg);
    for (int u = 1; u <= 6; ++u) {
        CHECK(a.member(u).idft_size == b.member(u).idft_size);
        CHECK(a.member(u).cp_ratio == b.member(u).cp_ratio);
    }
    CHECK_THROWS_AS(
        make_numerology_set({{240, Ratio(1, 4)}, {240, Ratio(2, 8)}}, cfg), Error);
}

TEST_CASE("user-supplied candidate lists are accepted") {
    const auto set = make_numerology_set({{64, Ratio(1, 8)}, {128, Ratio(0, 1)}}, cfg);
    CHECK(set.size() == 2);
    CHECK(set.member(1).cp_len == 8);
    CHECK(set.member(2).cp_len == 0);
    CHECK(set.max_idft_size() == 128);
    CHECK(set.min_cp_len() == 0);
}

TEST_CASE("ratio parsing") {
    CHECK(Ratio::parse("1/4") == Ratio(1, 4));
    CHECK(Ratio::parse("3") == Ratio(3, 1));
    CHECK(Ratio::parse("2/8") == Ratio(1, 4));
    CHECK_THROWS_AS(Ratio::parse("x/y"), Error);
    CHECK_THROWS_AS(Ratio(1, 0), Error);
}
