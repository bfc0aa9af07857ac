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

#pragma once

#include <bit>
#include <optional>
#include <vector>

#include "numerolab/common.hpp"

namespace numerolab {

/// Carrier-level constants shared by every waveform in a run.
struct SystemConfig {
    double bandwidth_hz = 5e6;
    double carrier_hz = 2e9;

    SystemConfig() = default;
    SystemConfig(double bandwidth, double carrier)
        : bandwidth_hz(bandwidth), carrier_hz(carrier) {
        if (bandwidth_hz <= 0.0) throw Error("SystemConfig: bandwidth must be positive");
        if (carrier_hz <= 0.0) throw Error("SystemConfig: carrier frequency must be positive");
    }

    /// Sampling time, exactly 1/B in double.
    double sample_time() const { return 1.0 / bandwidth_hz; }
};

/// One OFDM waveform parametrization: IDFT size plus CP ratio, with the
/// quantities derived from them. CP ratios are kept as exact rationals so
/// the CP length is always an exact sample count.
struct Numerology {
    int index = 0;          // 1-based position in its candidate set
    int idft_size = 0;      // N_u
    Ratio cp_ratio;         // mu_u
    int cp_len = 0;         // G_u = mu_u * N_u
    double spacing_hz = 0;  // f_u = B / N_u
    std::optional<int> scale_exponent;  // set when the set forms a 2^k family

    int symbol_len() const { return idft_size + cp_len; }

    /// Symbol duration in seconds including CP: (1 + mu) / f_u.
    double symbol_duration(const SystemConfig& cfg) const {
        return static_cast<double>(symbol_len()) * cfg.sample_time();
    }
};

/// Builds one numerology, validating that the CP ratio yields an integral
/// number of samples.
inline Numerology derive_numerology(int idft_size, Ratio cp_ratio, const SystemConfig& cfg,
                                    int index = 0) {
    if (idft_size <= 0) throw Error("derive_numerology: IDFT size must be positive");
    if (cp_ratio.num < 0) throw Error("derive_numerology: CP ratio must be nonnegative");
    const long long scaled = static_cast<long long>(idft_size) * cp_ratio.num;
    if (scaled % cp_ratio.den != 0) {
        throw Error("derive_numerology: CP ratio " + cp_ratio.str() + " of N=" +
                    std::to_string(idft_size) + " is not an integral sample count");
    }
    Numerology nu;
    nu.index = index;
    nu.idft_size = idft_size;
    nu.cp_ratio = cp_ratio;
    nu.cp_len = static_cast<int>(scaled / cp_ratio.den);
    nu.spacing_hz = cfg.bandwidth_hz / static_cast<double>(idft_size);
    return nu;
}

/// Ordered candidate set. Member indices are the 1-based class labels, so
/// construction order is load-bearing and never reshuffled.
struct NumerologySet {
    std::vector<Numerology> members;

    int size() const { return static_cast<int>(members.size()); }

    const Numerology& member(int index_1based) const {
        if (index_1based < 1 || index_1based > size())
            throw Error("NumerologySet: index " + std::to_string(index_1based) + " out of range");
        return members[static_cast<size_t>(index_1based - 1)];
    }

    int max_idft_size() const {
        int n = 0;
        for (const auto& m : members) n = std::max(n, m.idft_size);
        return n;
    }

    int min_cp_len() const {
        int g = members.empty() ? 0 : members.front().cp_len;
        for (const auto& m : members) g = std::min(g, m.cp_len);
        return g;
    }
};

/// Builds a set from (N, mu) pairs in the given order, assigning 1-based
/// indices and tagging the 2^k scaling exponents when the spacings form one
/// family relative to the first member.
inline NumerologySet make_numerology_set(const std::vector<std::pair<int, Ratio>>& pairs,
                                         const SystemConfig& cfg) {
    if (pairs.empty()) throw Error("make_numerology_set: empty candidate list");
    NumerologySet set;
    set.members.reserve(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            if (pairs[j].first == pairs[i].first && pairs[j].second == pairs[i].second)
                throw Error("make_numerology_set: duplicate (N, mu) pair");
        }
        set.members.push_back(
            derive_numerology(pairs[i].first, pairs[i].second, cfg, static_cast<int>(i) + 1));
    }
    // f_u = 2^k * f_1  <=>  N_1 = 2^k * N_u
    const int n1 = set.members.front().idft_size;
    for (auto& m : set.members) {
        const int nu = m.idft_size;
        if (n1 % nu == 0 && std::has_single_bit(static_cast<unsigned>(n1 / nu))) {
            m.scale_exponent = std::countr_zero(static_cast<unsigned>(n1 / nu));
        } else if (nu % n1 == 0 && std::has_single_bit(static_cast<unsigned>(nu / n1))) {
            m.scale_exponent = -std::countr_zero(static_cast<unsigned>(nu / n1));
        }
    }
    return set;
}

/// The six-element candidate set used throughout the experiments:
/// N in {240, 480, 960} crossed with mu in {1/4, 1/10}.
inline NumerologySet paper_candidate_set(const SystemConfig& cfg) {
    return make_numerology_set(
        {
            {240, Ratio(1, 4)},
            {480, Ratio(1, 4)},
            {960, Ratio(1, 4)},
            {240, Ratio(1, 10)},
            {480, Ratio(1, 10)},
            {960, Ratio(1, 10)},
        },
        cfg);
}

}  // namespace numerolab
