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

#include <cmath>
#include <cstdint>
#include <random>

#include "numerolab/common.hpp"

namespace numerolab {

/// Derives the seed of child stream `index` from a base seed.
///
/// Splittable-counter scheme: advance by a fixed odd gamma, then run the
/// splitmix64 finalizer. Children of one base are statistically independent
/// and can be assigned to parallel workers without coordination.
inline std::uint64_t child_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

/// Deterministic random stream.
///
/// mt19937_64 is fully specified by the standard; the value mappings below
/// avoid std::uniform_real_distribution and friends, whose output is
/// implementation-defined. Same seed, same draw order, same bits.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe as a log() argument.
    double uniform_pos() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform angle on [0, 2*pi).
    double angle() { return kTwoPi * uniform(); }

    /// Standard normal via Box-Muller; consumes two uniforms per pair.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double phi = angle();
        spare_ = r * std::sin(phi);
        have_spare_ = true;
        return r * std::cos(phi);
    }

    /// Complex circular Gaussian with total variance `var`.
    cxd cnormal(double var) {
        const double s = std::sqrt(var * 0.5);
        const double re = normal();
        const double im = normal();
        return {s * re, s * im};
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace numerolab
