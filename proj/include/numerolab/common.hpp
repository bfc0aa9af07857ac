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

#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace numerolab {

using cxd = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Speed of light in m/s.
inline constexpr double kLightSpeed = 2.99792458e8;

/// Maximum number of delay taps supported by the feature layout.
inline constexpr int kMaxPdpTaps = 256;

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact rational, used for CP ratios so sample counts never drift.
struct Ratio {
    long long num = 0;
    long long den = 1;

    constexpr Ratio() = default;
    Ratio(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw Error("Ratio: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    bool operator==(const Ratio& o) const { return num == o.num && den == o.den; }
    bool operator<(const Ratio& o) const { return num * o.den < o.num * den; }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    /// Parses "num/den" or a bare integer.
    static Ratio parse(const std::string& s) {
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Ratio(std::stoll(s), 1);
            return Ratio(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
        } catch (const std::exception&) {
            throw Error("Ratio: cannot parse '" + s + "'");
        }
    }
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

inline double kmh_to_mps(double kmh) { return kmh / 3.6; }
inline double mps_to_kmh(double mps) { return mps * 3.6; }
inline double us_to_s(double us) { return us * 1e-6; }
inline double s_to_us(double s) { return s * 1e6; }

}  // namespace numerolab
