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

namespace numerolab {

/// Bessel function of the first kind, order zero.
///
/// |x| < 8: ascending power series, summed until the term underflows the
/// running value. x >= 8: Hankel asymptotic form with the usual rational
/// fits in 8/x. Absolute error below 1e-7 on the real line, which is all
/// the fading autocorrelation checks need.
inline double bessel_j0(double x) {
    x = std::fabs(x);

    if (x < 8.0) {
        // J0(x) = sum_k (-1)^k (x^2/4)^k / (k!)^2
        const double q = 0.25 * x * x;
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < 64; ++k) {
            term *= -q / (static_cast<double>(k) * static_cast<double>(k));
            sum += term;
            if (std::fabs(term) < 1e-17 * (std::fabs(sum) + 1e-300)) break;
        }
        return sum;
    }

    const double z = 8.0 / x;
    const double y = z * z;
    const double xx = x - 0.785398164;
    const double p0 = 1.0
        + y * (-0.1098628627e-2
        + y * (0.2734510407e-4
        + y * (-0.2073370639e-5
        + y * 0.2093887211e-6)));
    const double q0 = -0.1562499995e-1
        + y * (0.1430488765e-3
        + y * (-0.6911147651e-5
        + y * (0.7621095161e-6
        + y * (-0.934935152e-7))));
    return std::sqrt(0.636619772 / x) * (std::cos(xx) * p0 - z * std::sin(xx) * q0);
}

}  // namespace numerolab
