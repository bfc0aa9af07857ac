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
#include <vector>

#include "numerolab/bessel.hpp"
#include "numerolab/common.hpp"
#include "numerolab/numerology.hpp"
#include "numerolab/rng.hpp"

namespace numerolab {

/// Discrete power delay profile at one-sample tap spacing, unit total power.
struct PowerDelayProfile {
    std::vector<double> taps;   // p_l, normalized to sum 1
    double rms_delay_s = 0.0;   // decay constant of the exponential profile
    double sample_time_s = 0.0;

    int tap_count() const { return static_cast<int>(taps.size()); }

    /// Delay in samples of the last tap above the 20 dB cut.
    int max_excess_delay() const { return tap_count() - 1; }
};

/// Exponential profile truncated where the tap power falls 20 dB below the
/// strongest component (boundary tap kept), then normalized to unit sum.
inline PowerDelayProfile exp_pdp(double rms_delay_s, double sample_time_s) {
    if (rms_delay_s <= 0.0) throw Error("exp_pdp: rms delay must be positive");
    if (sample_time_s <= 0.0) throw Error("exp_pdp: sample time must be positive");

    PowerDelayProfile pdp;
    pdp.rms_delay_s = rms_delay_s;
    pdp.sample_time_s = sample_time_s;

    const double decay = sample_time_s / rms_delay_s;
    for (int l = 0;; ++l) {
        const double w = std::exp(-decay * static_cast<double>(l));
        if (w < 0.01) break;
        if (l >= kMaxPdpTaps) {
            throw Error("exp_pdp: delay spread needs more than " +
                        std::to_string(kMaxPdpTaps) +
                        " taps; condition outside supported range");
        }
        pdp.taps.push_back(w);
    }

    double sum = 0.0;
    for (double w : pdp.taps) sum += w;
    for (double& w : pdp.taps) w /= sum;
    return pdp;
}

/// Maximum Doppler spread f_d = (v / c) * F_c.
inline double doppler_freq(double velocity_mps, const SystemConfig& cfg) {
    if (velocity_mps < 0.0) throw Error("doppler_freq: velocity must be nonnegative");
    return velocity_mps / kLightSpeed * cfg.carrier_hz;
}

/// One channel condition: delay spread, mobility, and noise level relative
/// to unit signal power. All quantities in strict SI.
struct ChannelCondition {
    double rms_delay_s = 0.0;
    double velocity_mps = 0.0;
    double noise_power = 0.0;  // sigma_0^2
    double doppler_hz = 0.0;

    ChannelCondition() = default;
    ChannelCondition(double rms_delay, double velocity, double noise, const SystemConfig& cfg)
        : rms_delay_s(rms_delay),
          velocity_mps(velocity),
          noise_power(noise),
          doppler_hz(doppler_freq(velocity, cfg)) {
        if (noise_power <= 0.0) throw Error("ChannelCondition: noise power must be positive");
    }
};

/// Sampled time-varying tap matrix h(n, l). Stored tap-major: the series of
/// one tap over time is contiguous.
struct ChannelRealization {
    int n_samples = 0;
    int n_taps = 0;
    std::uint64_t seed = 0;
    std::vector<cxd> data;  // [l * n_samples + n]

    cxd at(int n, int l) const { return data[static_cast<size_t>(l) * n_samples + n]; }

    const cxd* tap(int l) const { return data.data() + static_cast<size_t>(l) * n_samples; }
    cxd* tap(int l) { return data.data() + static_cast<size_t>(l) * n_samples; }
};

/// Clarke-model reference autocorrelation J0(2*pi*f_d*dt).
inline double reference_autocorr(double doppler_hz, double delta_t_s) {
    return bessel_j0(kTwoPi * doppler_hz * delta_t_s);
}

namespace detail {

/// Per-tap sum-of-sinusoids state. Arrival angles are a uniformly rotated
/// comb, so the ensemble autocorrelation is exactly Clarke's J0.
struct SosTap {
    std::vector<double> re, im;  // current phasors, amplitude folded in
    std::vector<double> cr, ci;  // per-sample rotation e^{j omega_m}

    void init(Rng& rng, double power, double doppler_hz, double sample_time_s, int n_sinusoids) {
        const int ms = n_sinusoids;
        re.resize(ms);
        im.resize(ms);
        cr.resize(ms);
        ci.resize(ms);
        const double amp = std::sqrt(power / static_cast<double>(ms));
        const double theta = rng.angle();
        for (int m = 0; m < ms; ++m) {
            const double phi = rng.angle();
            const double alpha = (kTwoPi * static_cast<double>(m) + theta) / static_cast<double>(ms);
            const double omega = kTwoPi * doppler_hz * sample_time_s * std::cos(alpha);
            re[m] = amp * std::cos(phi);
            im[m] = amp * std::sin(phi);
            cr[m] = std::cos(omega);
            ci[m] = std::sin(omega);
        }
    }

    /// Emits h for the current sample, then advances every phasor.
    cxd step() {
        const int ms = static_cast<int>(re.size());
        double* __restrict pre = re.data();
        double* __restrict pim = im.data();
        const double* __restrict pcr = cr.data();
        const double* __restrict pci = ci.data();

        double s0 = 0, s1 = 0, s2 = 0, s3 = 0;
        double t0 = 0, t1 = 0, t2 = 0, t3 = 0;
        int m = 0;
        for (; m + 4 <= ms; m += 4) {
            s0 += pre[m];
            s1 += pre[m + 1];
            s2 += pre[m + 2];
            s3 += pre[m + 3];
            t0 += pim[m];
            t1 += pim[m + 1];
            t2 += pim[m + 2];
            t3 += pim[m + 3];
        }
        for (; m < ms; ++m) {
            s0 += pre[m];
            t0 += pim[m];
        }
        const cxd h((s0 + s1) + (s2 + s3), (t0 + t1) + (t2 + t3));

        for (int i = 0; i < ms; ++i) {
            const double tr = pre[i] * pcr[i] - pim[i] * pci[i];
            const double ti = pre[i] * pci[i] + pim[i] * pcr[i];
            pre[i] = tr;
            pim[i] = ti;
        }
        return h;
    }
};

}  // namespace detail

inline constexpr int kDefaultSinusoids = 64;

/// Fills `out` with a WSSUS Rayleigh realization: every tap an independent
/// sum-of-sinusoids process with power p_l and Clarke Doppler spectrum of
/// maximum frequency f_d. Bit-deterministic given the seed.
inline void generate_realization_into(const PowerDelayProfile& pdp, double doppler_hz,
                                      int n_samples, std::uint64_t seed,
                                      ChannelRealization& out,
                                      int n_sinusoids = kDefaultSinusoids) {
    if (n_samples < 1) throw Error("generate_realization: need at least one sample");
    if (n_sinusoids < 1) throw Error("generate_realization: need at least one sinusoid");
    const int n_taps = pdp.tap_count();
    out.n_samples = n_samples;
    out.n_taps = n_taps;
    out.seed = seed;
    out.data.resize(static_cast<size_t>(n_samples) * n_taps);

    Rng rng(seed);
    detail::SosTap sos;
    for (int l = 0; l < n_taps; ++l) {
        sos.init(rng, pdp.taps[static_cast<size_t>(l)], doppler_hz, pdp.sample_time_s,
                 n_sinusoids);
        cxd* row = out.tap(l);
        for (int n = 0; n < n_samples; ++n) row[n] = sos.step();
    }
}

inline ChannelRealization generate_realization(const PowerDelayProfile& pdp, double doppler_hz,
                                               int n_samples, std::uint64_t seed,
                                               int n_sinusoids = kDefaultSinusoids) {
    ChannelRealization h;
    generate_realization_into(pdp, doppler_hz, n_samples, seed, h, n_sinusoids);
    return h;
}

}  // namespace numerolab
