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
#include <vector>

#include "numerolab/channel.hpp"
#include "numerolab/common.hpp"
#include "numerolab/numerology.hpp"
#include "numerolab/rng.hpp"

namespace numerolab {

/// How the ISI + post-CP ICI contributions are booked.
///
/// `paper` combines the two matrices coherently and skips the diagonal,
/// matching the published interference-power expression. `full` books every
/// entry of both matrices incoherently, which is what the link-level
/// measurement sees for independent data symbols. Both agree exactly when
/// the CP covers the whole delay spread (all terms zero).
enum class AccountingMode { paper, full };

inline const char* to_string(AccountingMode m) {
    return m == AccountingMode::paper ? "paper" : "full";
}

inline AccountingMode accounting_mode_from_string(const std::string& s) {
    if (s == "paper") return AccountingMode::paper;
    if (s == "full") return AccountingMode::full;
    throw Error("unknown accounting mode '" + s + "' (expected paper|full)");
}

/// Channel-effect matrices of one realization and one numerology.
/// h_ici1 has an identically zero diagonal; h_isi / h_ici2 vanish entirely
/// when the CP length covers the maximum excess delay.
struct InterferenceMatrices {
    int n = 0;  // N_u
    std::vector<cxd> h_ave_diag;  // N entries, the diagonal of H_ave
    std::vector<cxd> h_ici1;      // N x N row-major, time-variation ICI
    std::vector<cxd> h_isi;       // N x N, previous-symbol leakage
    std::vector<cxd> h_ici2;      // N x N, insufficient-CP ICI

    cxd ici1(int k, int m) const { return h_ici1[static_cast<size_t>(k) * n + m]; }
    cxd isi(int k, int m) const { return h_isi[static_cast<size_t>(k) * n + m]; }
    cxd ici2(int k, int m) const { return h_ici2[static_cast<size_t>(k) * n + m]; }
};

namespace detail {

/// N-th roots of unity w[i] = exp(-j 2 pi i / N).
inline std::vector<cxd> twiddle_table(int n) {
    std::vector<cxd> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double a = -kTwoPi * static_cast<double>(i) / static_cast<double>(n);
        w[static_cast<size_t>(i)] = {std::cos(a), std::sin(a)};
    }
    return w;
}

inline void require_compatible(const ChannelRealization& h, const Numerology& num) {
    if (h.n_samples < num.idft_size)
        throw Error("interference: realization spans " + std::to_string(h.n_samples) +
                    " samples, need " + std::to_string(num.idft_size));
    if (h.n_taps > num.idft_size)
        throw Error("interference: " + std::to_string(h.n_taps) +
                    " taps exceed the DFT size " + std::to_string(num.idft_size));
}

}  // namespace detail

/// Evaluates the definitional channel-effect matrices.
///
/// The double sums are regrouped per tap: with T_l(q) = sum_n h(n,l) w^{-nq}
/// each entry is a phase-weighted sum of L tap transforms, identical term by
/// term to the direct evaluation. Cost O(N^2 L); intended for validation at
/// small N, not for the Monte-Carlo path.
inline InterferenceMatrices compute_matrices(const ChannelRealization& h, const Numerology& num) {
    detail::require_compatible(h, num);
    const int n = num.idft_size;
    const int g = num.cp_len;
    const int taps = h.n_taps;
    const auto w = detail::twiddle_table(n);
    const auto wi = [&](long long i) {  // exp(-j 2 pi i / N) for any integer i
        long long r = i % n;
        if (r < 0) r += n;
        return w[static_cast<size_t>(r)];
    };

    InterferenceMatrices mat;
    mat.n = n;
    mat.h_ave_diag.assign(static_cast<size_t>(n), cxd(0, 0));
    mat.h_ici1.assign(static_cast<size_t>(n) * n, cxd(0, 0));
    mat.h_isi.assign(static_cast<size_t>(n) * n, cxd(0, 0));
    mat.h_ici2.assign(static_cast<size_t>(n) * n, cxd(0, 0));

    // Full-window tap transforms T_l(q) = sum_{n=0}^{N-1} h(n,l) e^{+j 2 pi n q / N}
    // and the post-CP partial transforms U_l(q) = sum_{n=0}^{l-G} h(n,l) e^{+j 2 pi n q / N}.
    std::vector<cxd> t_full(static_cast<size_t>(taps) * n, cxd(0, 0));
    std::vector<cxd> t_tail(static_cast<size_t>(taps) * n, cxd(0, 0));
    for (int l = 0; l < taps; ++l) {
        const cxd* row = h.tap(l);
        for (int q = 0; q < n; ++q) {
            cxd full(0, 0), tail(0, 0);
            for (int s = 0; s < n; ++s) {
                const cxd e = std::conj(wi(static_cast<long long>(s) * q));
                full += row[s] * e;
                if (l >= g && s <= l - g) tail += row[s] * e;
            }
            t_full[static_cast<size_t>(l) * n + q] = full;
            t_tail[static_cast<size_t>(l) * n + q] = tail;
        }
    }

    const double inv_n = 1.0 / static_cast<double>(n);
    for (int k = 0; k < n; ++k) {
        cxd ave(0, 0);
        for (int l = 0; l < taps; ++l)
            ave += wi(static_cast<long long>(k) * l) * t_full[static_cast<size_t>(l) * n];
        mat.h_ave_diag[static_cast<size_t>(k)] = ave * inv_n;

        for (int m = 0; m < n; ++m) {
            const int q = (m - k + n) % n;
            if (m != k) {
                cxd v(0, 0);
                for (int l = 0; l < taps; ++l)
                    v += wi(static_cast<long long>(k) * l) * t_full[static_cast<size_t>(l) * n + q];
                mat.h_ici1[static_cast<size_t>(k) * n + m] = v * inv_n;
            }
            cxd isi(0, 0), ici2(0, 0);
            for (int l = g; l < taps; ++l) {
                const cxd u = t_tail[static_cast<size_t>(l) * n + q];
                isi += wi(static_cast<long long>(k) * (l - g)) * u;
                ici2 -= wi(static_cast<long long>(k) * l) * u;
            }
            mat.h_isi[static_cast<size_t>(k) * n + m] = isi * inv_n;
            mat.h_ici2[static_cast<size_t>(k) * n + m] = ici2 * inv_n;
        }
    }
    return mat;
}

/// Subcarrier-averaged squared-magnitude sums of one realization: the values
/// inside the Monte-Carlo expectations.
struct PowerSample {
    double p_ave = 0.0;       // desired-signal term
    double p_ici1 = 0.0;      // time-variation ICI rows
    double p_isi_ici2 = 0.0;  // delay-spread terms, booked per mode
};

/// Single-realization power accounting without forming any matrix.
///
/// Row sums over all m collapse by Parseval into time averages:
///   mean_k [ |H_ave(k,k)|^2 + sum_m |H_ici1(k,m)|^2 ] = mean_n sum_l |h(n,l)|^2
///   mean_k |H_ave(k,k)|^2                             = sum_l |mean_n h(n,l)|^2
/// and the ISI/ICI2 rows reduce the same way over the tap-domain sequences
/// a_n(j) they transform. Equivalence with compute_matrices is enforced by
/// tests rather than assumed.
inline PowerSample symbol_power_breakdown(const ChannelRealization& h, const Numerology& num,
                                          AccountingMode mode) {
    detail::require_compatible(h, num);
    const int n = num.idft_size;
    const int g = num.cp_len;
    const int taps = h.n_taps;
    const double inv_n = 1.0 / static_cast<double>(n);

    PowerSample out;
    double sum_msq = 0.0;
    for (int l = 0; l < taps; ++l) {
        const cxd* row = h.tap(l);
        cxd mean(0, 0);
        double msq = 0.0;
        for (int s = 0; s < n; ++s) {
            mean += row[s];
            msq += std::norm(row[s]);
        }
        mean *= inv_n;
        out.p_ave += std::norm(mean);
        sum_msq += msq * inv_n;
    }
    out.p_ici1 = sum_msq - out.p_ave;

    if (taps - 1 < g) return out;  // CP covers the delay spread: no ISI terms

    if (mode == AccountingMode::full) {
        // mean_k sum_m (|H_isi|^2 + |H_ici2|^2) = (2/N) sum_{l>=G} sum_{n<=l-G} |h(n,l)|^2
        double acc = 0.0;
        for (int l = g; l < taps; ++l) {
            const cxd* row = h.tap(l);
            for (int s = 0; s <= l - g; ++s) acc += std::norm(row[s]);
        }
        out.p_isi_ici2 = 2.0 * acc * inv_n;
        return out;
    }

    // Coherent combination H_isi + H_ici2, diagonal excluded. Its k-averaged
    // row power is mean_n sum_j |a_n(j)|^2 with
    //   a_n(j) = h(n, j+G) [n <= j <= L-1-G]  -  h(n, j) [G+n <= j <= L-1]
    // and the diagonal entry contributes |mean_n a_n(j)|^2 per j.
    double term_rows = 0.0;
    double term_diag = 0.0;
    for (int j = 0; j < taps; ++j) {
        const bool has_plus = (j + g <= taps - 1);
        const bool has_minus = (j >= g);
        if (!has_plus && !has_minus) continue;
        const cxd* plus_row = has_plus ? h.tap(j + g) : nullptr;
        const cxd* minus_row = has_minus ? h.tap(j) : nullptr;
        const int n_hi = has_plus ? j : j - g;
        cxd col_sum(0, 0);
        for (int s = 0; s <= n_hi; ++s) {
            cxd a(0, 0);
            if (has_plus && s <= j) a += plus_row[s];
            if (has_minus && s <= j - g) a -= minus_row[s];
            term_rows += std::norm(a);
            col_sum += a;
        }
        term_diag += std::norm(col_sum * inv_n);
    }
    out.p_isi_ici2 = term_rows * inv_n - term_diag;
    return out;
}

/// Monte-Carlo power estimate for one (condition, numerology) pair.
struct PowerBreakdown {
    double p_ave = 0.0;       // P_U
    double p_ici1 = 0.0;
    double p_isi_ici2 = 0.0;
    AccountingMode mode = AccountingMode::paper;
    int n_realizations = 0;
    double std_err = 0.0;        // standard error of total_interference()
    double p_ave_std_err = 0.0;  // standard error of p_ave

    double total_interference() const { return p_ici1 + p_isi_ici2; }
};

namespace detail {

struct PowerAccumulator {
    double sum_ave = 0, sum_ici1 = 0, sum_isi2 = 0;
    double sum_pi_sq = 0, sum_ave_sq = 0;
    int count = 0;

    void add(const PowerSample& s) {
        sum_ave += s.p_ave;
        sum_ici1 += s.p_ici1;
        sum_isi2 += s.p_isi_ici2;
        const double pi = s.p_ici1 + s.p_isi_ici2;
        sum_pi_sq += pi * pi;
        sum_ave_sq += s.p_ave * s.p_ave;
        ++count;
    }

    PowerBreakdown finish(AccountingMode mode) const {
        PowerBreakdown pb;
        pb.mode = mode;
        pb.n_realizations = count;
        const double r = static_cast<double>(count);
        pb.p_ave = sum_ave / r;
        pb.p_ici1 = sum_ici1 / r;
        pb.p_isi_ici2 = sum_isi2 / r;
        if (count >= 2) {
            const double mean_pi = (sum_ici1 + sum_isi2) / r;
            const double var_pi = std::max(0.0, (sum_pi_sq / r - mean_pi * mean_pi) * r / (r - 1.0));
            pb.std_err = std::sqrt(var_pi / r);
            const double var_ave =
                std::max(0.0, (sum_ave_sq / r - pb.p_ave * pb.p_ave) * r / (r - 1.0));
            pb.p_ave_std_err = std::sqrt(var_ave / r);
        }
        return pb;
    }
};

}  // namespace detail

/// Monte-Carlo estimate over one shared realization batch for every member
/// of the set (common random numbers). The channel is generated once per
/// realization at the longest window (max N plus the ISI tail) and each
/// member's accounting reads its own prefix.
inline std::vector<PowerBreakdown> estimate_powers_for_set(
    const ChannelCondition& cond, const NumerologySet& set, int n_real, std::uint64_t seed,
    AccountingMode mode, const SystemConfig& cfg, int n_sinusoids = kDefaultSinusoids) {
    if (n_real < 2) throw Error("estimate_powers: need at least 2 realizations");
    if (set.size() == 0) throw Error("estimate_powers: empty numerology set");

    const PowerDelayProfile pdp = exp_pdp(cond.rms_delay_s, cfg.sample_time());
    const int window = set.max_idft_size() + pdp.tap_count();

    std::vector<detail::PowerAccumulator> acc(static_cast<size_t>(set.size()));
    ChannelRealization h;
    for (int r = 0; r < n_real; ++r) {
        generate_realization_into(pdp, cond.doppler_hz, window, child_seed(seed, r), h,
                                  n_sinusoids);
        for (int u = 0; u < set.size(); ++u)
            acc[static_cast<size_t>(u)].add(symbol_power_breakdown(h, set.members[static_cast<size_t>(u)], mode));
    }

    std::vector<PowerBreakdown> out;
    out.reserve(static_cast<size_t>(set.size()));
    for (const auto& a : acc) out.push_back(a.finish(mode));
    return out;
}

/// Monte-Carlo estimate for a single numerology.
inline PowerBreakdown estimate_powers(const ChannelCondition& cond, const Numerology& num,
                                      int n_real, std::uint64_t seed, AccountingMode mode,
                                      const SystemConfig& cfg,
                                      int n_sinusoids = kDefaultSinusoids) {
    NumerologySet single;
    single.members.push_back(num);
    return estimate_powers_for_set(cond, single, n_real, seed, mode, cfg, n_sinusoids)[0];
}

/// SINR at the DFT output: P_U / (P_I + (1 + mu) sigma0^2).
inline double sinr(const PowerBreakdown& pb, Ratio mu, double sigma0_sq) {
    if (sigma0_sq <= 0.0) throw Error("sinr: noise power must be positive");
    return pb.p_ave / (pb.total_interference() + (1.0 + mu.value()) * sigma0_sq);
}

/// SNR loss in dB relative to an interference- and CP-free link at the same
/// noise level: 10 log10((P_I + (1 + mu) sigma0^2) / (P_U sigma0^2)).
inline double snr_loss_db(const PowerBreakdown& pb, Ratio mu, double sigma0_sq) {
    if (sigma0_sq <= 0.0) throw Error("snr_loss: noise power must be positive");
    if (!(pb.p_ave > 0.0)) throw Error("snr_loss: nonpositive desired power, degenerate estimate");
    return 10.0 *
           std::log10((pb.total_interference() + (1.0 + mu.value()) * sigma0_sq) /
                      (pb.p_ave * sigma0_sq));
}

/// Delta-method standard error of snr_loss_db, from the Monte-Carlo errors
/// of P_I and P_U (covariance neglected).
inline double snr_loss_std_err_db(const PowerBreakdown& pb, Ratio mu, double sigma0_sq) {
    const double denom = pb.total_interference() + (1.0 + mu.value()) * sigma0_sq;
    const double a = pb.std_err / denom;
    const double b = pb.p_ave > 0.0 ? pb.p_ave_std_err / pb.p_ave : 0.0;
    return 10.0 / std::log(10.0) * std::sqrt(a * a + b * b);
}

}  // namespace numerolab
