// Copyright 2026 The fermimagic Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file magic.hpp
 * @brief Magic proxies of a Wigner spectrum: mana, stabilizer Renyi
 *        entropies, and the filtered variant, plus the closed-form
 *        theta-parameterized expressions for the two-determinant state.
 *
 * All logarithms are natural. Expectation sums are normalized by the Fock
 * dimension 2^n, consistent with Tr(M_v M_w) = 2^n delta_vw, so every
 * occupation basis state has mana = S_alpha = 0 exactly.
 */

#pragma once

#include <cmath>
#include <stdexcept>

#include "fermimagic/majorana.hpp"

namespace fermimagic {

/// Magic proxies of one state together with the norms that produced them.
struct MagicReport {
    double mana = 0.0;
    double s2 = 0.0;   // stabilizer Renyi entropy, alpha = 2
    double fs2 = 0.0;  // filtered variant, alpha = 2
    struct Norms {
        double l1 = 0.0;            // ||W||_1
        double w2_sum = 0.0;        // sum W^2  (= 2^n for pure states)
        double w4_sum = 0.0;        // sum W^4
        double filtered_w2 = 0.0;   // sums with identity and parity removed
        double filtered_w4 = 0.0;
    } norms;
    std::size_t n_modes = 0;
};

namespace detail {

inline double abs_power(double w, double two_alpha) {
    const double a = std::abs(w);
    if (two_alpha == 4.0) return (w * w) * (w * w);
    if (two_alpha == 2.0) return w * w;
    return std::pow(a, two_alpha);
}

} // namespace detail

/// mana = log(||W||_1 / 2^n); zero on any Slater determinant in the mode
/// basis, positive otherwise.
inline double mana(const WignerSpectrum& w) {
    const double dim = static_cast<double>(std::size_t{1} << w.n_modes);
    return std::log(lp_norm(w, 1.0) / dim);
}

/// alpha-stabilizer Renyi entropy
///   S_alpha = 1/(1-alpha) log( sum_v |W(v)|^{2 alpha} / 2^n ).
inline double sre(const WignerSpectrum& w, double alpha) {
    if (!(alpha > 0.0)) throw std::domain_error("sre: alpha must be positive");
    if (alpha == 1.0) throw std::domain_error("sre: alpha = 1 limit not implemented");
    const double dim = static_cast<double>(std::size_t{1} << w.n_modes);
    double acc = 0.0;
    for (double value : w.values) acc += detail::abs_power(value, 2.0 * alpha);
    return std::log(acc / dim) / (1.0 - alpha);
}

/// Filtered alpha-SRE: identity (v = 0...0) and parity (v = 1...1) strings
/// are removed from the sums and the result is self-normalized by the
/// filtered purity, keeping the measure zero on determinants.
inline double filtered_sre(const WignerSpectrum& w, double alpha) {
    if (!(alpha > 0.0)) throw std::domain_error("filtered_sre: alpha must be positive");
    if (alpha == 1.0) throw std::domain_error("filtered_sre: alpha = 1 limit not implemented");
    const std::size_t last = w.values.size() - 1;
    double num = 0.0, purity = 0.0;
    for (std::size_t v = 1; v < last; ++v) {
        num += detail::abs_power(w.values[v], 2.0 * alpha);
        purity += w.values[v] * w.values[v];
    }
    if (purity < 1e-14)
        throw std::runtime_error("filtered_sre: filtered purity vanishes (degenerate state)");
    return std::log(num / purity) / (1.0 - alpha);
}

inline MagicReport make_magic_report(const WignerSpectrum& w) {
    MagicReport report;
    report.n_modes = w.n_modes;
    const std::size_t last = w.values.size() - 1;
    for (std::size_t v = 0; v < w.values.size(); ++v) {
        const double value = w.values[v];
        const double w2 = value * value;
        report.norms.l1 += std::abs(value);
        report.norms.w2_sum += w2;
        report.norms.w4_sum += w2 * w2;
        if (v != 0 && v != last) {
            report.norms.filtered_w2 += w2;
            report.norms.filtered_w4 += w2 * w2;
        }
    }
    report.mana = mana(w);
    report.s2 = sre(w, 2.0);
    report.fs2 = filtered_sre(w, 2.0);
    return report;
}

/// Closed form for the two-determinant state: S2 = -log(1 - sin^2(4 theta)/4).
inline double analytic_s2_theta(double theta) {
    const double s = std::sin(4.0 * theta);
    return -std::log(1.0 - s * s / 4.0);
}

/// Closed form: M = log[(1 + |cos 2 theta| + |sin 2 theta|)/2].
inline double analytic_mana_theta(double theta) {
    return std::log((1.0 + std::abs(std::cos(2.0 * theta)) + std::abs(std::sin(2.0 * theta))) / 2.0);
}

/// Filtered-S2 closed form obtained from the same string counting with the
/// identity and parity contributions removed: -log(1 - (2/7) sin^2(4 theta)).
inline double analytic_fs2_theta(double theta) {
    const double s = std::sin(4.0 * theta);
    return -std::log(1.0 - (2.0 / 7.0) * s * s);
}

/// The explicit two-determinant state cos(theta)|1100> + sin(theta)|0011>
/// over 4 modes (occupation bits ordered mode 0 = leftmost label).
inline FockVector two_determinant_state(double theta) {
    FockVector x(16, {0.0, 0.0});
    x[0b0011] = std::cos(theta);
    x[0b1100] = std::sin(theta);
    return x;
}

} // namespace fermimagic
