// Copyright 2026 The fermimagic Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file majorana.hpp
 * @brief Majorana strings over the Fock occupation basis and the fermionic
 *        Wigner function by exhaustive phase-space enumeration.
 *
 * For n modes there are 2n Hermitian Majorana operators,
 *   eta_{2p}   = c_p + c_p^dag          (x type, 0-based pairing)
 *   eta_{2p+1} = i (c_p - c_p^dag)      (y type)
 * and 4^n strings M_v = i^{w(w-1)/2} eta_0^{v_0} ... eta_{2n-1}^{v_{2n-1}}
 * indexed by binary vectors v of length 2n (w = weight of v). The phase
 * prefactor makes every string Hermitian and involutory.
 *
 * The Wigner value of a pure state |x> at phase point v is <x| M_v |x>;
 * enumerating all 2^{2n} points gives the Wigner spectrum, normalized such
 * that sum_v W(v)^2 = 2^n for pure states.
 */

#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fermimagic/fci.hpp"

namespace fermimagic {

class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Point of the discrete phase space (Z_2)^{2n}; bit j selects eta_j.
struct PhasePoint {
    std::uint32_t bits = 0;
    std::size_t n_modes = 0;

    std::size_t weight() const noexcept { return std::popcount(bits); }
};

/// Exponent of the i^{v.Omega v} prefactor: with Omega strictly lower
/// triangular all-ones, v.Omega v counts the pairs j < k with both bits set,
/// so the exponent is w(w-1)/2 mod 4.
inline int phase_exponent(const PhasePoint& v) {
    const std::size_t w = v.weight();
    return static_cast<int>((w * (w - 1) / 2) % 4);
}

namespace detail {

inline const std::complex<double> kim_pow[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

/// In-place application of one Majorana factor eta_m.
inline void apply_eta(FockVector& x, std::size_t m) {
    const std::size_t p = m / 2;
    const bool y_type = (m % 2) != 0;
    const std::uint32_t bit = 1u << p;
    const std::uint32_t below = bit - 1u;
    const std::size_t dim = x.size();
    for (std::uint32_t lo = 0; lo < dim; ++lo) {
        if (lo & bit) continue;
        const std::uint32_t hi = lo | bit;
        const double sign = (std::popcount(lo & below) & 1) ? -1.0 : 1.0;
        const std::complex<double> a = x[lo];
        const std::complex<double> b = x[hi];
        if (y_type) {
            // i(c - c^dag): |occupied> -> i s |empty>, |empty> -> -i s |occupied>
            x[lo] = std::complex<double>(0.0, sign) * b;
            x[hi] = std::complex<double>(0.0, -sign) * a;
        } else {
            x[lo] = sign * b;
            x[hi] = sign * a;
        }
    }
}

} // namespace detail

/// M_v |x>. Factors are applied right to left (descending Majorana index),
/// then the Hermiticity phase. Exact up to complex arithmetic.
inline FockVector majorana_apply(const PhasePoint& v, const FockVector& x) {
    const std::size_t dim = x.size();
    if (dim == 0 || (dim & (dim - 1)) != 0)
        throw std::invalid_argument("majorana_apply: state length must be a power of two");
    const std::size_t n = static_cast<std::size_t>(std::countr_zero(dim));
    if (v.n_modes != n)
        throw std::invalid_argument("majorana_apply: phase point / state length mismatch");

    FockVector out = x;
    for (std::size_t m = 2 * n; m-- > 0;)
        if ((v.bits >> m) & 1u) detail::apply_eta(out, m);
    const std::complex<double> phase = detail::kim_pow[phase_exponent(v)];
    if (phase != std::complex<double>(1.0, 0.0))
        for (auto& amp : out) amp *= phase;
    return out;
}

/// <x| M_v |x>. The imaginary part must vanish (Hermitian M_v); a residue
/// above 1e-12 signals a phase bug and throws.
inline double wigner_value(const FockVector& x, const PhasePoint& v) {
    const FockVector mx = majorana_apply(v, x);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * mx[i];
    if (std::abs(acc.imag()) >= 1e-12)
        throw std::runtime_error("wigner_value: imaginary residue " + std::to_string(acc.imag()));
    return acc.real();
}

/// Dense Wigner spectrum over all 2^{2n} phase points, indexed by the integer
/// value of v.
struct WignerSpectrum {
    std::vector<double> values;
    std::size_t n_modes = 0;

    std::size_t size() const noexcept { return values.size(); }
};

inline WignerSpectrum wigner_spectrum(const FockVector& x) {
    const std::size_t dim = x.size();
    if (dim == 0 || (dim & (dim - 1)) != 0)
        throw std::invalid_argument("wigner_spectrum: state length must be a power of two");
    const std::size_t n = static_cast<std::size_t>(std::countr_zero(dim));
    if (n > 12)
        throw CapacityError("wigner_spectrum: " + std::to_string(n) +
                            " modes exceeds the exhaustive-enumeration guard (12); "
                            "sampling estimators are out of scope here");
    WignerSpectrum w;
    w.n_modes = n;
    w.values.resize(std::size_t{1} << (2 * n));
    for (std::uint32_t v = 0; v < w.values.size(); ++v)
        w.values[v] = wigner_value(x, PhasePoint{v, n});
    return w;
}

/// L^p norm of the spectrum, sum of |W|^p then the 1/p root (no root at p=1).
inline double lp_norm(const WignerSpectrum& w, double p) {
    if (!(p > 0.0)) throw std::domain_error("lp_norm: p must be positive");
    double acc = 0.0;
    for (double value : w.values) acc += std::pow(std::abs(value), p);
    return p == 1.0 ? acc : std::pow(acc, 1.0 / p);
}

} // namespace fermimagic
