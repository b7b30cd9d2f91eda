// Copyright 2026 The fermimagic Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file integrals.hpp
 * @brief One- and two-electron integrals over contracted s-type Gaussians.
 *
 * All primitive integrals are over unit-normalized s primitives; contracted
 * functions are renormalized to unit self-overlap, so diag(S) = 1 by
 * construction. Internal math is in atomic units (hartree, bohr); angstrom
 * enters only through assemble_integrals.
 */

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fermimagic/basis.hpp"
#include "fermimagic/linalg.hpp"

namespace fermimagic {

inline constexpr double kangstrom_to_bohr = 1.8897259886;

using Vec3 = std::array<double, 3>;

inline double dist2(const Vec3& a, const Vec3& b) {
    const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
    return dx * dx + dy * dy + dz * dz;
}

/// Boys function F0(t) = int_0^1 exp(-t u^2) du.
///
/// t < 12: Kummer-transformed series F0 = e^{-t} sum_k (2t)^k / (2k+1)!!,
/// all-positive terms, truncated below 1e-17 relative. t >= 12: closed form
/// (1/2) sqrt(pi/t) erf(sqrt(t)). The switch is continuity-tested.
inline double boys_f0(double t) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw std::domain_error("boys_f0: argument must be finite and nonnegative");
    if (t < 12.0) {
        double term = 1.0;
        double sum = 1.0;
        for (int k = 1; k < 200; ++k) {
            term *= 2.0 * t / (2.0 * k + 1.0);
            sum += term;
            if (term < sum * 1e-17) break;
        }
        return std::exp(-t) * sum;
    }
    const double st = std::sqrt(t);
    return 0.5 * std::sqrt(std::numbers::pi / t) * std::erf(st);
}

namespace detail {

inline void require_exponents(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw std::domain_error("gaussian integral: exponents must be positive and finite");
}

/// (2a/pi)^{3/4}, normalization of an s primitive.
inline double prim_norm(double a) {
    return std::pow(2.0 * a / std::numbers::pi, 0.75);
}

inline Vec3 gaussian_product_center(double a, const Vec3& A, double b, const Vec3& B) {
    const double p = a + b;
    return {(a * A[0] + b * B[0]) / p, (a * A[1] + b * B[1]) / p, (a * A[2] + b * B[2]) / p};
}

} // namespace detail

/// Overlap of two unit-normalized s primitives.
inline double overlap_s(double a, const Vec3& A, double b, const Vec3& B) {
    detail::require_exponents(a, b);
    const double p = a + b;
    const double mu = a * b / p;
    return detail::prim_norm(a) * detail::prim_norm(b) *
           std::pow(std::numbers::pi / p, 1.5) * std::exp(-mu * dist2(A, B));
}

/// Kinetic-energy integral over unit-normalized s primitives.
inline double kinetic_s(double a, const Vec3& A, double b, const Vec3& B) {
    detail::require_exponents(a, b);
    const double p = a + b;
    const double mu = a * b / p;
    return mu * (3.0 - 2.0 * mu * dist2(A, B)) * overlap_s(a, A, b, B);
}

/// Nuclear attraction -Z <a|1/|r-C||b> over unit-normalized s primitives.
inline double nuclear_s(double a, const Vec3& A, double b, const Vec3& B, const Vec3& C,
                        double charge) {
    detail::require_exponents(a, b);
    if (!(charge > 0.0)) throw std::domain_error("nuclear_s: charge must be positive");
    const double p = a + b;
    const double mu = a * b / p;
    const Vec3 P = detail::gaussian_product_center(a, A, b, B);
    return -charge * detail::prim_norm(a) * detail::prim_norm(b) * (2.0 * std::numbers::pi / p) *
           std::exp(-mu * dist2(A, B)) * boys_f0(p * dist2(P, C));
}

/// Two-electron repulsion (ab|cd), chemist convention, unit-normalized
/// s primitives.
inline double eri_s(double a, const Vec3& A, double b, const Vec3& B,
                    double c, const Vec3& C, double d, const Vec3& D) {
    detail::require_exponents(a, b);
    detail::require_exponents(c, d);
    const double p = a + b, q = c + d;
    const Vec3 P = detail::gaussian_product_center(a, A, b, B);
    const Vec3 Q = detail::gaussian_product_center(c, C, d, D);
    const double pref = detail::prim_norm(a) * detail::prim_norm(b) *
                        detail::prim_norm(c) * detail::prim_norm(d);
    return pref * 2.0 * std::pow(std::numbers::pi, 2.5) / (p * q * std::sqrt(p + q)) *
           std::exp(-a * b / p * dist2(A, B)) * std::exp(-c * d / q * dist2(C, D)) *
           boys_f0(p * q / (p + q) * dist2(P, Q));
}

/// AO-basis integrals for one geometry. ERI is stored dense in chemist
/// convention (pq|rs) with index ((p*K+q)*K+r)*K+s.
struct IntegralSet {
    Matrix S, T, V;
    std::vector<double> eri_data;
    double e_nn = 0.0;
    std::size_t K = 0;

    double eri(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
        return eri_data[((p * K + q) * K + r) * K + s];
    }
    double& eri(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
        return eri_data[((p * K + q) * K + r) * K + s];
    }
};

/// Places one contracted shell and rescales its coefficients to unit
/// self-overlap.
inline ContractedShell make_contracted(const Vec3& center, const ShellData& shell) {
    if (shell.primitives.empty())
        throw ConfigError("contracted shell needs at least one primitive");
    ContractedShell out;
    out.center = center;
    out.primitives = shell.primitives;
    double self = 0.0;
    for (const auto& pi : out.primitives)
        for (const auto& pj : out.primitives)
            self += pi.coefficient * pj.coefficient *
                    overlap_s(pi.exponent, center, pj.exponent, center);
    const double scale = 1.0 / std::sqrt(self);
    for (auto& prim : out.primitives) prim.coefficient *= scale;
    return out;
}

namespace detail {

template <typename F>
double contract_pair(const ContractedShell& x, const ContractedShell& y, F prim_integral) {
    double acc = 0.0;
    for (const auto& px : x.primitives)
        for (const auto& py : y.primitives)
            acc += px.coefficient * py.coefficient *
                   prim_integral(px.exponent, x.center, py.exponent, y.center);
    return acc;
}

} // namespace detail

/// Contracted shells for an H2 geometry: atom-major, shell-minor ordering.
inline std::vector<ContractedShell> h2_shells(double ell_bohr, const BasisSet& basis) {
    const Vec3 a{0.0, 0.0, 0.0};
    const Vec3 b{0.0, 0.0, ell_bohr};
    std::vector<ContractedShell> shells;
    for (const Vec3& center : {a, b})
        for (const ShellData& shell : basis.shells_per_hydrogen)
            shells.push_back(make_contracted(center, shell));
    return shells;
}

inline IntegralSet assemble_from_shells(const std::vector<ContractedShell>& shells,
                                        const std::vector<Vec3>& nuclei, double e_nn) {
    const std::size_t K = shells.size();
    IntegralSet ints;
    ints.K = K;
    ints.e_nn = e_nn;
    ints.S = Matrix(K, K);
    ints.T = Matrix(K, K);
    ints.V = Matrix(K, K);
    ints.eri_data.assign(K * K * K * K, 0.0);
    for (std::size_t p = 0; p < K; ++p) {
        for (std::size_t q = 0; q < K; ++q) {
            ints.S(p, q) = detail::contract_pair(shells[p], shells[q],
                [](double a, const Vec3& A, double b, const Vec3& B) { return overlap_s(a, A, b, B); });
            ints.T(p, q) = detail::contract_pair(shells[p], shells[q],
                [](double a, const Vec3& A, double b, const Vec3& B) { return kinetic_s(a, A, b, B); });
            double v = 0.0;
            for (const Vec3& nucleus : nuclei)
                v += detail::contract_pair(shells[p], shells[q],
                    [&nucleus](double a, const Vec3& A, double b, const Vec3& B) {
                        return nuclear_s(a, A, b, B, nucleus, 1.0);
                    });
            ints.V(p, q) = v;
        }
    }
    for (std::size_t p = 0; p < K; ++p)
        for (std::size_t q = 0; q < K; ++q)
            for (std::size_t r = 0; r < K; ++r)
                for (std::size_t s = 0; s < K; ++s) {
                    double acc = 0.0;
                    for (const auto& pp : shells[p].primitives)
                        for (const auto& pq : shells[q].primitives)
                            for (const auto& pr : shells[r].primitives)
                                for (const auto& ps : shells[s].primitives)
                                    acc += pp.coefficient * pq.coefficient * pr.coefficient *
                                           ps.coefficient *
                                           eri_s(pp.exponent, shells[p].center,
                                                 pq.exponent, shells[q].center,
                                                 pr.exponent, shells[r].center,
                                                 ps.exponent, shells[s].center);
                    ints.eri(p, q, r, s) = acc;
                }
    return ints;
}

/// Full AO integral set for H2 at separation ell (angstrom).
inline IntegralSet assemble_integrals(double ell_angstrom, const BasisSet& basis) {
    if (!(ell_angstrom > 0.0) || !std::isfinite(ell_angstrom))
        throw std::domain_error("assemble_integrals: separation must be positive and finite");
    const double ell_bohr = ell_angstrom * kangstrom_to_bohr;
    const std::vector<Vec3> nuclei{{0.0, 0.0, 0.0}, {0.0, 0.0, ell_bohr}};
    return assemble_from_shells(h2_shells(ell_bohr, basis), nuclei, 1.0 / ell_bohr);
}

/// Integrals for a single H atom at the origin (used for the dissociation
/// asymptote).
inline IntegralSet assemble_atom_integrals(const BasisSet& basis) {
    std::vector<ContractedShell> shells;
    const Vec3 origin{0.0, 0.0, 0.0};
    for (const ShellData& shell : basis.shells_per_hydrogen)
        shells.push_back(make_contracted(origin, shell));
    return assemble_from_shells(shells, {origin}, 0.0);
}

} // namespace fermimagic
