// Copyright 2026 The fermimagic Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fci.hpp
 * @brief Exact diagonalization of the electronic Hamiltonian in the
 *        (N_alpha = 1, N_beta = 1) sector.
 *
 * Spin-orbital mode order: mode 2*i   = (alpha, MO i),
 *                          mode 2*i+1 = (beta,  MO i),
 * with MOs sorted by ascending orbital energy. Occupation bitmasks use
 * bit m = occupation of mode m, so the closed-shell reference determinant
 * (both electrons in MO 0) is mask 0b0011.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fermimagic/integrals.hpp"
#include "fermimagic/linalg.hpp"
#include "fermimagic/scf.hpp"

namespace fermimagic {

/// One-body matrix and antisymmetrized two-body tensor over spin orbitals.
struct MOIntegrals {
    std::size_t n_modes = 0;        // 2K spin orbitals
    Matrix h_so;                    // <p|h|q>, spin-diagonal
    std::vector<double> eri_so;     // <pq||rs>, physicist, antisymmetrized
    std::vector<double> eri_mo;     // (pq|rs) spatial MO, chemist (kept for checks)
    std::size_t K = 0;

    double aso(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
        const std::size_t n = n_modes;
        return eri_so[((p * n + q) * n + r) * n + s];
    }
    double mo(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
        return eri_mo[((p * K + q) * K + r) * K + s];
    }
};

inline std::size_t mode_of(std::size_t orbital, int spin) { return 2 * orbital + spin; }

/// Four-index transform of the AO integrals into the spin-orbital MO basis.
inline MOIntegrals ao_to_mo(const IntegralSet& ints, const SCFResult& scf) {
    const std::size_t K = ints.K;
    const Matrix& c = scf.mo_coefficients;
    if (c.rows() != K || c.cols() != K)
        throw std::invalid_argument("ao_to_mo: dimension mismatch");

    MOIntegrals out;
    out.K = K;
    out.n_modes = 2 * K;

    const Matrix h_mo = c.transposed() * (ints.T + ints.V) * c;

    // staged quarter transforms, chemist convention throughout
    auto idx = [K](std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
        return ((p * K + q) * K + r) * K + s;
    };
    std::vector<double> t1(K * K * K * K, 0.0), t2(t1), t3(t1), mo(t1);
    for (std::size_t p = 0; p < K; ++p)
        for (std::size_t n = 0; n < K; ++n)
            for (std::size_t l = 0; l < K; ++l)
                for (std::size_t s = 0; s < K; ++s) {
                    double acc = 0.0;
                    for (std::size_t m = 0; m < K; ++m) acc += c(m, p) * ints.eri(m, n, l, s);
                    t1[idx(p, n, l, s)] = acc;
                }
    for (std::size_t p = 0; p < K; ++p)
        for (std::size_t q = 0; q < K; ++q)
            for (std::size_t l = 0; l < K; ++l)
                for (std::size_t s = 0; s < K; ++s) {
                    double acc = 0.0;
                    for (std::size_t n = 0; n < K; ++n) acc += c(n, q) * t1[idx(p, n, l, s)];
                    t2[idx(p, q, l, s)] = acc;
                }
    for (std::size_t p = 0; p < K; ++p)
        for (std::size_t q = 0; q < K; ++q)
            for (std::size_t r = 0; r < K; ++r)
                for (std::size_t s = 0; s < K; ++s) {
                    double acc = 0.0;
                    for (std::size_t l = 0; l < K; ++l) acc += c(l, r) * t2[idx(p, q, l, s)];
                    t3[idx(p, q, r, s)] = acc;
                }
    for (std::size_t p = 0; p < K; ++p)
        for (std::size_t q = 0; q < K; ++q)
            for (std::size_t r = 0; r < K; ++r)
                for (std::size_t s = 0; s < K; ++s) {
                    double acc = 0.0;
                    for (std::size_t l = 0; l < K; ++l) acc += c(l, s) * t3[idx(p, q, r, l)];
                    mo[idx(p, q, r, s)] = acc;
                }
    out.eri_mo = std::move(mo);

    const std::size_t n = 2 * K;
    out.h_so = Matrix(n, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (p % 2 == q % 2) out.h_so(p, q) = h_mo(p / 2, q / 2);

    out.eri_so.assign(n * n * n * n, 0.0);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s) {
                    // <pq|rs> (physicist) = (PR|QS) with matching spins
                    double direct = 0.0, exch = 0.0;
                    if (p % 2 == r % 2 && q % 2 == s % 2)
                        direct = out.mo(p / 2, r / 2, q / 2, s / 2);
                    if (p % 2 == s % 2 && q % 2 == r % 2)
                        exch = out.mo(p / 2, s / 2, q / 2, r / 2);
                    out.eri_so[((p * n + q) * n + r) * n + s] = direct - exch;
                }
    return out;
}

// ---------------------------------------------------------------------------
// second-quantized operator application on occupation bitmasks
// ---------------------------------------------------------------------------

namespace jw {

/// Parity of the occupied modes below p: the Jordan-Wigner sign.
inline int sign_below(std::uint32_t mask, std::size_t p) {
    const std::uint32_t below = mask & ((1u << p) - 1u);
    return (std::popcount(below) & 1) ? -1 : 1;
}

/// c_p |mask> ; returns false if annihilated.
inline bool annihilate(std::uint32_t& mask, std::size_t p, int& sign) {
    if (!((mask >> p) & 1u)) return false;
    sign *= sign_below(mask, p);
    mask &= ~(1u << p);
    return true;
}

/// c_p^dag |mask> ; returns false if annihilated.
inline bool create(std::uint32_t& mask, std::size_t p, int& sign) {
    if ((mask >> p) & 1u) return false;
    sign *= sign_below(mask, p);
    mask |= 1u << p;
    return true;
}

} // namespace jw

/// H |mask>, accumulated into a dense coefficient vector over the full
/// 2^n occupation space. H = sum h_pq p+ q + 1/4 sum <pq||rs> p+ q+ s r.
inline void apply_hamiltonian(const MOIntegrals& mo, std::uint32_t mask, double weight,
                              std::vector<double>& out) {
    const std::size_t n = mo.n_modes;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const double h = mo.h_so(p, q);
            if (h == 0.0) continue;
            std::uint32_t m = mask;
            int sign = 1;
            if (!jw::annihilate(m, q, sign)) continue;
            if (!jw::create(m, p, sign)) continue;
            out[m] += weight * sign * h;
        }
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s) {
                    const double w = mo.aso(p, q, r, s);
                    if (w == 0.0) continue;
                    std::uint32_t m = mask;
                    int sign = 1;
                    if (!jw::annihilate(m, r, sign)) continue;
                    if (!jw::annihilate(m, s, sign)) continue;
                    if (!jw::create(m, q, sign)) continue;
                    if (!jw::create(m, p, sign)) continue;
                    out[m] += 0.25 * weight * sign * w;
                }
}

/// Determinant bitmasks of the (1 alpha, 1 beta) sector, ordered by
/// (alpha orbital i, beta orbital j) -> index i*K + j.
inline std::vector<std::uint32_t> sector_determinants(std::size_t K) {
    std::vector<std::uint32_t> dets;
    dets.reserve(K * K);
    for (std::size_t i = 0; i < K; ++i)
        for (std::size_t j = 0; j < K; ++j)
            dets.push_back((1u << mode_of(i, 0)) | (1u << mode_of(j, 1)));
    return dets;
}

/// Hamiltonian matrix over the (1,1)-sector determinant basis.
inline Matrix build_sector_hamiltonian(const MOIntegrals& mo) {
    const std::size_t K = mo.K;
    const std::vector<std::uint32_t> dets = sector_determinants(K);
    const std::size_t dim = dets.size();
    const std::size_t fock_dim = std::size_t{1} << mo.n_modes;

    std::vector<std::size_t> position(fock_dim, dim);  // dim = not in sector
    for (std::size_t i = 0; i < dim; ++i) position[dets[i]] = i;

    Matrix h(dim, dim);
    std::vector<double> column(fock_dim);
    for (std::size_t j = 0; j < dim; ++j) {
        std::fill(column.begin(), column.end(), 0.0);
        apply_hamiltonian(mo, dets[j], 1.0, column);
        for (std::size_t m = 0; m < fock_dim; ++m) {
            if (column[m] == 0.0) continue;
            const std::size_t i = position[m];
            if (i == dim)
                throw std::runtime_error("sector hamiltonian: particle-number leak");
            h(i, j) = column[m];
        }
    }
    return h;
}

using FockVector = std::vector<std::complex<double>>;

/// FCI ground state embedded in the occupation basis.
struct GroundState {
    double energy = 0.0;                    // total, incl. nuclear repulsion
    std::vector<double> sector_amplitudes;  // over sector_determinants order
    FockVector fock_vector;                 // length 2^{2K}
    double theta = 0.0;
    double two_det_weight = 0.0;
    bool ansatz_ok = true;                  // two_det_weight >= 0.99
};

/// Occupation-basis embedding of sector amplitudes; norm preserving.
inline FockVector embed_fock(const std::vector<double>& amplitudes, std::size_t K) {
    const std::vector<std::uint32_t> dets = sector_determinants(K);
    if (amplitudes.size() != dets.size())
        throw std::invalid_argument("embed_fock: amplitude count does not match sector");
    FockVector fock(std::size_t{1} << (2 * K), {0.0, 0.0});
    for (std::size_t i = 0; i < dets.size(); ++i) fock[dets[i]] = amplitudes[i];
    return fock;
}

/// Mixing angle of the two-determinant form and its weight in the state.
/// theta = atan2(amp(both electrons in MO 1), amp(both electrons in MO 0)).
inline std::pair<double, double> extract_theta(const FockVector& fock) {
    if (fock.size() < 16)
        throw std::invalid_argument("extract_theta: need at least 2 orbitals");
    const double ref = fock[0b0011].real();
    const double exc = fock[0b1100].real();
    return {std::atan2(exc, ref), ref * ref + exc * exc};
}

/// Lowest eigenpair of the sector Hamiltonian, with the global phase fixed so
/// that the reference-determinant amplitude is >= 0. Near-degenerate ground
/// levels (dissociation limit) are resolved toward the vector with maximal
/// reference-determinant amplitude inside the degenerate subspace.
inline GroundState ground_eigenpair(const Matrix& h_sector, double e_nn, std::size_t K) {
    const std::size_t dim = h_sector.rows();
    EigenSystem es = jacobi_eigh(h_sector);

    std::vector<double> x(dim);
    for (std::size_t i = 0; i < dim; ++i) x[i] = es.vectors(i, 0);

    const std::size_t ref_index = 0;  // determinant (alpha MO0, beta MO0)
    const double degeneracy_gap = 1e-10 * std::max(1.0, std::abs(es.values[0]));
    if (dim > 1 && es.values[1] - es.values[0] <= degeneracy_gap) {
        const double a = es.vectors(ref_index, 0);
        const double b = es.vectors(ref_index, 1);
        const double norm = std::hypot(a, b);
        if (norm > 1e-8) {
            for (std::size_t i = 0; i < dim; ++i)
                x[i] = (a * es.vectors(i, 0) + b * es.vectors(i, 1)) / norm;
        }
    }

    // residual check against the reported eigenvalue
    double residual = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        double hx = 0.0;
        for (std::size_t j = 0; j < dim; ++j) hx += h_sector(i, j) * x[j];
        residual = std::max(residual, std::abs(hx - es.values[0] * x[i]));
    }
    if (residual >= 1e-10)
        throw std::runtime_error("ground_eigenpair: residual " + std::to_string(residual));

    if (x[ref_index] < 0.0)
        for (double& v : x) v = -v;

    GroundState state;
    state.energy = es.values[0] + e_nn;
    state.sector_amplitudes = std::move(x);
    state.fock_vector = embed_fock(state.sector_amplitudes, K);
    const auto [theta, weight] = extract_theta(state.fock_vector);
    state.theta = theta;
    state.two_det_weight = weight;
    state.ansatz_ok = weight >= 0.99;
    return state;
}

/// Full pipeline for one geometry: AO integrals -> RHF -> MO basis -> FCI.
inline GroundState solve_ground_state(const IntegralSet& ints) {
    const SCFResult scf = rhf_scf(ints);
    const MOIntegrals mo = ao_to_mo(ints, scf);
    return ground_eigenpair(build_sector_hamiltonian(mo), ints.e_nn, ints.K);
}

} // namespace fermimagic
