// Copyright 2026 The fermimagic Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "fermimagic/integrals.hpp"
#include "fermimagic/linalg.hpp"

namespace fermimagic {

class ScfError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Converged closed-shell mean field. Columns of mo_coefficients are MOs over
/// AOs, S-orthonormal, ordered by ascending orbital energy.
struct SCFResult {
    Matrix mo_coefficients;
    std::vector<double> orbital_energies;
    double scf_energy = 0.0;  // electronic + nuclear, hartree
    int iterations = 0;
    bool converged = false;
};

namespace detail {

inline Matrix fock_matrix(const IntegralSet& ints, const Matrix& density) {
    const std::size_t K = ints.K;
    Matrix f = ints.T + ints.V;
    for (std::size_t m = 0; m < K; ++m)
        for (std::size_t n = 0; n < K; ++n) {
            double acc = 0.0;
            for (std::size_t l = 0; l < K; ++l)
                for (std::size_t s = 0; s < K; ++s)
                    acc += density(l, s) * (ints.eri(m, n, l, s) - 0.5 * ints.eri(m, l, n, s));
            f(m, n) += acc;
        }
    return f;
}

} // namespace detail

/// Restricted Hartree-Fock for the 2-electron problem: lowest MO doubly
/// occupied, plain Roothaan iteration with 0.5 linear density mixing.
/// Converged when successive electronic energies differ by < 1e-12 and
/// density matrices by < 1e-10 (max-abs).
inline SCFResult rhf_scf(const IntegralSet& ints, int max_iterations = 200) {
    const std::size_t K = ints.K;
    const Matrix x = inverse_sqrt_spd(ints.S);  // throws on singular S
    const Matrix hcore = ints.T + ints.V;

    auto solve_orbitals = [&](const Matrix& f) {
        return jacobi_eigh(x.transposed() * f * x);
    };
    auto density_from = [&](const Matrix& c) {
        Matrix d(K, K);
        for (std::size_t m = 0; m < K; ++m)
            for (std::size_t n = 0; n < K; ++n) d(m, n) = 2.0 * c(m, 0) * c(n, 0);
        return d;
    };
    auto electronic_energy = [&](const Matrix& d, const Matrix& f) {
        double e = 0.0;
        for (std::size_t m = 0; m < K; ++m)
            for (std::size_t n = 0; n < K; ++n) e += 0.5 * d(m, n) * (hcore(m, n) + f(m, n));
        return e;
    };

    EigenSystem guess = solve_orbitals(hcore);
    Matrix c = x * guess.vectors;
    Matrix density = density_from(c);
    double e_old = electronic_energy(density, detail::fock_matrix(ints, density));

    SCFResult out;
    double delta_e = 0.0, delta_d = 0.0;
    for (int it = 1; it <= max_iterations; ++it) {
        const Matrix f = detail::fock_matrix(ints, density);
        EigenSystem es = solve_orbitals(f);
        c = x * es.vectors;
        Matrix d_new = density_from(c);

        // 0.5 linear mixing keeps stretched geometries from oscillating
        Matrix d_mixed(K, K);
        for (std::size_t m = 0; m < K; ++m)
            for (std::size_t n = 0; n < K; ++n)
                d_mixed(m, n) = 0.5 * d_new(m, n) + 0.5 * density(m, n);

        const Matrix f_new = detail::fock_matrix(ints, d_mixed);
        const double e_new = electronic_energy(d_mixed, f_new);
        delta_e = std::abs(e_new - e_old);
        delta_d = (d_mixed - density).max_abs();
        density = d_mixed;
        e_old = e_new;
        out.iterations = it;
        if (delta_e < 1e-12 && delta_d < 1e-10) {
            out.converged = true;
            break;
        }
    }
    if (!out.converged)
        throw ScfError("rhf_scf: no convergence after " + std::to_string(out.iterations) +
                       " iterations (dE=" + std::to_string(delta_e) +
                       ", dD=" + std::to_string(delta_d) + ")");

    // final orbitals from the converged density
    const Matrix f = detail::fock_matrix(ints, density);
    EigenSystem es = solve_orbitals(f);
    out.mo_coefficients = x * es.vectors;
    out.orbital_energies = es.values;
    const Matrix d_final = density_from(out.mo_coefficients);
    out.scf_energy = electronic_energy(d_final, detail::fock_matrix(ints, d_final)) + ints.e_nn;
    return out;
}

/// Ground-state energy of one hydrogen atom in the given basis: the lowest
/// eigenvalue of the one-electron generalized problem h c = e S c. Twice this
/// value is the dissociation asymptote of the binding curve.
inline double atomic_asymptote(const BasisSet& basis) {
    const IntegralSet ints = assemble_atom_integrals(basis);
    const Matrix x = inverse_sqrt_spd(ints.S);
    EigenSystem es = jacobi_eigh(x.transposed() * (ints.T + ints.V) * x);
    return es.values.front();
}

} // namespace fermimagic
