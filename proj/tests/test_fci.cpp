// Copyright 2026 The fermimagic Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "fermimagic/fci.hpp"
#include "support/fock_oracle.hpp"
#include "support/reference_values.hpp"

using namespace fermimagic;

namespace {

MOIntegrals mo_at(double ell, const char* basis) {
    const IntegralSet ints = assemble_integrals(ell, builtin_basis(basis));
    return ao_to_mo(ints, rhf_scf(ints));
}

} // namespace

TEST_CASE("ao_to_mo: MO overlap is the identity and h_mo is symmetric") {
    const IntegralSet ints = assemble_integrals(0.9, builtin_basis("sto-3g"));
    const SCFResult scf = rhf_scf(ints);
    const Matrix s_mo = scf.mo_coefficients.transposed() * ints.S * scf.mo_coefficients;
    CHECK((s_mo - Matrix::identity(ints.K)).max_abs() < 1e-10);

    const MOIntegrals mo = ao_to_mo(ints, scf);
    for (std::size_t p = 0; p < mo.n_modes; ++p)
        for (std::size_t q = 0; q < mo.n_modes; ++q)
            CHECK(std::abs(mo.h_so(p, q) - mo.h_so(q, p)) < 1e-12);
}

TEST_CASE("ao_to_mo matches the naive loop transform") {
    const IntegralSet ints = assemble_integrals(1.2, builtin_basis("sto-3g"));
    const SCFResult scf = rhf_scf(ints);
    const MOIntegrals mo = ao_to_mo(ints, scf);
    const std::size_t K = ints.K;
    const auto& c = scf.mo_coefficients;
    for (std::size_t p = 0; p < K; ++p)
        for (std::size_t q = 0; q < K; ++q)
            for (std::size_t r = 0; r < K; ++r)
                for (std::size_t s = 0; s < K; ++s) {
                    double ref = 0.0;
                    for (std::size_t m = 0; m < K; ++m)
                        for (std::size_t n = 0; n < K; ++n)
                            for (std::size_t l = 0; l < K; ++l)
                                for (std::size_t t = 0; t < K; ++t)
                                    ref += c(m, p) * c(n, q) * c(l, r) * c(t, s) *
                                           ints.eri(m, n, l, t);
                    CHECK(std::abs(mo.mo(p, q, r, s) - ref) < 1e-12);
                }
}

TEST_CASE("spin-orbital tensor antisymmetry") {
    const MOIntegrals mo = mo_at(1.0, "sto-3g");
    const std::size_t n = mo.n_modes;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s) {
                    const double v = mo.aso(p, q, r, s);
                    CHECK(std::abs(v + mo.aso(q, p, r, s)) < 1e-12);
                    CHECK(std::abs(v + mo.aso(p, q, s, r)) < 1e-12);
                    CHECK(std::abs(v - mo.aso(r, s, p, q)) < 1e-12);
                    if (p == q) CHECK(std::abs(v) < 1e-14);
                }
}

TEST_CASE("sector Hamiltonian: dimension, symmetry, Fock-space oracle") {
    for (const char* basis : {"sto-3g", "6-31g"}) {
        const MOIntegrals mo = mo_at(1.1, basis);
        const Matrix h = build_sector_hamiltonian(mo);
        const std::size_t dim = mo.K * mo.K;
        REQUIRE(h.rows() == dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                CHECK(std::abs(h(i, j) - h(j, i)) < 1e-12);

        const auto full = oracle::full_hamiltonian(mo);
        const auto dets = sector_determinants(mo.K);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                CHECK(std::abs(h(i, j) - full[dets[i]][dets[j]]) < 1e-12);
    }
}

TEST_CASE("ground eigenpair: residual, variational bound, phase") {
    for (double ell : {0.5, 0.7414, 1.5, 3.0}) {
        const IntegralSet ints = assemble_integrals(ell, builtin_basis("sto-3g"));
        const SCFResult scf = rhf_scf(ints);
        const GroundState state =
            ground_eigenpair(build_sector_hamiltonian(ao_to_mo(ints, scf)), ints.e_nn, ints.K);
        CHECK(state.energy <= scf.scf_energy + 1e-12);
        CHECK(state.sector_amplitudes[0] >= 0.0);
        double norm = 0.0;
        for (double a : state.sector_amplitudes) norm += a * a;
        CHECK(std::abs(norm - 1.0) < 1e-12);
    }
}

TEST_CASE("FCI total energies match the independent reference") {
    for (const auto& ref : refvals::ksto3g_energies) {
        const IntegralSet ints = assemble_integrals(ref.ell, builtin_basis("sto-3g"));
        CHECK(std::abs(solve_ground_state(ints).energy - ref.fci) < 1e-6);
    }
    for (const auto& ref : refvals::k631g_energies) {
        const IntegralSet ints = assemble_integrals(ref.ell, builtin_basis("6-31g"));
        CHECK(std::abs(solve_ground_state(ints).energy - ref.fci) < 1e-6);
    }
}

TEST_CASE("dissociation limit: energy and mixing angle at 10 angstrom") {
    const IntegralSet ints = assemble_integrals(10.0, builtin_basis("sto-3g"));
    const GroundState state = solve_ground_state(ints);
    CHECK(std::abs(state.energy - 2.0 * refvals::katom_sto3g) < 1e-6);
    CHECK(std::abs(state.theta + std::numbers::pi / 4.0) < 1e-3);
    CHECK(state.two_det_weight > 0.999);
}

TEST_CASE("FCI energy is invariant under orbital rotations") {
    const IntegralSet ints = assemble_integrals(1.4, builtin_basis("sto-3g"));
    const SCFResult scf = rhf_scf(ints);
    const double e0 =
        ground_eigenpair(build_sector_hamiltonian(ao_to_mo(ints, scf)), ints.e_nn, ints.K).energy;
    for (double angle : {0.3, 1.1, -0.7}) {
        SCFResult rotated = scf;
        const double c = std::cos(angle), s = std::sin(angle);
        for (std::size_t m = 0; m < 2; ++m) {
            const double a = scf.mo_coefficients(m, 0), b = scf.mo_coefficients(m, 1);
            rotated.mo_coefficients(m, 0) = c * a + s * b;
            rotated.mo_coefficients(m, 1) = -s * a + c * b;
        }
        const double e1 =
            ground_eigenpair(build_sector_hamiltonian(ao_to_mo(ints, rotated)), ints.e_nn, ints.K)
                .energy;
        CHECK(std::abs(e1 - e0) < 1e-10);
    }
}

TEST_CASE("embed_fock: determinant mapping, norm, round trip") {
    // K = 2: determinant (alpha0, beta0) -> bits {0,1}
    std::vector<double> amps{1.0, 0.0, 0.0, 0.0};
    FockVector fock = embed_fock(amps, 2);
    CHECK(fock[0b0011].real() == 1.0);
    double norm = 0.0;
    for (const auto& amp : fock) norm += std::norm(amp);
    CHECK(std::abs(norm - 1.0) < 1e-14);

    std::vector<double> mixed{0.5, 0.5, -0.5, 0.5};
    FockVector f2 = embed_fock(mixed, 2);
    const auto dets = sector_determinants(2);
    for (std::size_t i = 0; i < dets.size(); ++i)
        CHECK(f2[dets[i]].real() == mixed[i]);  // exact round trip
    norm = 0.0;
    for (const auto& amp : f2) norm += std::norm(amp);
    CHECK(std::abs(norm - 1.0) < 1e-14);
}

TEST_CASE("extract_theta on explicit two-determinant states") {
    FockVector pure(16, {0.0, 0.0});
    pure[0b0011] = 1.0;
    auto [t0, w0] = extract_theta(pure);
    CHECK(t0 == 0.0);
    CHECK(w0 == 1.0);

    FockVector mix(16, {0.0, 0.0});
    mix[0b0011] = 1.0 / std::numbers::sqrt2;
    mix[0b1100] = -1.0 / std::numbers::sqrt2;
    auto [t1, w1] = extract_theta(mix);
    CHECK(std::abs(t1 + std::numbers::pi / 4.0) < 1e-15);
    CHECK(std::abs(w1 - 1.0) < 1e-15);
}

TEST_CASE("two-determinant weight across representative distances") {
    for (double ell : {0.3, 0.7414, 1.5, 2.5, 3.5}) {
        const IntegralSet ints = assemble_integrals(ell, builtin_basis("sto-3g"));
        const GroundState state = solve_ground_state(ints);
        CHECK(state.two_det_weight >= 0.999);
        CHECK(state.ansatz_ok);
        CHECK(state.theta <= 1e-9);
        CHECK(state.theta > -std::numbers::pi / 4.0 - 1e-9);
    }
}
