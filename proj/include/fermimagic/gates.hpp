// Copyright 2026 The fermimagic Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file gates.hpp
 * @brief Single-qubit gate algebra: the bond-stretching unitary U(theta),
 *        the R_x/R_z conjugation identity, and the exhaustive search for
 *        Clifford elements conjugating U(-pi/8) into the T gate family.
 *
 * Rotation convention: R_a(phi) = exp(-i phi sigma_a / 2).
 */

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace fermimagic {

using Mat2 = std::array<std::complex<double>, 4>;  // row-major 2x2

inline Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline Mat2 mat2_adjoint(const Mat2& a) {
    return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

inline double mat2_max_abs_diff(const Mat2& a, const Mat2& b) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline bool is_unitary(const Mat2& u, double tol = 1e-12) {
    const Mat2 p = mat2_mul(mat2_adjoint(u), u);
    const Mat2 id{1.0, 0.0, 0.0, 1.0};
    return mat2_max_abs_diff(p, id) < tol;
}

/// A proportional to B: pick the phase from the largest-magnitude entry of B
/// and compare entry-wise.
inline bool proportional_up_to_phase(const Mat2& a, const Mat2& b, double tol = 1e-10) {
    int k = 0;
    for (int i = 1; i < 4; ++i)
        if (std::abs(b[i]) > std::abs(b[k])) k = i;
    if (std::abs(b[k]) < tol) return mat2_max_abs_diff(a, b) < tol;
    const std::complex<double> phase = a[k] / b[k];
    if (std::abs(std::abs(phase) - 1.0) > tol) return false;
    Mat2 scaled;
    for (int i = 0; i < 4; ++i) scaled[i] = phase * b[i];
    return mat2_max_abs_diff(a, scaled) < tol;
}

inline Mat2 rx(double phi) {
    const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
    return {std::complex<double>(c, 0.0), std::complex<double>(0.0, -s),
            std::complex<double>(0.0, -s), std::complex<double>(c, 0.0)};
}

inline Mat2 ry(double phi) {
    const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
    return {std::complex<double>(c, 0.0), std::complex<double>(-s, 0.0),
            std::complex<double>(s, 0.0), std::complex<double>(c, 0.0)};
}

inline Mat2 rz(double phi) {
    return {std::exp(std::complex<double>(0.0, -phi / 2.0)), 0.0,
            0.0, std::exp(std::complex<double>(0.0, phi / 2.0))};
}

inline Mat2 t_gate() { return {1.0, 0.0, 0.0, std::exp(std::complex<double>(0.0, std::numbers::pi / 4.0))}; }
inline Mat2 t_gate_adjoint() { return mat2_adjoint(t_gate()); }

/// Bond stretching as a qubit rotation: U(theta) = R_y(2 theta), acting on
/// the two-determinant computational basis.
struct QubitView {
    double theta = 0.0;
    Mat2 u{};
};

inline QubitView qubit_unitary(double theta) {
    if (!std::isfinite(theta)) throw std::domain_error("qubit_unitary: theta must be finite");
    const double c = std::cos(theta), s = std::sin(theta);
    return {theta, Mat2{std::complex<double>(c, 0.0), std::complex<double>(-s, 0.0),
                        std::complex<double>(s, 0.0), std::complex<double>(c, 0.0)}};
}

/// Finds s in {+1,-1} with R_x(s pi/2) R_z(2 theta) R_x(-s pi/2) = R_y(2 theta)
/// up to global phase. Exactly one sign works for generic theta; at the
/// degenerate angles where both do, the sign that always works is returned.
/// Throws when neither sign reproduces the rotation (convention bug).
inline int rotation_identity_check(double theta) {
    if (!std::isfinite(theta)) throw std::domain_error("rotation_identity_check: theta must be finite");
    const Mat2 target = ry(2.0 * theta);
    const Mat2 zrot = rz(2.0 * theta);
    const double half_pi = std::numbers::pi / 2.0;
    const bool plus = proportional_up_to_phase(
        mat2_mul(mat2_mul(rx(half_pi), zrot), rx(-half_pi)), target, 1e-12);
    const bool minus = proportional_up_to_phase(
        mat2_mul(mat2_mul(rx(-half_pi), zrot), rx(half_pi)), target, 1e-12);
    if (minus) return -1;
    if (plus) return +1;
    throw std::runtime_error("rotation_identity_check: neither conjugation sign matches");
}

/// The 24 single-qubit Clifford elements (up to global phase), generated as
/// the multiplicative closure of the phase gate and the Hadamard.
inline const std::vector<Mat2>& single_qubit_cliffords() {
    static const std::vector<Mat2> table = [] {
        const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
        const Mat2 h{inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
        const Mat2 s{1.0, 0.0, 0.0, std::complex<double>(0.0, 1.0)};
        std::vector<Mat2> found{Mat2{1.0, 0.0, 0.0, 1.0}};
        auto known = [&](const Mat2& candidate) {
            for (const Mat2& e : found)
                if (proportional_up_to_phase(candidate, e, 1e-9)) return true;
            return false;
        };
        for (std::size_t i = 0; i < found.size(); ++i) {
            for (const Mat2& g : {h, s}) {
                const Mat2 next = mat2_mul(g, found[i]);
                if (!known(next)) found.push_back(next);
            }
        }
        if (found.size() != 24)
            throw std::logic_error("clifford enumeration produced " + std::to_string(found.size()) +
                                   " elements");
        return found;
    }();
    return table;
}

inline const std::vector<Mat2>& pauli_elements() {
    static const std::vector<Mat2> table = {
        Mat2{1.0, 0.0, 0.0, 1.0},
        Mat2{0.0, 1.0, 1.0, 0.0},
        Mat2{0.0, std::complex<double>(0.0, -1.0), std::complex<double>(0.0, 1.0), 0.0},
        Mat2{1.0, 0.0, 0.0, -1.0}};
    return table;
}

/// One conjugation match: element index into the searched group, which
/// target it reached ('T' or its adjoint), and in which group it was found.
struct ConjugationHit {
    std::size_t element;
    bool target_is_adjoint;
};

struct ConjugationResult {
    std::vector<ConjugationHit> clifford_hits;
    std::vector<ConjugationHit> pauli_hits;
};

/// Exhaustively tests C U C^dag against T and T^dag (up to global phase) for
/// all 24 Cliffords and, separately, the 4 Pauli elements.
inline ConjugationResult conjugation_search(const Mat2& u, double tol = 1e-10) {
    if (!is_unitary(u, 1e-10))
        throw std::invalid_argument("conjugation_search: input is not unitary");
    const Mat2 t = t_gate();
    const Mat2 td = t_gate_adjoint();
    ConjugationResult result;
    auto scan = [&](const std::vector<Mat2>& group, std::vector<ConjugationHit>& hits) {
        for (std::size_t i = 0; i < group.size(); ++i) {
            const Mat2 conj = mat2_mul(mat2_mul(group[i], u), mat2_adjoint(group[i]));
            if (proportional_up_to_phase(conj, t, tol)) hits.push_back({i, false});
            if (proportional_up_to_phase(conj, td, tol)) hits.push_back({i, true});
        }
    };
    scan(single_qubit_cliffords(), result.clifford_hits);
    scan(pauli_elements(), result.pauli_hits);
    return result;
}

} // namespace fermimagic
