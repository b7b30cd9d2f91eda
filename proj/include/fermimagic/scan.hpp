// Copyright 2026 The fermimagic Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file scan.hpp
 * @brief Dissociation scan driver and binding-curve analysis: derivatives,
 *        extrinsic curvature, and peak bookkeeping for the magic proxies.
 */

#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fermimagic/fci.hpp"
#include "fermimagic/magic.hpp"
#include "fermimagic/scf.hpp"

namespace fermimagic {

struct ScanPoint {
    double ell = 0.0;             // angstrom
    double e_total = 0.0;         // hartree
    double e_binding = 0.0;       // e_total - 2 E_H
    double theta = 0.0;           // radians
    double two_det_weight = 0.0;
    double s2 = 0.0;
    double fs2 = 0.0;
    double mana = 0.0;
};

struct ScanSeries {
    std::string basis;
    double ell_min = 0.0, ell_max = 0.0, step = 0.0;
    double atom_energy = 0.0;  // E_H in this basis
    std::size_t n_modes = 0;
    std::vector<ScanPoint> points;
};

/// Uniform-grid dissociation scan: integrals -> RHF -> FCI -> Wigner
/// spectrum -> magic proxies at every distance. A failing point aborts the
/// scan with the offending distance attached.
inline ScanSeries run_scan(const std::string& basis_name, double ell_min, double ell_max,
                           double step) {
    if (!(ell_min > 0.0) || !(ell_min < ell_max) || !(step > 0.0))
        throw std::invalid_argument("run_scan: need 0 < ell_min < ell_max and step > 0");
    const BasisSet& basis = builtin_basis(basis_name);

    ScanSeries series;
    series.basis = basis_name;
    series.ell_min = ell_min;
    series.ell_max = ell_max;
    series.step = step;
    series.atom_energy = atomic_asymptote(basis);
    series.n_modes = 2 * 2 * basis.functions_per_atom();

    const auto n_points = static_cast<std::size_t>(std::floor((ell_max - ell_min) / step + 0.5)) + 1;
    series.points.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double ell = ell_min + static_cast<double>(i) * step;
        try {
            const IntegralSet ints = assemble_integrals(ell, basis);
            const GroundState state = solve_ground_state(ints);
            const WignerSpectrum spectrum = wigner_spectrum(state.fock_vector);
            const MagicReport magic = make_magic_report(spectrum);
            ScanPoint point;
            point.ell = ell;
            point.e_total = state.energy;
            point.e_binding = state.energy - 2.0 * series.atom_energy;
            point.theta = state.theta;
            point.two_det_weight = state.two_det_weight;
            point.s2 = magic.s2;
            point.fs2 = magic.fs2;
            point.mana = magic.mana;
            series.points.push_back(point);
        } catch (const std::exception& err) {
            throw std::runtime_error("scan point ell=" + std::to_string(ell) +
                                     " angstrom failed: " + err.what());
        }
    }
    return series;
}

/// Refined peak location over a series: discrete argmax plus three-point
/// parabolic refinement, ties toward smaller ell.
struct Peak {
    std::size_t index = 0;
    double ell = 0.0;
    double value = 0.0;
};

namespace detail {

inline Peak locate_peak(const std::vector<double>& ells, const std::vector<double>& values,
                        const std::vector<std::size_t>& allowed) {
    if (allowed.empty()) throw std::runtime_error("peak search: empty candidate set");
    std::size_t best = allowed.front();
    for (std::size_t i : allowed)
        if (values[i] > values[best]) best = i;
    Peak peak{best, ells[best], values[best]};
    if (best > 0 && best + 1 < values.size()) {
        const double denom = values[best - 1] - 2.0 * values[best] + values[best + 1];
        if (std::abs(denom) > 1e-300) {
            const double step = ells[1] - ells[0];
            const double shift = 0.5 * (values[best - 1] - values[best + 1]) / denom;
            if (std::abs(shift) <= 1.0) peak.ell = ells[best] + shift * step;
        }
    }
    return peak;
}

} // namespace detail

/// Derivative and curvature series of the binding curve, with located peaks.
///
/// kappa = |E''| / (1 + E'^2)^{3/2} with E in hartree and ell in angstrom.
/// The curvature and |E''| peak searches target the concave (E'' < 0)
/// interior segment of the curve -- the bond-breaking shoulder -- because on
/// a full dissociation grid the repulsive wall otherwise dominates both
/// diagnostics; when the series has no concave segment the search falls back
/// to all interior points.
struct CurvatureAnalysis {
    std::vector<double> d1;     // hartree / angstrom
    std::vector<double> d2;     // hartree / angstrom^2
    std::vector<double> kappa;
    double ell_star = 0.0;          // refined argmax of kappa
    double ell_absd2 = 0.0;         // refined argmax of |E''|
    std::map<std::string, double> ell_magic;  // refined argmax per proxy
    std::map<std::string, double> peak_value;
};

inline CurvatureAnalysis curvature_analysis(const ScanSeries& series) {
    const std::size_t n = series.points.size();
    if (n < 7) throw std::invalid_argument("curvature_analysis: need at least 7 uniform points");
    const double h = series.step;

    std::vector<double> ells(n), e(n);
    for (std::size_t i = 0; i < n; ++i) {
        ells[i] = series.points[i].ell;
        e[i] = series.points[i].e_binding;
    }

    CurvatureAnalysis out;
    out.d1.resize(n);
    out.d2.resize(n);
    out.kappa.resize(n);
    // five-point central differences; one-sided five-point stencils at the
    // two edge points on each side
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= 2 && i + 2 < n) {
            out.d1[i] = (-e[i + 2] + 8.0 * e[i + 1] - 8.0 * e[i - 1] + e[i - 2]) / (12.0 * h);
            out.d2[i] = (-e[i + 2] + 16.0 * e[i + 1] - 30.0 * e[i] + 16.0 * e[i - 1] - e[i - 2]) /
                        (12.0 * h * h);
        } else if (i < 2) {
            out.d1[i] = (-25.0 * e[i] + 48.0 * e[i + 1] - 36.0 * e[i + 2] + 16.0 * e[i + 3] -
                         3.0 * e[i + 4]) / (12.0 * h);
            out.d2[i] = (35.0 * e[i] - 104.0 * e[i + 1] + 114.0 * e[i + 2] - 56.0 * e[i + 3] +
                         11.0 * e[i + 4]) / (12.0 * h * h);
        } else {
            out.d1[i] = (25.0 * e[i] - 48.0 * e[i - 1] + 36.0 * e[i - 2] - 16.0 * e[i - 3] +
                         3.0 * e[i - 4]) / (12.0 * h);
            out.d2[i] = (35.0 * e[i] - 104.0 * e[i - 1] + 114.0 * e[i - 2] - 56.0 * e[i - 3] +
                         11.0 * e[i - 4]) / (12.0 * h * h);
        }
        out.kappa[i] = std::abs(out.d2[i]) / std::pow(1.0 + out.d1[i] * out.d1[i], 1.5);
    }

    std::vector<std::size_t> interior, concave;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        interior.push_back(i);
        if (out.d2[i] < 0.0) concave.push_back(i);
    }
    const std::vector<std::size_t>& search = concave.empty() ? interior : concave;

    std::vector<double> absd2(n);
    for (std::size_t i = 0; i < n; ++i) absd2[i] = std::abs(out.d2[i]);
    out.ell_star = detail::locate_peak(ells, out.kappa, search).ell;
    out.ell_absd2 = detail::locate_peak(ells, absd2, search).ell;

    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    auto record_proxy = [&](const std::string& name, auto field) {
        std::vector<double> values(n);
        for (std::size_t i = 0; i < n; ++i) values[i] = series.points[i].*field;
        const Peak peak = detail::locate_peak(ells, values, all);
        out.ell_magic[name] = peak.ell;
        out.peak_value[name] = peak.value;
    };
    record_proxy("s2", &ScanPoint::s2);
    record_proxy("fs2", &ScanPoint::fs2);
    record_proxy("mana", &ScanPoint::mana);
    return out;
}

/// theta linearly interpolated at the s2 peak. Errors out when the peak sits
/// on a scan boundary (no bracketing neighbors).
inline double theta_at_peak(const ScanSeries& series, const CurvatureAnalysis& analysis) {
    const double ell = analysis.ell_magic.at("s2");
    const std::size_t n = series.points.size();
    const double lo = series.points.front().ell;
    const double hi = series.points.back().ell;
    if (ell <= lo || ell >= hi)
        throw std::runtime_error("theta_at_peak: magic peak at scan boundary");
    const double h = series.step;
    auto i = static_cast<std::size_t>((ell - lo) / h);
    if (i + 1 >= n) i = n - 2;
    const double frac = (ell - series.points[i].ell) / h;
    return series.points[i].theta * (1.0 - frac) + series.points[i + 1].theta * frac;
}

} // namespace fermimagic
