// Copyright 2026 The fermimagic Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Subcommands:
//   scan          dissociation scan -> CSV (+ optional summary / SVG)
//   point         single-geometry report
//   analytic      closed-form proxies on a list of mixing angles
//   verify-gates  rotation identity + T-gate conjugacy check

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "fermimagic/gates.hpp"
#include "fermimagic/io.hpp"
#include "fermimagic/magic.hpp"
#include "fermimagic/scan.hpp"

namespace fm = fermimagic;

namespace {

int run_scan_command(const fm::RunConfig& cfg) {
    const fm::ScanSeries series = fm::run_scan(cfg.basis, cfg.ell_min, cfg.ell_max, cfg.step);
    const fm::CurvatureAnalysis analysis = fm::curvature_analysis(series);
    fm::write_csv(series, analysis, cfg.csv_path);
    std::cout << "wrote " << cfg.csv_path << " (" << series.points.size() << " points)\n";
    if (!cfg.summary_path.empty()) {
        fm::write_summary(series, analysis, cfg.summary_path);
        std::cout << "wrote " << cfg.summary_path << "\n";
    }
    if (cfg.want_svg) {
        fm::render_svg(series, analysis, cfg.svg_path);
        std::cout << "wrote " << cfg.svg_path << "\n";
    }
    std::cout << "ell_star_kappa: " << fm::format_g12(analysis.ell_star)
              << "  ell_star_absd2: " << fm::format_g12(analysis.ell_absd2)
              << "  ell_magic_s2: " << fm::format_g12(analysis.ell_magic.at("s2")) << "\n";
    return fm::kexit_ok;
}

int run_point_command(const fm::RunConfig& cfg) {
    const fm::BasisSet& basis = fm::builtin_basis(cfg.basis);
    const fm::IntegralSet ints = fm::assemble_integrals(cfg.ell_point, basis);
    const fm::SCFResult scf = fm::rhf_scf(ints);
    const fm::GroundState state =
        fm::ground_eigenpair(fm::build_sector_hamiltonian(fm::ao_to_mo(ints, scf)), ints.e_nn,
                             ints.K);
    const fm::WignerSpectrum spectrum = fm::wigner_spectrum(state.fock_vector);
    const fm::MagicReport magic = fm::make_magic_report(spectrum);

    std::cout << "basis: " << cfg.basis << "\n";
    std::cout << "ell_angstrom: " << fm::format_g12(cfg.ell_point) << "\n";
    std::cout << "e_rhf_hartree: " << fm::format_g12(scf.scf_energy) << "\n";
    std::cout << "e_fci_hartree: " << fm::format_g12(state.energy) << "\n";
    std::cout << "theta_rad: " << fm::format_g12(state.theta) << "\n";
    std::cout << "two_det_weight: " << fm::format_g12(state.two_det_weight) << "\n";
    std::cout << "s2: " << fm::format_g12(magic.s2) << "\n";
    std::cout << "fs2: " << fm::format_g12(magic.fs2) << "\n";
    std::cout << "mana: " << fm::format_g12(magic.mana) << "\n";
    return fm::kexit_ok;
}

int run_analytic_command(const fm::RunConfig& cfg) {
    std::cout << "theta_rad,s2,mana,fs2\n";
    for (double theta : cfg.thetas)
        std::cout << fm::format_g12(theta) << ',' << fm::format_g12(fm::analytic_s2_theta(theta))
                  << ',' << fm::format_g12(fm::analytic_mana_theta(theta)) << ','
                  << fm::format_g12(fm::analytic_fs2_theta(theta)) << "\n";
    return fm::kexit_ok;
}

int run_gates_command(const fm::RunConfig& cfg) {
    const int sign = fm::rotation_identity_check(cfg.gate_theta);
    std::cout << "theta_rad: " << fm::format_g12(cfg.gate_theta) << "\n";
    std::cout << "rx_conjugation_sign: " << (sign > 0 ? "+1" : "-1") << "\n";

    const fm::QubitView view = fm::qubit_unitary(cfg.gate_theta);
    const fm::ConjugationResult found = fm::conjugation_search(view.u);
    std::cout << "clifford_hits: " << found.clifford_hits.size() << "\n";
    for (const auto& hit : found.clifford_hits)
        std::cout << "  clifford[" << hit.element << "] -> "
                  << (hit.target_is_adjoint ? "T_dagger" : "T") << "\n";
    std::cout << "pauli_hits: " << found.pauli_hits.size() << "\n";
    for (const auto& hit : found.pauli_hits)
        std::cout << "  pauli[" << hit.element << "] -> "
                  << (hit.target_is_adjoint ? "T_dagger" : "T") << "\n";
    return fm::kexit_ok;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const fm::RunConfig cfg = fm::parse_args(args);
        switch (cfg.command) {
            case fm::Command::scan: return run_scan_command(cfg);
            case fm::Command::point: return run_point_command(cfg);
            case fm::Command::analytic: return run_analytic_command(cfg);
            case fm::Command::verify_gates: return run_gates_command(cfg);
        }
        return fm::kexit_ok;
    } catch (const fm::HelpRequested& help) {
        std::cout << help.text;
        return fm::kexit_ok;
    } catch (const fm::UsageError& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return fm::kexit_usage;
    } catch (const fm::IoError& err) {
        std::cerr << "i/o error: " << err.what() << "\n";
        return fm::kexit_io;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return fm::kexit_numerical;
    }
}
