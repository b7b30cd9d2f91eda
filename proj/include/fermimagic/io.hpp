// Copyright 2026 The fermimagic Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file io.hpp
 * @brief Command-line configuration and serialization: CSV scan tables,
 *        key:value summaries, and a convenience SVG rendering.
 *
 * All numeric output uses 12 significant digits ("%.12g"), which round-trips
 * exactly under parse + re-serialization, and byte-identical files for
 * identical configurations.
 */

#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fermimagic/scan.hpp"

namespace fermimagic {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when --help is requested; carries the help text.
struct HelpRequested {
    std::string text;
};

// process exit classes: usage vs numerical vs I/O failures
inline constexpr int kexit_ok = 0;
inline constexpr int kexit_usage = 2;
inline constexpr int kexit_numerical = 3;
inline constexpr int kexit_io = 4;

enum class Command { scan, point, analytic, verify_gates };

struct RunConfig {
    Command command = Command::scan;
    std::string basis = "sto-3g";
    double ell_min = 0.3;   // angstrom
    double ell_max = 3.5;
    double step = 0.01;
    double ell_point = 0.7414;
    double gate_theta = -0.39269908169872414;  // -pi/8
    std::vector<double> thetas;
    std::string csv_path = "scan.csv";
    std::string summary_path;
    std::string svg_path;
    bool want_svg = false;
};

/// Strict argument parsing; unknown flags are rejected. argv excludes the
/// program name.
inline RunConfig parse_args(const std::vector<std::string>& argv) {
    CLI::App app{"fermionic Wigner functions and magic proxies of H2 across dissociation"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto* scan = app.add_subcommand("scan", "dissociation scan with binding-curve analysis");
    scan->add_option("--basis", cfg.basis, "basis set name (sto-3g | 6-31g)");
    scan->add_option("--rmin", cfg.ell_min, "smallest separation (angstrom)");
    scan->add_option("--rmax", cfg.ell_max, "largest separation (angstrom)");
    scan->add_option("--step", cfg.step, "grid spacing (angstrom)");
    scan->add_option("--out", cfg.csv_path, "CSV output path");
    scan->add_option("--summary", cfg.summary_path, "summary output path");
    auto* svg_opt = scan->add_option("--svg", cfg.svg_path, "SVG output path");

    auto* point = app.add_subcommand("point", "single-geometry report");
    point->add_option("--r", cfg.ell_point, "separation (angstrom)")->required();
    point->add_option("--basis", cfg.basis, "basis set name (sto-3g | 6-31g)");

    auto* analytic = app.add_subcommand("analytic", "closed-form proxies at given angles");
    analytic->add_option("--thetas", cfg.thetas, "mixing angles (radians)")
        ->required()
        ->delimiter(',');

    auto* gates = app.add_subcommand("verify-gates", "rotation identity and T-gate conjugacy");
    gates->add_option("--theta", cfg.gate_theta, "mixing angle (radians)");

    std::vector<const char*> raw;
    raw.reserve(argv.size() + 1);
    raw.push_back("fermimagic");
    for (const std::string& a : argv) raw.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream help;
        help << app.help();
        throw HelpRequested{help.str()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (scan->parsed()) {
        cfg.command = Command::scan;
        cfg.want_svg = svg_opt->count() > 0;
        if (!(cfg.ell_min > 0.0) || !(cfg.ell_min < cfg.ell_max))
            throw UsageError("scan: need 0 < rmin < rmax");
        if (!(cfg.step > 0.0)) throw UsageError("scan: step must be positive");
    } else if (point->parsed()) {
        cfg.command = Command::point;
        if (!(cfg.ell_point > 0.0)) throw UsageError("point: separation must be positive");
    } else if (analytic->parsed()) {
        cfg.command = Command::analytic;
    } else {
        cfg.command = Command::verify_gates;
    }
    return cfg;
}

/// 12-significant-digit formatting, deterministic.
inline std::string format_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline constexpr const char* kcsv_header =
    "ell_angstrom,e_total_hartree,e_binding_hartree,theta_rad,two_det_weight,s2,fs2,mana,d2e,kappa";

inline void write_csv(const ScanSeries& series, const CurvatureAnalysis& analysis,
                      const std::string& path) {
    if (series.points.empty()) throw std::invalid_argument("write_csv: empty series");
    std::ostringstream out;
    out << kcsv_header << "\n";
    for (std::size_t i = 0; i < series.points.size(); ++i) {
        const ScanPoint& p = series.points[i];
        out << format_g12(p.ell) << ',' << format_g12(p.e_total) << ','
            << format_g12(p.e_binding) << ',' << format_g12(p.theta) << ','
            << format_g12(p.two_det_weight) << ',' << format_g12(p.s2) << ','
            << format_g12(p.fs2) << ',' << format_g12(p.mana) << ','
            << format_g12(analysis.d2[i]) << ',' << format_g12(analysis.kappa[i]) << "\n";
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("write_csv: cannot open '" + path + "'");
    file << out.str();
    if (!file) throw IoError("write_csv: write failed for '" + path + "'");
}

/// Parses a CSV produced by write_csv back into rows of doubles.
inline std::vector<std::vector<double>> read_csv(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw IoError("read_csv: cannot open '" + path + "'");
    std::string line;
    if (!std::getline(file, line)) throw IoError("read_csv: empty file '" + path + "'");
    if (line != kcsv_header) throw IoError("read_csv: unexpected header in '" + path + "'");
    std::vector<std::vector<double>> rows;
    while (std::getline(file, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline void write_summary(const ScanSeries& series, const CurvatureAnalysis& analysis,
                          const std::string& path) {
    if (series.points.empty() || analysis.kappa.size() != series.points.size())
        throw std::invalid_argument("write_summary: analysis does not match series");

    std::size_t eq = 0;
    for (std::size_t i = 0; i < series.points.size(); ++i)
        if (series.points[i].e_binding < series.points[eq].e_binding) eq = i;
    double eq_ell = series.points[eq].ell;
    if (eq > 0 && eq + 1 < series.points.size()) {
        const double y0 = series.points[eq - 1].e_binding;
        const double y1 = series.points[eq].e_binding;
        const double y2 = series.points[eq + 1].e_binding;
        const double denom = y0 - 2.0 * y1 + y2;
        if (std::abs(denom) > 1e-300) eq_ell += 0.5 * series.step * (y0 - y2) / denom;
    }

    double theta_peak;
    try {
        theta_peak = theta_at_peak(series, analysis);
    } catch (const std::exception&) {
        theta_peak = std::numeric_limits<double>::quiet_NaN();
    }

    std::ostringstream out;
    out << "basis: " << series.basis << "\n";
    out << "ell_min_angstrom: " << format_g12(series.ell_min) << "\n";
    out << "ell_max_angstrom: " << format_g12(series.ell_max) << "\n";
    out << "step_angstrom: " << format_g12(series.step) << "\n";
    out << "points: " << series.points.size() << "\n";
    out << "atom_energy_hartree: " << format_g12(series.atom_energy) << "\n";
    out << "equilibrium_ell_angstrom: " << format_g12(eq_ell) << "\n";
    out << "ell_star_kappa_angstrom: " << format_g12(analysis.ell_star) << "\n";
    out << "ell_star_absd2_angstrom: " << format_g12(analysis.ell_absd2) << "\n";
    for (const auto& [name, ell] : analysis.ell_magic)
        out << "ell_magic_" << name << "_angstrom: " << format_g12(ell) << "\n";
    out << "theta_at_magic_peak_rad: " << format_g12(theta_peak) << "\n";
    for (const auto& [name, value] : analysis.peak_value)
        out << "peak_" << name << ": " << format_g12(value) << "\n";

    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("write_summary: cannot open '" + path + "'");
    file << out.str();
    if (!file) throw IoError("write_summary: write failed for '" + path + "'");
}

/// Reads a key:value summary back into a map.
inline std::map<std::string, std::string> read_summary(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw IoError("read_summary: cannot open '" + path + "'");
    std::map<std::string, std::string> out;
    std::string line;
    while (std::getline(file, line)) {
        const auto colon = line.find(": ");
        if (colon == std::string::npos) continue;
        out[line.substr(0, colon)] = line.substr(colon + 2);
    }
    return out;
}

namespace detail {

struct SvgSeriesSpec {
    const char* label;
    const char* color;
    std::vector<double> values;
};

} // namespace detail

/// Standalone SVG: one polyline per proxy, the binding curve rescaled to the
/// same panel, and a dashed vertical line at the curvature peak.
inline void render_svg(const ScanSeries& series, const CurvatureAnalysis& analysis,
                       const std::string& path) {
    if (series.points.empty()) throw std::invalid_argument("render_svg: empty series");
    const double width = 900.0, height = 560.0;
    const double left = 70.0, right = 30.0, top = 30.0, bottom = 50.0;
    const double panel_w = width - left - right;
    const double panel_h = height - top - bottom;

    const std::size_t n = series.points.size();
    std::vector<detail::SvgSeriesSpec> curves;
    auto collect = [&](const char* label, const char* color, auto field) {
        detail::SvgSeriesSpec curve{label, color, {}};
        curve.values.resize(n);
        for (std::size_t i = 0; i < n; ++i) curve.values[i] = series.points[i].*field;
        curves.push_back(std::move(curve));
    };
    collect("s2", "#1f77b4", &ScanPoint::s2);
    collect("fs2", "#2ca02c", &ScanPoint::fs2);
    collect("mana", "#d62728", &ScanPoint::mana);
    collect("e_binding (rescaled)", "#7f7f7f", &ScanPoint::e_binding);

    double magic_max = 1e-300;
    for (std::size_t c = 0; c + 1 < curves.size(); ++c)
        for (double v : curves[c].values) magic_max = std::max(magic_max, v);
    // map the binding curve onto the proxy scale
    {
        auto& eb = curves.back().values;
        double lo = eb[0], hi = eb[0];
        for (double v : eb) { lo = std::min(lo, v); hi = std::max(hi, v); }
        const double span = (hi > lo) ? hi - lo : 1.0;
        for (double& v : eb) v = (v - lo) / span * magic_max;
    }

    const double x0 = series.points.front().ell;
    const double x1 = series.points.back().ell;
    auto xpix = [&](double ell) { return left + (ell - x0) / (x1 - x0) * panel_w; };
    auto ypix = [&](double v) { return top + panel_h - v / magic_max * panel_h; };

    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6g", v);
        return std::string(buf);
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << top + panel_h << "\" x2=\"" << left + panel_w
        << "\" y2=\"" << top + panel_h << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
        << top + panel_h << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << left + panel_w / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-size=\"15\">interatomic distance (angstrom)</text>\n";
    svg << "<text x=\"18\" y=\"" << top + panel_h / 2
        << "\" text-anchor=\"middle\" font-size=\"15\" transform=\"rotate(-90 18 "
        << top + panel_h / 2 << ")\">magic proxies (nats)</text>\n";

    for (const auto& curve : curves) {
        svg << "<polyline fill=\"none\" stroke=\"" << curve.color << "\" stroke-width=\"1.6\" points=\"";
        for (std::size_t i = 0; i < n; ++i) {
            if (i) svg << ' ';
            svg << fmt(xpix(series.points[i].ell)) << ',' << fmt(ypix(curve.values[i]));
        }
        svg << "\"/>\n";
    }

    svg << "<line x1=\"" << fmt(xpix(analysis.ell_star)) << "\" y1=\"" << top << "\" x2=\""
        << fmt(xpix(analysis.ell_star)) << "\" y2=\"" << top + panel_h
        << "\" stroke=\"black\" stroke-dasharray=\"6,4\"/>\n";

    double ly = top + 14.0;
    for (const auto& curve : curves) {
        svg << "<line x1=\"" << left + panel_w - 190 << "\" y1=\"" << ly - 4 << "\" x2=\""
            << left + panel_w - 160 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << curve.color
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << left + panel_w - 152 << "\" y=\"" << ly
            << "\" font-size=\"13\">" << curve.label << "</text>\n";
        ly += 18.0;
    }
    svg << "</svg>\n";

    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("render_svg: cannot open '" + path + "'");
    file << svg.str();
    if (!file) throw IoError("render_svg: write failed for '" + path + "'");
}

} // namespace fermimagic
