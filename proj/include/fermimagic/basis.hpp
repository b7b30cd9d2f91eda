// Copyright 2026 The fermimagic Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fermimagic {

/// One s-type Gaussian primitive. The coefficient weights the
/// unit-normalized primitive inside a contraction.
struct GaussianPrimitive {
    double exponent;     // bohr^-2
    double coefficient;  // contraction weight
};

/// Primitive table for one contracted s function.
struct ShellData {
    std::vector<GaussianPrimitive> primitives;
};

/// Hydrogen s-only basis: every H atom carries the same shell list.
struct BasisSet {
    std::string name;
    std::vector<ShellData> shells_per_hydrogen;

    std::size_t functions_per_atom() const noexcept { return shells_per_hydrogen.size(); }
};

/// A contracted s function placed in space, with coefficients already
/// rescaled so that the contracted self-overlap is exactly 1.
struct ContractedShell {
    std::array<double, 3> center;  // bohr
    std::vector<GaussianPrimitive> primitives;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses the basis data format:
///   H <n_shells>
///   shell <n_prim>
///   <exponent> <coefficient>
///   ...
/// Blank lines and lines starting with '#' are ignored.
inline BasisSet parse_basis_text(std::string_view text, std::string name) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> tokens;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    std::size_t pos = 0;
    auto next = [&]() -> const std::string& {
        if (pos >= tokens.size()) throw ConfigError("basis data: unexpected end of input in '" + name + "'");
        return tokens[pos++];
    };

    BasisSet basis;
    basis.name = std::move(name);
    if (next() != "H") throw ConfigError("basis data: expected 'H' header in '" + basis.name + "'");
    const int n_shells = std::stoi(next());
    if (n_shells <= 0) throw ConfigError("basis data: shell count must be positive");
    for (int s = 0; s < n_shells; ++s) {
        if (next() != "shell") throw ConfigError("basis data: expected 'shell' record");
        const int n_prim = std::stoi(next());
        if (n_prim <= 0) throw ConfigError("basis data: primitive count must be positive");
        ShellData shell;
        for (int k = 0; k < n_prim; ++k) {
            GaussianPrimitive prim{};
            prim.exponent = std::stod(next());
            prim.coefficient = std::stod(next());
            if (!(prim.exponent > 0.0) || !std::isfinite(prim.exponent))
                throw ConfigError("basis data: exponent must be positive and finite");
            if (!std::isfinite(prim.coefficient))
                throw ConfigError("basis data: coefficient must be finite");
            shell.primitives.push_back(prim);
        }
        basis.shells_per_hydrogen.push_back(std::move(shell));
    }
    if (pos != tokens.size()) throw ConfigError("basis data: trailing tokens in '" + basis.name + "'");
    return basis;
}

// Hydrogen s parameters from the standard published tabulations
// (Hehre-Stewart-Pople STO-3G; Ditchfield-Hehre-Pople 6-31G).
inline constexpr std::string_view ksto3g_data = R"(
H 1
shell 3
3.425250914 0.1543289673
0.6239137298 0.5353281423
0.1688554040 0.4446345422
)";

inline constexpr std::string_view k631g_data = R"(
H 2
shell 3
18.73113696 0.03349460434
2.825394365 0.2347269535
0.6401216923 0.8137573261
shell 1
0.1612777588 1.0
)";

/// Looks up an embedded basis by name ("sto-3g" or "6-31g").
inline const BasisSet& builtin_basis(std::string_view name) {
    static const BasisSet sto3g = parse_basis_text(ksto3g_data, "sto-3g");
    static const BasisSet g631 = parse_basis_text(k631g_data, "6-31g");
    if (name == "sto-3g") return sto3g;
    if (name == "6-31g") return g631;
    throw ConfigError("unknown basis '" + std::string(name) + "' (expected sto-3g or 6-31g)");
}

} // namespace fermimagic
