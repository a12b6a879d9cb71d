#pragma once

#include <map>
#include <string>
#include <vector>

#include "nuforge/system.hpp"

namespace nuforge {

struct ParameterSpec {
    std::string name;
    std::string constraint;
};

struct CatalogEntry {
    std::string id;
    std::string summary;
    /// How the system is built: polynomial family and coordinate map.
    std::string construction;
    std::vector<ParameterSpec> parameters;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& id);

/// Trigonometric Poschl-Teller well from P_n^(alpha,beta)(cos ar).
/// Requires a > 0 and alpha, beta > 1/2 so Psi vanishes at both walls.
SolvableSystem poschl_teller(double alpha, double beta, double a);

/// Same well built from the weighted Jacobi function
/// (1-s)^alpha (1+s)^beta P_n; energies carry the alternate E_F/E_f split.
SolvableSystem poschl_teller_alt(double alpha, double beta, double a);

/// Three-dimensional radial oscillator, V = l(l+1)/r^2 + w^2 r^2/4, in units
/// hbar = 2m = 1 (so E_n = w(2n + l + 3/2)).
SolvableSystem radial_oscillator(int ell, double w);

/// Level n of the n-dependent potential -a(2n+1)/(2r) - 3/(16 r^2), E = -a^2.
SolvableSystem inversely_linear_nonrel(double a, int n);

/// Named parameters as accepted by the CLI.
using ParameterMap = std::map<std::string, double>;

/// Builds a catalog system by id. `level` selects the level for entries whose
/// potential depends on n and is ignored otherwise.
SolvableSystem build_catalog_system(const std::string& id, const ParameterMap& params, int level = 0);

/// Default parameters used by `verify all` and as CLI fallbacks.
ParameterMap default_parameters(const std::string& id);

}  // namespace nuforge
