#pragma once

#include <functional>
#include <optional>
#include <string>

#include "nuforge/factor.hpp"
#include "nuforge/jet.hpp"
#include "nuforge/orthopoly.hpp"
#include "nuforge/potential.hpp"
#include "nuforge/transformation.hpp"

namespace nuforge {

/// A potential with no constant term and the energy that absorbs the
/// constant: target(r) = potential(r) - energy.
struct PotentialSplit {
    PotentialExpr potential;
    double energy = 0.0;
};

inline constexpr double kDecompositionTolerance = 1e-10;

/// Expands target(r) in the transformation's candidate basis by least squares
/// on interior samples, then checks the expansion at separate points. Terms
/// whose contribution is at rounding level are removed exactly.
PotentialSplit fit_to_grammar(const std::function<double(double)>& target, const Transformation& t,
                              double tolerance = kDecompositionTolerance);

/// -sigma~ s'^2 / sigma^2 = V_F - E_F.
PotentialSplit decompose_polynomial_part(const HypergeometricData& data, const Transformation& t);

/// f''/f = V_f - E_f.
PotentialSplit decompose_factor_part(const FactorF& f);

/// Energy of one level with its two summands.
struct EnergyLevel {
    double total = 0.0;
    double polynomial_part = 0.0;  ///< E_F
    double factor_part = 0.0;      ///< E_f
};

/// Where a system came from: the reduced-equation data and the map used.
struct Provenance {
    PolynomialFamily family;
    JacobiWeighting weighting;
    Transformation transformation;
};

/// Potential, spectrum and wavefunctions Psi_n = f(r) F_n(s(r)) of one
/// exactly solvable problem. Wavefunctions are unnormalized.
class SolvableSystem {
public:
    using EnergyFn = std::function<EnergyLevel(int)>;

    SolvableSystem(std::string name, PotentialExpr potential, EnergyFn energy, std::string energy_formula,
                   Provenance provenance, FactorF factor, std::optional<int> fixed_level = std::nullopt);

    const std::string& name() const { return name_; }
    const PotentialExpr& potential() const { return potential_; }
    Interval domain() const { return potential_.domain(); }
    const std::string& energy_formula() const { return energy_formula_; }
    const Provenance& provenance() const { return provenance_; }
    const FactorF& factor() const { return factor_; }
    /// Set when the potential itself depends on n and only that level exists.
    std::optional<int> fixed_level() const { return fixed_level_; }
    bool admits(int n) const { return n >= 0 && (!fixed_level_ || *fixed_level_ == n); }

    EnergyLevel energy(int n) const;
    /// (Psi, Psi', Psi'') at r strictly inside the domain.
    Jet wavefunction(int n, double r) const;

    /// Same system with a different energy evaluator and formula text.
    SolvableSystem with_energy(EnergyFn energy, std::string formula, std::string name) const;

private:
    void require_level(int n) const;

    std::string name_;
    PotentialExpr potential_;
    EnergyFn energy_;
    std::string energy_formula_;
    Provenance provenance_;
    FactorF factor_;
    SolutionPrefactor prefactor_;
    std::optional<int> fixed_level_;
};

struct LevelRange {
    int lowest = 0;
    int highest = 0;
};

/// Builds V = V_F + V_f, E_n = E_F(n) + E_f and Psi_n = f F_n. The potential
/// must be the same for every n in `levels`; pass a single-level range for
/// families whose potential depends on n.
SolvableSystem assemble_system(const PolynomialFamily& family, LevelRange levels, const Transformation& t,
                               JacobiWeighting weighting = JacobiWeighting::Plain);

/// Convenience: (Psi, Psi', Psi'') = system.wavefunction(n, r).
Jet evaluate_wavefunction(const SolvableSystem& system, int n, double r);

}  // namespace nuforge
