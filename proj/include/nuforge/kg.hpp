#pragma once

#include <vector>

#include "nuforge/jet.hpp"
#include "nuforge/potential.hpp"
#include "nuforge/system.hpp"

namespace nuforge {

/// Mixed vector/scalar inversely linear couplings V_v = -A/r, V_s = -B/r for a
/// particle of rest mass m (hbar = c = 1), on the half-line r > 0.
class KGPotential {
public:
    KGPotential(double A, double B, double m);
    /// A = sign * sqrt(B^2 + 3/16), the coupling for which bound states of
    /// the closed form exist. `sign` must be +1 or -1.
    static KGPotential from_B(double B, int sign, double m);

    double A() const { return A_; }
    double B() const { return B_; }
    double mass() const { return m_; }

    PotentialExpr vector_potential() const;
    PotentialExpr scalar_potential() const;
    /// A^2 - B^2 == 3/16 within rounding.
    bool satisfies_constraint() const;

private:
    double A_;
    double B_;
    double m_;
};

inline constexpr double kKGConstraint = 3.0 / 16.0;

struct KGLevel {
    int n = 0;
    double epsilon = 0.0;
    /// Scale of the Hermite map s = sqrt(2 a r): a = 4(mB + epsilon A)/(2n+1).
    double a = 0.0;
    double epsilon_F = 0.0;  ///< non-relativistic summand of epsilon^2 - m^2
    double epsilon_f = 0.0;  ///< relativistic correction summand
};

/// epsilon^2 - m^2 and the effective potential 2(m V_s + epsilon V_v) + V_s^2 - V_v^2.
struct KGMapped {
    PotentialExpr effective_potential;
    double effective_energy = 0.0;
};

KGMapped kg_map(const PotentialExpr& scalar, const PotentialExpr& vector, double m, double epsilon);

/// The two one-dimensional problems the mapped equation separates into.
struct KGSplit {
    PotentialExpr nonrel_potential;      ///< 2(m V_s + epsilon V_v)
    PotentialExpr correction_potential;  ///< V_s^2 - V_v^2 without its constant
    double correction_energy = 0.0;      ///< epsilon_f
    /// True when the correction vanishes identically, so f is constant.
    bool factor_constant() const { return correction_potential.empty() && correction_energy == 0.0; }
};

KGSplit kg_decompose(const KGPotential& pot, double epsilon);

/// epsilon^2 - m^2 + 16 (mB + epsilon A)^2 / (2n+1)^2.
double kg_quantization_residual(const KGPotential& pot, int n, double epsilon);

/// Every root of the quantization condition with |epsilon| < m and a > 0,
/// in ascending order of epsilon.
std::vector<KGLevel> kg_admissible_levels(const KGPotential& pot, int n);

/// The admissible level; when both roots qualify, the larger one. Throws
/// NoBoundStateError when no root qualifies.
KGLevel kg_spectrum(const KGPotential& pot, int n);

/// psi = s^(1/2) exp(-s^2/2) H_n(s), s = sqrt(2 a r).
double kg_wavefunction(const KGLevel& level, double r);
/// (psi, psi', psi'') in r.
Jet kg_wavefunction_jet(const KGLevel& level, double r);

/// The non-relativistic system whose level coincides with this one.
SolvableSystem kg_nonrel_system(const KGLevel& level);

}  // namespace nuforge
