#pragma once

#include <optional>
#include <vector>

#include "nuforge/kernels.hpp"
#include "nuforge/kg.hpp"
#include "nuforge/potential.hpp"
#include "nuforge/system.hpp"

namespace nuforge {

using kernels::Execution;

/// Uniform grid of `count` interior nodes r_i = left + i h, i = 1..count,
/// with h = (right - left)/(count + 1). Dirichlet walls sit at left and right.
struct Grid {
    double left;
    double right;
    int count;

    double spacing() const { return (right - left) / (count + 1); }
    double node(int i) const { return left + i * spacing(); }
    std::vector<double> nodes() const;
    void validate() const;
};

inline constexpr double kBisectionWidth = 1e-10;

/// Symmetric tridiagonal discretization of -d^2/dr^2 + V on the grid.
struct TridiagonalOperator {
    std::vector<double> diagonal;  ///< 2/h^2 + V(r_i)
    double off_diagonal;           ///< -1/h^2
    static TridiagonalOperator discretize(const PotentialExpr& potential, const Grid& grid);
};

/// The k lowest Dirichlet eigenvalues, ascending. Requires k <= count/4.
std::vector<double> fd_eigensolve(const PotentialExpr& potential, const Grid& grid, int k,
                                  Execution execution = Execution::Parallel);

struct ResidualReport {
    double max_abs = 0.0;
    /// max_abs / ((1 + |E|) max |Psi|)
    double max_rel = 0.0;
};

/// -Psi'' + V Psi - E Psi over the grid nodes with the analytic Psi''.
/// `energy` overrides E_n (for sensitivity checks).
ResidualReport schrodinger_residual(const SolvableSystem& system, int n, const Grid& grid,
                                    std::optional<double> energy = std::nullopt,
                                    Execution execution = Execution::Parallel);

/// -psi'' + (m + V_s)^2 psi - (epsilon - V_v)^2 psi scaled by
/// (1 + |epsilon^2 - m^2|) max |psi|. `epsilon` overrides level.epsilon.
double kg_equation_residual(const KGLevel& level, const KGPotential& potential, const Grid& grid,
                            std::optional<double> epsilon = std::nullopt,
                            Execution execution = Execution::Parallel);

/// Integration interval for the wavefunctions of levels 0..n_max: the domain
/// itself when finite, otherwise truncated where every |Psi_n| has dropped
/// below 1e-14 of its maximum.
Interval integration_interval(const SolvableSystem& system, int n_max);

struct OrthogonalityReport {
    /// (n_max+1)^2 row-major overlaps, normalized to unit diagonal.
    std::vector<double> normalized;
    std::vector<double> norms;
    Interval interval;
    double max_off_diagonal = 0.0;
    int size = 0;
    double at(int m, int n) const { return normalized[static_cast<std::size_t>(m * size + n)]; }
};

OrthogonalityReport orthogonality_matrix(const SolvableSystem& system, int n_max, int quadrature_points = 4000,
                                         Execution execution = Execution::Parallel);

/// sqrt of the integral of Psi_n^2 over the integration interval.
double wavefunction_norm(const SolvableSystem& system, int n, int quadrature_points = 4000);

/// Sign changes of Psi_n on `samples` evenly spaced interior points, ignoring
/// values below 1e-12 of the maximum.
int count_nodes(const SolvableSystem& system, int n, int samples = 2000);

}  // namespace nuforge
