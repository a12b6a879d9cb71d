#include "nuforge/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "nuforge/errors.hpp"
#include "nuforge/quadrature.hpp"

namespace nuforge {

namespace {

constexpr int kPointsPerPanel = 20;
constexpr double kTailThreshold = 1e-14;

double natural_length(const SolvableSystem& system) {
    const Transformation& t = system.provenance().transformation;
    return t.kind() == MapKind::Quadratic ? 2.0 / t.scale() : 1.0 / t.scale();
}

}  // namespace

std::vector<double> Grid::nodes() const {
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 1; i <= count; ++i) out[static_cast<std::size_t>(i - 1)] = node(i);
    return out;
}

void Grid::validate() const {
    if (count < 16) throw ParameterDomainError(fmt::format("grid needs at least 16 nodes, got {}", count));
    if (!(right > left) || !std::isfinite(left) || !std::isfinite(right))
        throw ParameterDomainError(fmt::format("grid interval ({}, {}) is empty or unbounded", left, right));
}

TridiagonalOperator TridiagonalOperator::discretize(const PotentialExpr& potential, const Grid& grid) {
    grid.validate();
    const double h = grid.spacing();
    TridiagonalOperator op;
    op.off_diagonal = -1.0 / (h * h);
    op.diagonal.resize(static_cast<std::size_t>(grid.count));
    for (int i = 1; i <= grid.count; ++i) {
        const double r = grid.node(i);
        const double v = potential(r);
        if (!std::isfinite(v))
            throw GridPlacementError(fmt::format("potential is not finite at grid node r = {}", r));
        op.diagonal[static_cast<std::size_t>(i - 1)] = 2.0 / (h * h) + v;
    }
    return op;
}

std::vector<double> fd_eigensolve(const PotentialExpr& potential, const Grid& grid, int k, Execution execution) {
    grid.validate();
    if (k < 1 || k > grid.count / 4)
        throw ParameterDomainError(fmt::format("k must lie in [1, count/4] = [1, {}], got {}", grid.count / 4, k));
    const TridiagonalOperator op = TridiagonalOperator::discretize(potential, grid);
    return kernels::bisect_eigenvalues(execution, op.diagonal, op.off_diagonal, k, kBisectionWidth);
}

ResidualReport schrodinger_residual(const SolvableSystem& system, int n, const Grid& grid,
                                    std::optional<double> energy, Execution execution) {
    grid.validate();
    const double e = energy.value_or(system.energy(n).total);
    const PotentialExpr& v = system.potential();
    const auto nodes = grid.nodes();
    const auto sweep = kernels::residual_sweep(execution, nodes, [&](double r) {
        const Jet psi = system.wavefunction(n, r);
        return kernels::PointValue{-psi.second + (v(r) - e) * psi.value, psi.value};
    });
    ResidualReport out;
    out.max_abs = sweep.max_residual;
    out.max_rel = sweep.max_residual / ((1.0 + std::abs(e)) * std::max(sweep.max_magnitude, 1e-300));
    return out;
}

double kg_equation_residual(const KGLevel& level, const KGPotential& potential, const Grid& grid,
                            std::optional<double> epsilon, Execution execution) {
    grid.validate();
    const double eps = epsilon.value_or(level.epsilon);
    const double m = potential.mass();
    const PotentialExpr vs = potential.scalar_potential();
    const PotentialExpr vv = potential.vector_potential();
    const auto nodes = grid.nodes();
    const auto sweep = kernels::residual_sweep(execution, nodes, [&](double r) {
        const Jet psi = kg_wavefunction_jet(level, r);
        const double mass_term = m + vs(r);
        const double energy_term = eps - vv(r);
        return kernels::PointValue{
            -psi.second + (mass_term * mass_term - energy_term * energy_term) * psi.value, psi.value};
    });
    return sweep.max_residual / ((1.0 + std::abs(eps * eps - m * m)) * std::max(sweep.max_magnitude, 1e-300));
}

Interval integration_interval(const SolvableSystem& system, int n_max) {
    const Interval d = system.domain();
    if (std::isfinite(d.right)) return d;
    const double len = natural_length(system);
    const double step = 0.05 * len;
    double peak = 0.0;
    double tail = 0.0;
    for (int i = 1; i < 200000; ++i) {
        const double r = d.left + i * step;
        double here = 0.0;
        for (int n = 0; n <= n_max; ++n)
            if (system.admits(n)) here = std::max(here, std::abs(system.wavefunction(n, r).value));
        peak = std::max(peak, here);
        if (here < kTailThreshold * peak) {
            // Require the tail to stay below threshold over a further stretch.
            tail += step;
            if (tail >= 2.0 * len) return {d.left, r};
        } else {
            tail = 0.0;
        }
    }
    throw Error(fmt::format("wavefunctions of {} do not decay below {} within the scan range", system.name(),
                            kTailThreshold));
}

OrthogonalityReport orthogonality_matrix(const SolvableSystem& system, int n_max, int quadrature_points,
                                         Execution execution) {
    if (n_max < 0) throw ParameterDomainError("n_max must be >= 0");
    for (int n = 0; n <= n_max; ++n)
        if (!system.admits(n)) throw DomainError(fmt::format("{} does not admit level {}", system.name(), n));
    const Interval iv = integration_interval(system, n_max);
    const int panels = std::max(1, quadrature_points / kPointsPerPanel);
    const QuadratureRule rule = composite_gauss_legendre(iv.left, iv.right, panels, kPointsPerPanel);
    const int size = n_max + 1;
    const auto table = kernels::tabulate(execution, rule.nodes, size,
                                         [&](int n, double r) { return system.wavefunction(n, r).value; });
    const std::size_t np = rule.nodes.size();
    std::vector<double> gram(static_cast<std::size_t>(size * size));
    for (int m = 0; m < size; ++m) {
        for (int n = m; n < size; ++n) {
            double acc = 0.0;
            for (std::size_t i = 0; i < np; ++i)
                acc += rule.weights[i] * table[static_cast<std::size_t>(m) * np + i] *
                       table[static_cast<std::size_t>(n) * np + i];
            gram[static_cast<std::size_t>(m * size + n)] = acc;
            gram[static_cast<std::size_t>(n * size + m)] = acc;
        }
    }
    OrthogonalityReport out;
    out.size = size;
    out.interval = iv;
    out.norms.resize(static_cast<std::size_t>(size));
    for (int n = 0; n < size; ++n) out.norms[static_cast<std::size_t>(n)] = std::sqrt(gram[static_cast<std::size_t>(n * size + n)]);
    out.normalized.resize(gram.size());
    for (int m = 0; m < size; ++m) {
        for (int n = 0; n < size; ++n) {
            const double v = gram[static_cast<std::size_t>(m * size + n)] /
                             (out.norms[static_cast<std::size_t>(m)] * out.norms[static_cast<std::size_t>(n)]);
            out.normalized[static_cast<std::size_t>(m * size + n)] = v;
            if (m != n) out.max_off_diagonal = std::max(out.max_off_diagonal, std::abs(v));
        }
    }
    return out;
}

double wavefunction_norm(const SolvableSystem& system, int n, int quadrature_points) {
    const int lowest = system.fixed_level().value_or(0);
    if (!system.admits(n)) throw DomainError(fmt::format("{} does not admit level {}", system.name(), n));
    const Interval iv = integration_interval(system, std::max(n, lowest));
    const int panels = std::max(1, quadrature_points / kPointsPerPanel);
    const QuadratureRule rule = composite_gauss_legendre(iv.left, iv.right, panels, kPointsPerPanel);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double psi = system.wavefunction(n, rule.nodes[i]).value;
        acc += rule.weights[i] * psi * psi;
    }
    return std::sqrt(acc);
}

int count_nodes(const SolvableSystem& system, int n, int samples) {
    const Interval iv = integration_interval(system, n);
    std::vector<double> values(static_cast<std::size_t>(samples));
    double peak = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double r = iv.left + (i + 1) * iv.length() / (samples + 1);
        values[static_cast<std::size_t>(i)] = system.wavefunction(n, r).value;
        peak = std::max(peak, std::abs(values[static_cast<std::size_t>(i)]));
    }
    int changes = 0;
    double last = 0.0;
    for (double v : values) {
        if (std::abs(v) <= 1e-12 * peak) continue;
        if (last != 0.0 && (v > 0.0) != (last > 0.0)) ++changes;
        last = v;
    }
    return changes;
}

}  // namespace nuforge
