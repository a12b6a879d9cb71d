#include "nuforge/verify.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "nuforge/errors.hpp"
#include "nuforge/kg.hpp"

namespace nuforge {

namespace {

constexpr double kEigenTolerance = 1e-3;
constexpr double kResidualTolerance = 1e-8;
constexpr double kOrthogonalityTolerance = 1e-8;
constexpr int kResidualNodes = 100;

CheckRecord make(const std::string& system, const ParameterMap& params, std::optional<Grid> grid,
                 std::string check, double closed, double oracle, double rel, double tol, bool pass) {
    CheckRecord c;
    c.system = system;
    c.params = params;
    c.grid = grid;
    c.check = std::move(check);
    c.closed_form = closed;
    c.oracle_value = oracle;
    c.abs_err = std::abs(oracle - closed);
    c.rel_err = rel;
    c.tolerance = tol;
    c.pass = pass;
    return c;
}

CheckRecord eigen_check(const std::string& id, const ParameterMap& p, const Grid& g, int n, double closed,
                        double fd) {
    const double rel = std::abs(fd - closed) / std::max(std::abs(closed), 1e-300);
    return make(id, p, g, fmt::format("fd_eigenvalue n={}", n), closed, fd, rel, kEigenTolerance,
                rel < kEigenTolerance);
}

Grid residual_grid(const SolvableSystem& system) {
    const Interval d = system.domain();
    const double len = 1.0 / system.provenance().transformation.scale();
    if (std::isfinite(d.right)) {
        const double delta = 1e-3 * d.length();
        return {d.left + delta, d.right - delta, kResidualNodes};
    }
    const Interval iv = integration_interval(system, system.fixed_level().value_or(3));
    return {d.left + 1e-3 * len, iv.right, kResidualNodes};
}

// |Psi| at distances eps*L from each finite wall, for shrinking eps, must
// decrease; reported value is the innermost sample relative to the peak.
CheckRecord endpoint_check(const std::string& id, const ParameterMap& p, const SolvableSystem& system, int n) {
    const Interval d = system.domain();
    const double len = 1.0 / system.provenance().transformation.scale();
    const Interval iv = integration_interval(system, n);
    double peak = 0.0;
    for (int i = 1; i < 400; ++i) peak = std::max(peak, std::abs(system.wavefunction(n, iv.left + i * iv.length() / 400).value));
    bool decreasing = true;
    double innermost = 0.0;
    std::vector<double> eps = {1e-2, 1e-4, 1e-6};
    double prev_left = std::numeric_limits<double>::infinity();
    double prev_right = std::numeric_limits<double>::infinity();
    for (double e : eps) {
        const double left = std::abs(system.wavefunction(n, d.left + e * len).value);
        decreasing = decreasing && left < prev_left;
        prev_left = left;
        innermost = std::max(innermost, left / peak);
        if (std::isfinite(d.right)) {
            const double right = std::abs(system.wavefunction(n, d.right - e * len).value);
            decreasing = decreasing && right < prev_right;
            prev_right = right;
            innermost = std::max(innermost, right / peak);
        }
    }
    if (!std::isfinite(d.right)) {
        // Infinite side: the truncation point of the integration interval is
        // where |Psi| fell below 1e-14 of its peak.
        const double far = std::abs(system.wavefunction(n, iv.right).value) / peak;
        decreasing = decreasing && far < 1e-12;
    }
    return make(id, p, std::nullopt, fmt::format("endpoint_decay n={}", n), 0.0, innermost, innermost, 1.0,
                decreasing && innermost < 1.0);
}

std::vector<CheckRecord> verify_jacobi_or_oscillator(const std::string& id, const ParameterMap& params,
                                                     const VerifyOptions& options) {
    const SolvableSystem system = build_catalog_system(id, params);
    const Grid grid = standard_grid(id, params);
    std::vector<CheckRecord> out;
    const auto fd = fd_eigensolve(system.potential(), grid, options.levels);
    for (int n = 0; n < options.levels; ++n)
        out.push_back(eigen_check(id, params, grid, n, system.energy(n).total, fd[static_cast<std::size_t>(n)]));
    const Grid rgrid = residual_grid(system);
    for (int n = 0; n < options.levels; ++n) {
        const ResidualReport r = schrodinger_residual(system, n, rgrid);
        out.push_back(make(id, params, rgrid, fmt::format("schrodinger_residual n={}", n), 0.0, r.max_rel, r.max_rel,
                           kResidualTolerance, r.max_rel < kResidualTolerance));
    }
    const OrthogonalityReport ortho = orthogonality_matrix(system, 4);
    out.push_back(make(id, params, std::nullopt, "orthogonality n_max=4", 0.0, ortho.max_off_diagonal,
                       ortho.max_off_diagonal, kOrthogonalityTolerance,
                       ortho.max_off_diagonal < kOrthogonalityTolerance));
    for (int n = 0; n < options.levels; ++n) {
        const int nodes = count_nodes(system, n);
        out.push_back(make(id, params, std::nullopt, fmt::format("node_count n={}", n), n, nodes,
                           std::abs(nodes - n), 0.0, nodes == n));
    }
    out.push_back(endpoint_check(id, params, system, 0));
    if (options.grid_halve) {
        const Grid coarse{grid.left, grid.right, 1000};
        const ConvergenceStudy study = eigenvalue_convergence(system.potential(), coarse, 0, system.energy(0).total);
        out.push_back(make(id, params, coarse, "convergence_ratio n=0", 4.0, study.ratio,
                           std::abs(study.ratio - 4.0) / 4.0, 0.5, study.ratio >= 3.5 && study.ratio <= 4.5));
    }
    return out;
}

std::vector<CheckRecord> verify_inversely_linear(const ParameterMap& params, const VerifyOptions& options) {
    const std::string id = "inversely_linear_nonrel";
    std::vector<CheckRecord> out;
    for (int n = 0; n < options.levels; ++n) {
        const SolvableSystem system = build_catalog_system(id, params, n);
        ParameterMap p = params;
        p["n"] = n;
        const Grid rgrid = residual_grid(system);
        const ResidualReport r = schrodinger_residual(system, n, rgrid);
        out.push_back(make(id, p, rgrid, fmt::format("schrodinger_residual n={}", n), 0.0, r.max_rel, r.max_rel,
                           kResidualTolerance, r.max_rel < kResidualTolerance));
        // H_n(s) on s > 0 keeps only its positive zeros; the one at s = 0 sits on the wall.
        const int expected = n / 2;
        const int nodes = count_nodes(system, n);
        out.push_back(make(id, p, std::nullopt, fmt::format("node_count n={}", n), expected, nodes,
                           std::abs(nodes - expected), 0.0, nodes == expected));
        out.push_back(endpoint_check(id, p, system, n));
    }
    return out;
}

}  // namespace

nlohmann::json to_json(const CheckRecord& c) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    nlohmann::json grid = nullptr;
    if (c.grid) grid = {{"left", c.grid->left}, {"right", c.grid->right}, {"count", c.grid->count}};
    return {{"system", c.system},       {"params", params},   {"grid", grid},
            {"check", c.check},         {"closed_form", c.closed_form},
            {"oracle_value", c.oracle_value},
            {"abs_err", c.abs_err},     {"rel_err", c.rel_err}, {"tolerance", c.tolerance},
            {"pass", c.pass}};
}

Grid standard_grid(const std::string& id, const ParameterMap& params) {
    ParameterMap p = default_parameters(id);
    for (const auto& [k, v] : params) p[k] = v;
    if (id == "poschl_teller" || id == "poschl_teller_alt") {
        const double a = p.at("a");
        const double delta = 1e-4 / a;
        return {delta, std::numbers::pi / a - delta, 6000};
    }
    if (id == "radial_oscillator") {
        const double len = 1.0 / std::sqrt(p.at("w"));
        return {0.0, 12.0 * len, 6000};
    }
    throw ParameterDomainError(fmt::format("no finite-difference grid is defined for '{}'", id));
}

ConvergenceStudy eigenvalue_convergence(const PotentialExpr& potential, const Grid& coarse, int index,
                                        double exact) {
    const Grid fine{coarse.left, coarse.right, 2 * coarse.count + 1};
    const double ec = fd_eigensolve(potential, coarse, index + 1)[static_cast<std::size_t>(index)] - exact;
    const double ef = fd_eigensolve(potential, fine, index + 1)[static_cast<std::size_t>(index)] - exact;
    return {ec, ef, ec / ef};
}

std::vector<CheckRecord> verify_system(const std::string& id, const ParameterMap& params,
                                       const VerifyOptions& options) {
    catalog_entry(id);
    if (id == "inversely_linear_nonrel") return verify_inversely_linear(params, options);
    return verify_jacobi_or_oscillator(id, params, options);
}

std::vector<CheckRecord> verify_kg(double m, double B, int sign, int n_max) {
    const KGPotential pot = KGPotential::from_B(B, sign, m);
    const ParameterMap p{{"m", m}, {"B", B}, {"A", pot.A()}};
    std::vector<CheckRecord> out;
    for (int n = 0; n <= n_max; ++n) {
        ParameterMap pn = p;
        pn["n"] = n;
        const KGLevel level = kg_spectrum(pot, n);
        const double q = std::abs(kg_quantization_residual(pot, n, level.epsilon)) / (m * m);
        out.push_back(make("kg_inversely_linear", pn, std::nullopt, fmt::format("kg_quantization n={}", n), 0.0, q, q,
                           1e-12, q < 1e-12 && std::abs(level.epsilon) < m));
        const SolvableSystem nonrel = kg_nonrel_system(level);
        const double e_nonrel = nonrel.energy(n).total;
        const double e_rel = level.epsilon * level.epsilon - m * m;
        const double consistency = std::abs(e_rel - e_nonrel) / (m * m);
        out.push_back(make("kg_inversely_linear", pn, std::nullopt, fmt::format("kg_consistency n={}", n), e_rel,
                           e_nonrel, consistency, 1e-12, consistency < 1e-12));
        const Grid g{0.01 / level.a, 30.0 / level.a, kResidualNodes};
        const double res = kg_equation_residual(level, pot, g);
        out.push_back(make("kg_inversely_linear", pn, g, fmt::format("kg_equation_residual n={}", n), 0.0, res, res,
                           kResidualTolerance, res < kResidualTolerance));
    }
    return out;
}

std::vector<CheckRecord> verify_oracle_self_test() {
    const PotentialExpr box(Interval{0.0, std::numbers::pi});
    const Grid grid{0.0, std::numbers::pi, 4000};
    const ParameterMap none;
    std::vector<CheckRecord> out;
    const auto ev = fd_eigensolve(box, grid, 3);
    for (int n = 0; n < 3; ++n) {
        const double exact = (n + 1.0) * (n + 1.0);
        out.push_back(eigen_check("box", none, grid, n, exact, ev[static_cast<std::size_t>(n)]));
    }
    const Grid coarse{0.0, std::numbers::pi, 500};
    const ConvergenceStudy study = eigenvalue_convergence(box, coarse, 2, 9.0);
    out.push_back(make("box", none, coarse, "convergence_ratio n=2", 4.0, study.ratio, std::abs(study.ratio - 4.0) / 4.0,
                       0.5, study.ratio >= 3.5 && study.ratio <= 4.5));
    return out;
}

std::vector<CheckRecord> verify_all(const VerifyOptions& options, Execution execution) {
    using Task = std::function<std::vector<CheckRecord>()>;
    const std::vector<Task> tasks = {
        [&] { return verify_system("poschl_teller", default_parameters("poschl_teller"), options); },
        [&] { return verify_system("poschl_teller", {{"alpha", 2.0}, {"beta", 1.0}, {"a", 1.0}}, options); },
        [&] { return verify_system("poschl_teller_alt", default_parameters("poschl_teller_alt"), options); },
        [&] { return verify_system("radial_oscillator", default_parameters("radial_oscillator"), options); },
        [&] { return verify_system("radial_oscillator", {{"ell", 1.0}, {"w", 2.0}}, options); },
        [&] { return verify_system("inversely_linear_nonrel", default_parameters("inversely_linear_nonrel"), options); },
        [&] { return verify_kg(1.0, 0.0, 1, 3); },
        [&] { return verify_oracle_self_test(); },
    };
    std::vector<std::vector<CheckRecord>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    auto run = [&](std::size_t i) {
        try {
            results[i] = tasks[i]();
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    const auto count = static_cast<long>(tasks.size());
    if (execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < count; ++i) run(static_cast<std::size_t>(i));
    } else {
        for (long i = 0; i < count; ++i) run(static_cast<std::size_t>(i));
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<CheckRecord> out;
    for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
    return out;
}

}  // namespace nuforge
