// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "nuforge/catalog.hpp"
#include "nuforge/kg.hpp"
#include "nuforge/oracle.hpp"
#include "nuforge/orthopoly.hpp"
#include "nuforge/verify.hpp"

using namespace nuforge;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

Outcome poschl_teller_spectrum() {
    Outcome o;
    const auto t0 = Clock::now();
    const auto sys = poschl_teller(1.0, 1.0, 1.0);
    const std::vector<double> expected{2.25, 6.25, 12.25};
    const auto fd = fd_eigensolve(sys.potential(), Grid{1e-4, std::numbers::pi - 1e-4, 6000}, 3);
    double worst = 0.0;
    for (int n = 0; n < 3; ++n) {
        o.require(sys.energy(n).total == expected[n], fmt::format("E_{} = {}", n, sys.energy(n).total));
        worst = std::max(worst, std::abs(fd[n] / expected[n] - 1.0));
    }
    const double elapsed = seconds_since(t0);
    o.require(worst < 1e-3, fmt::format("max rel err {:.3g}", worst));
    o.require(elapsed < 5.0, fmt::format("took {:.2f} s", elapsed));
    if (o.pass) o.detail = fmt::format("E = [2.25, 6.25, 12.25], FD max rel err {:.2e}, {:.2f} s", worst, elapsed);
    return o;
}

Outcome variant_equivalence() {
    Outcome o;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> par(0.5 + 1e-6, 5.0);
    std::uniform_real_distribution<double> scale(0.1, 4.0);
    double worst_e = 0.0, worst_ratio = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const double al = par(rng), be = par(rng), a = scale(rng);
        const auto p = poschl_teller(al, be, a);
        const auto q = poschl_teller_alt(al, be, a);
        const double width = std::numbers::pi / a;
        for (int n = 0; n <= 8; ++n) {
            worst_e = std::max(worst_e, std::abs(p.energy(n).total - q.energy(n).total));
            // Ratio spread over 50 points, skipping the neighbourhood of nodes.
            double lo = INFINITY, hi = -INFINITY;
            double peak = 0.0;
            std::vector<std::pair<double, double>> samples;
            for (int i = 1; i <= 50; ++i) {
                const double r = width * i / 51.0;
                const double pv = p.wavefunction(n, r).value;
                samples.emplace_back(pv, q.wavefunction(n, r).value);
                peak = std::max(peak, std::abs(pv));
            }
            for (const auto& [pv, qv] : samples) {
                if (std::abs(pv) < 1e-6 * peak) continue;
                lo = std::min(lo, qv / pv);
                hi = std::max(hi, qv / pv);
            }
            worst_ratio = std::max(worst_ratio, (hi - lo) / std::abs(hi));
        }
    }
    o.require(worst_e < 1e-12 || worst_e == 0.0, fmt::format("max |dE| {:.3g}", worst_e));
    o.require(worst_ratio < 1e-9, fmt::format("max ratio spread {:.3g}", worst_ratio));
    if (o.pass) o.detail = fmt::format("50 draws, n <= 8: max |dE| {:.2e}, ratio spread {:.2e}", worst_e, worst_ratio);
    return o;
}

Outcome oscillator() {
    Outcome o;
    double worst_fd = 0.0, worst_res = 0.0;
    for (int ell : {0, 1, 2})
        for (double w : {0.5, 1.0, 2.0}) {
            const auto sys = radial_oscillator(ell, w);
            const ParameterMap params{{"ell", double(ell)}, {"w", w}};
            const auto fd = fd_eigensolve(sys.potential(), standard_grid("radial_oscillator", params), 4);
            const double len = 1.0 / std::sqrt(w);
            const Grid rgrid{0.05 * len, 8.0 * len, 100};
            for (int n = 0; n <= 3; ++n) {
                const double exact = w * (2 * n + ell + 1.5);
                o.require(std::abs(sys.energy(n).total - exact) < 1e-13 * exact,
                          fmt::format("closed form l={} w={} n={}", ell, w, n));
                worst_fd = std::max(worst_fd, std::abs(fd[n] / exact - 1.0));
                worst_res = std::max(worst_res, schrodinger_residual(sys, n, rgrid).max_rel);
            }
        }
    o.require(worst_fd < 1e-3, fmt::format("FD max rel err {:.3g}", worst_fd));
    o.require(worst_res < 1e-8, fmt::format("residual max_rel {:.3g}", worst_res));
    if (o.pass) o.detail = fmt::format("9 parameter sets, n <= 3: FD rel err {:.2e}, residual {:.2e}", worst_fd, worst_res);
    return o;
}

Outcome original_method_failure() {
    Outcome o;
    int disagreements = 0, cases = 0;
    for (double al : {0.75, 1.0, 2.0, 3.5})
        for (double be : {0.75, 1.0, 1.5, 2.5}) {
            const auto f = PolynomialFamily::jacobi(al, be);
            for (int n = 0; n <= 10; ++n) {
                const auto eq = classical_equation(f, n);
                o.require(std::abs(lambda_n(eq.sigma, eq.tau, n) - n * (n + al + be + 1)) < 1e-13 * (1 + n * n),
                          fmt::format("plain Jacobi lambda_n alpha={} beta={} n={}", al, be, n));
                if (al + be > 2 && n >= 1) {
                    const auto d = hypergeometric_data(f, n, JacobiWeighting::Weighted);
                    ++cases;
                    if (std::abs(lambda_n(d.sigma, d.tau_tilde, n) - (n + 1) * (n + al + be)) > 1e-6) ++disagreements;
                }
            }
        }
    o.require(cases > 0 && disagreements == cases, fmt::format("{} of {} weighted cases disagree", disagreements, cases));
    if (o.pass) o.detail = fmt::format("plain Jacobi agrees; weighted Jacobi disagrees in {}/{} cases", disagreements, cases);
    return o;
}

Outcome klein_gordon() {
    Outcome o;
    const auto p0 = KGPotential::from_B(0.0, +1, 1.0);
    const KGLevel g = kg_spectrum(p0, 0);
    o.require(std::abs(g.epsilon - 0.5) < 1e-12, fmt::format("ground state eps = {}", g.epsilon));
    o.require(std::abs(kg_quantization_residual(p0, 0, g.epsilon)) < 1e-12, "ground state residual");
    double worst_q = 0.0, worst_eq = 0.0;
    int levels = 0;
    for (double B : {0.0, 0.25, 1.0}) {
        const auto p = KGPotential::from_B(B, +1, 1.0);
        for (int n = 0; n <= 5; ++n)
            for (const auto& l : kg_admissible_levels(p, n)) {
                ++levels;
                o.require(std::abs(l.epsilon) < 1.0, fmt::format("|eps| >= m at B={} n={}", B, n));
                worst_q = std::max(worst_q, std::abs(kg_quantization_residual(p, n, l.epsilon)));
                worst_eq = std::max(worst_eq, kg_equation_residual(l, p, Grid{0.01 / l.a, 30.0 / l.a, 100}));
            }
    }
    o.require(levels >= 18, fmt::format("only {} levels", levels));
    o.require(worst_q < 1e-12, fmt::format("quantization residual {:.3g}", worst_q));
    o.require(worst_eq < 1e-8, fmt::format("equation residual {:.3g}", worst_eq));
    if (o.pass)
        o.detail = fmt::format("eps_0 = 0.5; {} levels, quantization {:.2e}, equation {:.2e}", levels, worst_q, worst_eq);
    return o;
}

Outcome oracle_convergence() {
    Outcome o;
    const PotentialExpr box(Interval{0.0, std::numbers::pi});
    const auto ev = fd_eigensolve(box, Grid{0.0, std::numbers::pi, 4000}, 3);
    double worst = 0.0;
    for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(ev[k] / ((k + 1.0) * (k + 1.0)) - 1.0));
    o.require(worst < 1e-3, fmt::format("box rel err {:.3g}", worst));
    std::string ratios;
    for (int k = 0; k < 3; ++k) {
        const auto study = eigenvalue_convergence(box, Grid{0.0, std::numbers::pi, 500}, k, (k + 1.0) * (k + 1.0));
        o.require(study.ratio >= 3.5 && study.ratio <= 4.5, fmt::format("ratio {:.3f} for k={}", study.ratio, k));
        ratios += fmt::format("{}{:.4f}", ratios.empty() ? "" : ", ", study.ratio);
    }
    if (o.pass) o.detail = fmt::format("box [1,4,9] rel err {:.2e}; halving ratios [{}]", worst, ratios);
    return o;
}

Outcome property_suites() {
    Outcome o;
    const auto t0 = Clock::now();
    const std::vector<PolynomialFamily> families{PolynomialFamily::jacobi(1.0, 1.0), PolynomialFamily::jacobi(2.5, 0.6),
                                                 PolynomialFamily::laguerre(0.5), PolynomialFamily::laguerre(2.0),
                                                 PolynomialFamily::hermite()};
    double worst_ode = 0.0, worst_rod = 0.0;
    for (const auto& f : families) {
        const std::vector<double> pts = f.kind() == FamilyKind::Jacobi     ? std::vector<double>{-0.9, -0.3, 0.2, 0.8}
                                        : f.kind() == FamilyKind::Laguerre ? std::vector<double>{0.1, 1.0, 3.0, 7.0}
                                                                           : std::vector<double>{-2.0, -0.5, 0.4, 1.8};
        for (int n = 0; n <= 12; ++n)
            for (double s : pts) {
                const Jet y = eval_poly_jet(f, n, s);
                const double scale = 1.0 + std::abs(y.value) + std::abs(y.first) + std::abs(y.second);
                worst_ode = std::max(worst_ode, std::abs(ode_residual(f, n, s)) / scale);
                if (n <= 8) {
                    const auto ref = rodrigues_expansion(f, n, s);
                    worst_rod = std::max(worst_rod, std::abs(y.value - ref.value) / std::max(1.0, ref.magnitude));
                }
            }
    }
    o.require(worst_ode < 1e-9, fmt::format("ODE residual {:.3g}", worst_ode));
    o.require(worst_rod < 1e-12, fmt::format("Rodrigues mismatch {:.3g}", worst_rod));

    double worst_orth = 0.0;
    for (const auto* id : {"poschl_teller", "poschl_teller_alt", "radial_oscillator"}) {
        const auto sys = build_catalog_system(id, default_parameters(id));
        worst_orth = std::max(worst_orth, orthogonality_matrix(sys, 5).max_off_diagonal);
        for (int n = 0; n <= 6; ++n)
            o.require(count_nodes(sys, n) == n, fmt::format("{} n={} has {} nodes", id, n, count_nodes(sys, n)));
    }
    o.require(worst_orth < 1e-8, fmt::format("orthogonality {:.3g}", worst_orth));
    const double elapsed = seconds_since(t0);
    o.require(elapsed < 60.0, fmt::format("took {:.1f} s", elapsed));
    if (o.pass)
        o.detail = fmt::format("ODE {:.2e}, Rodrigues {:.2e}, overlaps {:.2e}, nodes = n, {:.2f} s", worst_ode, worst_rod,
                               worst_orth, elapsed);
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"Poschl-Teller spectrum vs finite differences", poschl_teller_spectrum},
        {"plain and weighted Jacobi constructions coincide", variant_equivalence},
        {"radial oscillator spectrum and residuals", oscillator},
        {"hypergeometric eigenvalue rule: agreement and documented failure", original_method_failure},
        {"Klein-Gordon levels", klein_gordon},
        {"finite-difference oracle converges at second order", oracle_convergence},
        {"polynomial, orthogonality and node-count properties", property_suites},
    };
    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %d. %s: %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
