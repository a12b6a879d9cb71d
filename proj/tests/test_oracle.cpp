#include <cmath>
#include <numbers>

#include <doctest.h>

#include "nuforge/catalog.hpp"
#include "nuforge/errors.hpp"
#include "nuforge/oracle.hpp"
#include "nuforge/quadrature.hpp"
#include "nuforge/verify.hpp"

using namespace nuforge;

namespace {

PotentialExpr box() { return PotentialExpr(Interval{0.0, std::numbers::pi}); }

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("grid geometry") {
    const Grid g{0.0, 1.0, 99};
    CHECK(g.spacing() == doctest::Approx(0.01));
    CHECK(g.node(1) == doctest::Approx(0.01));
    CHECK(g.nodes().size() == 99);
    CHECK(g.nodes().back() == doctest::Approx(0.99));
    CHECK_THROWS_AS((Grid{0.0, 1.0, 8}.validate()), ParameterDomainError);
}

TEST_CASE("box eigenvalues") {
    const auto ev = fd_eigensolve(box(), Grid{0.0, std::numbers::pi, 4000}, 3);
    REQUIRE(ev.size() == 3);
    for (int k = 0; k < 3; ++k) CHECK(ev[k] == doctest::Approx((k + 1.0) * (k + 1.0)).epsilon(1e-3));
}

TEST_CASE("discrete box spectrum is reproduced to bisection width") {
    // Eigenvalues of the second-difference matrix are (4/h^2) sin^2(k pi / (2(N+1))).
    const Grid g{0.0, std::numbers::pi, 200};
    const double h = g.spacing();
    const auto ev = fd_eigensolve(box(), g, 10);
    for (int k = 1; k <= 10; ++k) {
        const double exact = 4.0 / (h * h) * std::pow(std::sin(k * std::numbers::pi / (2.0 * (g.count + 1))), 2);
        CHECK(std::abs(ev[k - 1] - exact) < 1e-9 * (1 + exact));
    }
}

TEST_CASE("second-order convergence") {
    const auto study = eigenvalue_convergence(box(), Grid{0.0, std::numbers::pi, 500}, 0, 1.0);
    CHECK(study.ratio > 3.5);
    CHECK(study.ratio < 4.5);
}

TEST_CASE("eigensolve preconditions") {
    CHECK_THROWS_AS(fd_eigensolve(box(), Grid{0.0, std::numbers::pi, 100}, 26), ParameterDomainError);
    PotentialExpr coulomb(Interval{0.0, 10.0});
    coulomb.add(-1.0, Basis::InvR);
    CHECK_THROWS_AS(fd_eigensolve(coulomb, Grid{-16.0, 1.0, 16}, 1), GridPlacementError);
}

TEST_CASE("Poschl-Teller on the reference grid") {
    const auto sys = poschl_teller(1.0, 1.0, 1.0);
    const auto ev = fd_eigensolve(sys.potential(), Grid{1e-4, std::numbers::pi - 1e-4, 6000}, 3);
    for (int n = 0; n < 3; ++n) CHECK(std::abs(ev[n] / sys.energy(n).total - 1.0) < 1e-3);
    const auto alt = poschl_teller(2.0, 1.0, 1.0);
    const auto ev2 = fd_eigensolve(alt.potential(), Grid{1e-4, std::numbers::pi - 1e-4, 6000}, 1);
    CHECK(std::abs(ev2[0] / 4.0 - 1.0) < 1e-4);
}

TEST_CASE("oscillator with l = 1, w = 2") {
    const double w = 2.0;
    const auto ev = fd_eigensolve(radial_oscillator(1, w).potential(), Grid{0.0, 12.0 / std::sqrt(w), 6000}, 1);
    CHECK(std::abs(ev[0] / 5.0 - 1.0) < 1e-4);
}

TEST_CASE("residual oracle detects a wrong energy") {
    const auto sys = radial_oscillator(0, 1.0);
    const Grid g{0.05, 8.0, 100};
    CHECK(schrodinger_residual(sys, 2, g).max_rel < 1e-8);
    CHECK(schrodinger_residual(sys, 2, g, sys.energy(2).total + 1e-3).max_rel > 1e-5);
}

TEST_CASE("serial and parallel oracles agree exactly") {
    const auto sys = poschl_teller(1.5, 0.8, 1.2);
    const Grid g{1e-3, std::numbers::pi / 1.2 - 1e-3, 2000};
    CHECK(fd_eigensolve(sys.potential(), g, 5, Execution::Serial) ==
          fd_eigensolve(sys.potential(), g, 5, Execution::Parallel));
    CHECK(schrodinger_residual(sys, 3, g, std::nullopt, Execution::Serial).max_abs ==
          schrodinger_residual(sys, 3, g, std::nullopt, Execution::Parallel).max_abs);
    CHECK(orthogonality_matrix(sys, 3, 2000, Execution::Serial).normalized ==
          orthogonality_matrix(sys, 3, 2000, Execution::Parallel).normalized);
}

TEST_CASE("orthogonality") {
    for (const auto* id : {"poschl_teller", "poschl_teller_alt", "radial_oscillator"}) {
        const auto sys = build_catalog_system(id, default_parameters(id));
        const auto rep = orthogonality_matrix(sys, 5);
        CHECK(rep.max_off_diagonal < 1e-8);
        CHECK(rep.at(2, 2) == doctest::Approx(1.0));
    }
}

TEST_CASE("oscillator tail truncation") {
    const auto sys = radial_oscillator(0, 1.0);
    const Interval iv = integration_interval(sys, 4);
    CHECK(iv.left == 0.0);
    CHECK(std::isfinite(iv.right));
    CHECK(std::abs(sys.wavefunction(4, iv.right).value) < 1e-12);
}

TEST_CASE("norm agrees with an independent quadrature") {
    const auto sys = poschl_teller(1.0, 1.0, 1.0);
    const double norm = wavefunction_norm(sys, 2);
    const auto rule = composite_gauss_legendre(0.0, std::numbers::pi, 37, 12);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double v = sys.wavefunction(2, rule.nodes[i]).value;
        sum += rule.weights[i] * v * v;
    }
    CHECK(norm == doctest::Approx(std::sqrt(sum)).epsilon(1e-10));
}

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
    const auto rule = gauss_legendre(10);
    double w = 0.0, x18 = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        w += rule.weights[i];
        x18 += rule.weights[i] * std::pow(rule.nodes[i], 18);
    }
    CHECK(w == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(x18 == doctest::Approx(2.0 / 19).epsilon(1e-14));
}

TEST_CASE("verification report") {
    const auto records = verify_all();
    CHECK(records.size() >= 12);
    for (const auto& r : records) CHECK_MESSAGE(r.pass, r.system << " " << r.check);
}

TEST_CASE("verification of a non-default oscillator") {
    for (const auto& r : verify_system("radial_oscillator", {{"ell", 2.0}, {"w", 0.5}}))
        if (r.check.starts_with("fd_eigenvalue")) CHECK(r.rel_err < 1e-3);
}

TEST_CASE("Poschl-Teller convergence study") {
    VerifyOptions opts;
    opts.grid_halve = true;
    bool seen = false;
    for (const auto& r : verify_system("poschl_teller", {{"alpha", 1.0}, {"beta", 1.0}, {"a", 1.0}}, opts))
        if (r.check.starts_with("convergence_ratio")) {
            seen = true;
            CHECK(r.oracle_value >= 3.5);
            CHECK(r.oracle_value <= 4.5);
        }
    CHECK(seen);
}

}
