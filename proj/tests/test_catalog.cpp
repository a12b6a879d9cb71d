#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "nuforge/catalog.hpp"
#include "nuforge/errors.hpp"
#include "nuforge/oracle.hpp"

using namespace nuforge;

TEST_SUITE("catalog") {

TEST_CASE("four entries with schemas") {
    const auto& entries = catalog_entries();
    REQUIRE(entries.size() == 4);
    CHECK(entries[0].id == "poschl_teller");
    CHECK(catalog_entry("radial_oscillator").parameters.size() == 2);
    CHECK_THROWS_AS(catalog_entry("morse"), ParameterDomainError);
}

TEST_CASE("Poschl-Teller potential and spectrum") {
    const auto sys = poschl_teller(1.0, 1.0, 1.0);
    CHECK(sys.potential().coefficient(Basis::CscSq, 1.0) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(sys.potential().coefficient(Basis::CscCot, 1.0) == 0.0);
    CHECK(sys.potential().constant_term() == 0.0);
    CHECK(sys.energy(0).total == 2.25);
    CHECK(sys.energy(1).total == 6.25);
    CHECK(sys.energy(2).total == 12.25);
    CHECK(poschl_teller(2.0, 1.0, 1.0).energy(0).total == 4.0);
    CHECK(poschl_teller(2.0, 1.0, 1.0).potential().coefficient(Basis::CscCot, 1.0) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("admissibility") {
    CHECK_THROWS_AS(poschl_teller(0.5, 1.0, 1.0), AdmissibilityError);
    CHECK_THROWS_AS(poschl_teller(1.0, 0.1, 1.0), AdmissibilityError);
    CHECK_THROWS_AS(poschl_teller_alt(1.0, 1.0, 0.0), ParameterDomainError);
    CHECK_THROWS_AS(radial_oscillator(-1, 1.0), ParameterDomainError);
    CHECK_THROWS_AS(radial_oscillator(0, 0.0), ParameterDomainError);
    CHECK_THROWS_AS(inversely_linear_nonrel(-1.0, 0), ParameterDomainError);
    CHECK_THROWS_AS(build_catalog_system("radial_oscillator", {{"ell", 0.5}, {"w", 1.0}}), ParameterDomainError);
}

TEST_CASE("the two Jacobi constructions describe one system") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> par(0.55, 4.0);
    std::uniform_real_distribution<double> scale(0.3, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double al = par(rng), be = par(rng), a = scale(rng);
        const auto p = poschl_teller(al, be, a);
        const auto q = poschl_teller_alt(al, be, a);
        for (int n = 0; n <= 8; ++n) {
            CHECK(std::abs(p.energy(n).total - q.energy(n).total) <= 1e-12 * p.energy(n).total);
            CHECK(q.energy(n).polynomial_part == doctest::Approx(a * a * (n + 1) * (n + al + be)));
        }
        const double ref = q.wavefunction(3, 0.5 * std::numbers::pi / a).value / p.wavefunction(3, 0.5 * std::numbers::pi / a).value;
        for (int i = 1; i <= 50; ++i) {
            const double r = (i / 51.0) * std::numbers::pi / a;
            const double pv = p.wavefunction(3, r).value;
            if (std::abs(pv) < 1e-8) continue;
            CHECK(std::abs(q.wavefunction(3, r).value / pv - ref) <= 1e-9 * std::abs(ref));
        }
    }
}

TEST_CASE("oscillator spectrum") {
    for (int ell = 0; ell <= 4; ++ell)
        for (double w : {0.5, 1.0, 2.0}) {
            const auto sys = radial_oscillator(ell, w);
            CHECK(sys.potential().coefficient(Basis::RSquared) == doctest::Approx(w * w / 4).epsilon(1e-12));
            CHECK(sys.potential().coefficient(Basis::InvR2) == doctest::Approx(ell * (ell + 1.0)).epsilon(1e-12).scale(1.0));
            for (int n = 0; n <= 10; ++n) CHECK(std::abs(sys.energy(n).total - w * (2 * n + ell + 1.5)) < 1e-13 * (1 + n));
        }
    const auto osc = radial_oscillator(0, 1.0);
    CHECK(std::abs(osc.wavefunction(0, 1e-6).value) < 1e-5);
    CHECK(std::abs(osc.wavefunction(0, 1e-6).value) < std::abs(osc.wavefunction(0, 1e-4).value));
}

TEST_CASE("inversely linear family") {
    const auto sys = inversely_linear_nonrel(1.0, 0);
    CHECK(sys.potential().coefficient(Basis::InvR) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(sys.potential().coefficient(Basis::InvR2) == doctest::Approx(-3.0 / 16).epsilon(1e-12));
    CHECK(sys.energy(0).total == -1.0);
    const auto two = inversely_linear_nonrel(1.0, 2);
    const Grid one_point{0.6, 0.8, 16};
    CHECK(schrodinger_residual(two, 2, one_point).max_rel < 1e-8);
    CHECK(std::abs(sys.wavefunction(0, 200.0).value) < 1e-80);
}

TEST_CASE("spectra increase with n") {
    for (const auto& e : catalog_entries()) {
        if (e.id == "inversely_linear_nonrel") continue;
        const auto sys = build_catalog_system(e.id, default_parameters(e.id));
        for (int n = 0; n < 10; ++n) CHECK(sys.energy(n + 1).total > sys.energy(n).total);
    }
}

TEST_CASE("wavefunctions vanish at the walls") {
    for (const auto& e : catalog_entries()) {
        const int n = e.id == "inversely_linear_nonrel" ? 0 : 1;
        const auto sys = build_catalog_system(e.id, default_parameters(e.id), n);
        const Interval d = sys.domain();
        const double right = std::isfinite(d.right) ? d.right : 0.0;
        double prev_left = INFINITY, prev_right = INFINITY;
        for (double eps : {1e-2, 1e-3, 1e-4}) {
            const double l = std::abs(sys.wavefunction(n, d.left + eps).value);
            CHECK(l < prev_left);
            prev_left = l;
            if (std::isfinite(d.right)) {
                const double r = std::abs(sys.wavefunction(n, right - eps).value);
                CHECK(r < prev_right);
                prev_right = r;
            }
        }
    }
}

TEST_CASE("node counts equal n for the fixed-potential systems") {
    for (const auto* id : {"poschl_teller", "poschl_teller_alt", "radial_oscillator"}) {
        const auto sys = build_catalog_system(id, default_parameters(id));
        for (int n = 0; n <= 6; ++n) CHECK(count_nodes(sys, n) == n);
    }
}

TEST_CASE("half-line Hermite states keep only positive zeros") {
    for (int n = 0; n <= 6; ++n) CHECK(count_nodes(inversely_linear_nonrel(1.0, n), n) == n / 2);
}

}
