#include <cmath>
#include <numbers>

#include <doctest.h>

#include "nuforge/errors.hpp"
#include "nuforge/system.hpp"

using namespace nuforge;

TEST_SUITE("system") {

TEST_CASE("potential expressions collect terms") {
    PotentialExpr v(Interval{0.0, 1.0});
    v.add(2.0, Basis::InvR2).add(-1.0, Basis::InvR).add(3.0, Basis::InvR2).add(0.0, Basis::RSquared);
    CHECK(v.terms().size() == 2);
    CHECK(v.coefficient(Basis::InvR2) == 5.0);
    CHECK(v(0.5) == doctest::Approx(5.0 / 0.25 - 2.0));
    CHECK_THROWS_AS(PotentialExpr().add(1.0, Basis::CscSq, 0.0), ParameterDomainError);
}

TEST_CASE("potential products stay in the grammar") {
    PotentialExpr inv;
    inv.add(2.0, Basis::InvR);
    const PotentialExpr sq = inv * inv;
    CHECK(sq.coefficient(Basis::InvR2) == 4.0);
    PotentialExpr r2;
    r2.add(1.0, Basis::RSquared);
    CHECK_THROWS_AS(r2 * r2, DecompositionError);
    CHECK((inv - inv).empty());
}

TEST_CASE("fit recovers a known expansion") {
    const Transformation t = Transformation::quadratic(1.0);
    const auto split = fit_to_grammar([](double r) { return 3.0 / (r * r) - 0.5 * r * r + 2.0; }, t);
    CHECK(split.energy == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(split.potential.coefficient(Basis::InvR2) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(split.potential.coefficient(Basis::RSquared) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(split.potential.coefficient(Basis::InvR) == 0.0);
}

TEST_CASE("fit rejects functions outside the grammar") {
    CHECK_THROWS_AS(fit_to_grammar([](double r) { return std::exp(-r); }, Transformation::quadratic(1.0)),
                    DecompositionError);
}

TEST_CASE("polynomial-part decompositions") {
    const double a = 1.3;
    SUBCASE("Jacobi: V_F = 0") {
        const auto d = hypergeometric_data(PolynomialFamily::jacobi(1.2, 0.7), 3);
        const auto s = decompose_polynomial_part(d, Transformation::cosine(a));
        CHECK(s.potential.empty());
        CHECK(s.energy == doctest::Approx(a * a * 3 * (3 + 1.2 + 0.7 + 1)).epsilon(1e-12));
    }
    SUBCASE("Laguerre: V_F = alpha^2 / r^2") {
        const auto d = hypergeometric_data(PolynomialFamily::laguerre(1.5), 2);
        const auto s = decompose_polynomial_part(d, Transformation::quadratic(a));
        CHECK(s.potential.coefficient(Basis::InvR2) == doctest::Approx(2.25).epsilon(1e-12));
        CHECK(s.energy == doctest::Approx(a * a * (2 + 0.75 + 1)).epsilon(1e-12));
    }
    SUBCASE("Hermite: V_F = -a(2n+1)/(2r)") {
        const auto d = hypergeometric_data(PolynomialFamily::hermite(), 2);
        const auto s = decompose_polynomial_part(d, Transformation::sqrt_map(a));
        CHECK(s.potential.coefficient(Basis::InvR) == doctest::Approx(-a * 2.5).epsilon(1e-12));
        CHECK(s.energy == doctest::Approx(-a * a).epsilon(1e-12));
    }
}

TEST_CASE("factor-part decompositions") {
    const double a = 0.9;
    SUBCASE("Jacobi") {
        const double al = 1.4, be = 0.6;
        const auto f = build_factor_f(hypergeometric_data(PolynomialFamily::jacobi(al, be), 0), Transformation::cosine(a));
        const auto s = decompose_factor_part(f);
        const double csc2 = a * a / 4 * ((al - be) * (al - be) + (al + be) * (al + be) - 1);
        CHECK(s.potential.coefficient(Basis::CscSq, a) == doctest::Approx(csc2).epsilon(1e-10));
        CHECK(s.potential.coefficient(Basis::CscCot, a) == doctest::Approx(a * a / 2 * (al * al - be * be)).epsilon(1e-10));
        CHECK(s.energy == doctest::Approx(a * a / 4 * (al + be + 1) * (al + be + 1)).epsilon(1e-10));
    }
    SUBCASE("symmetric Jacobi has no csc cot term") {
        const auto f = build_factor_f(hypergeometric_data(PolynomialFamily::jacobi(1.0, 1.0), 0), Transformation::cosine(a));
        CHECK(decompose_factor_part(f).potential.coefficient(Basis::CscCot, a) == 0.0);
    }
    SUBCASE("Laguerre") {
        const auto f = build_factor_f(hypergeometric_data(PolynomialFamily::laguerre(1.0), 0), Transformation::quadratic(a));
        const auto s = decompose_factor_part(f);
        CHECK(s.potential.coefficient(Basis::RSquared) == doctest::Approx(std::pow(a, 4) / 16).epsilon(1e-10));
        CHECK(s.potential.coefficient(Basis::InvR2) == doctest::Approx(-0.25).epsilon(1e-10));
        CHECK(s.energy == doctest::Approx(-a * a / 2).epsilon(1e-10));
    }
    SUBCASE("Hermite") {
        const auto f = build_factor_f(hypergeometric_data(PolynomialFamily::hermite(), 0), Transformation::sqrt_map(a));
        const auto s = decompose_factor_part(f);
        CHECK(s.potential.coefficient(Basis::InvR2) == doctest::Approx(-3.0 / 16).epsilon(1e-10));
        CHECK(s.energy == 0.0);
    }
}

TEST_CASE("assembled Jacobi system") {
    const auto sys = assemble_system(PolynomialFamily::jacobi(1.0, 1.0), {0, 6}, Transformation::cosine(1.0));
    for (int n = 0; n <= 6; ++n) CHECK(sys.energy(n).total == doctest::Approx((n + 1.5) * (n + 1.5)).epsilon(1e-10));
    CHECK(sys.wavefunction(0, std::numbers::pi / 2).first == doctest::Approx(0.0).scale(1.0));
    CHECK_THROWS_AS(sys.wavefunction(0, 0.0), DomainError);
    CHECK_THROWS_AS(sys.wavefunction(0, 4.0), DomainError);
    CHECK_FALSE(sys.fixed_level().has_value());
}

TEST_CASE("wavefunction second derivative agrees with finite differences") {
    const auto sys = assemble_system(PolynomialFamily::laguerre(0.5), {0, 4}, Transformation::quadratic(std::sqrt(2.0)));
    for (int n = 0; n <= 4; ++n)
        for (double r : {0.4, 1.1, 2.3}) {
            const double h = 1e-4;
            const double fd = (sys.wavefunction(n, r + h).value - 2 * sys.wavefunction(n, r).value +
                               sys.wavefunction(n, r - h).value) / (h * h);
            CHECK(sys.wavefunction(n, r).second == doctest::Approx(fd).epsilon(1e-5).scale(1.0));
        }
}

TEST_CASE("Schrodinger identity holds pointwise") {
    const auto sys = assemble_system(PolynomialFamily::jacobi(2.0, 0.8), {0, 6}, Transformation::cosine(1.7));
    for (int n = 0; n <= 6; ++n)
        for (double r = 0.1; r < std::numbers::pi / 1.7; r += 0.15) {
            const Jet psi = sys.wavefunction(n, r);
            const double res = -psi.second + sys.potential()(r) * psi.value - sys.energy(n).total * psi.value;
            const double scale = (1 + std::abs(sys.energy(n).total)) *
                                 (std::abs(psi.value) + std::abs(psi.first) / 1.7 + 1e-300);
            CHECK(std::abs(res) / scale < 1e-8);
        }
}

TEST_CASE("n-dependent potential allows a single level only") {
    const auto f = PolynomialFamily::hermite();
    CHECK_THROWS_AS(assemble_system(f, {0, 2}, Transformation::sqrt_map(1.0)), DecompositionError);
    const auto sys = assemble_system(f, {3, 3}, Transformation::sqrt_map(1.0));
    REQUIRE(sys.fixed_level().has_value());
    CHECK(*sys.fixed_level() == 3);
    CHECK(sys.admits(3));
    CHECK_FALSE(sys.admits(2));
    CHECK(sys.energy(3).total == doctest::Approx(-1.0).epsilon(1e-10));
}

}
