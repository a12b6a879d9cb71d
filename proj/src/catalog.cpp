#include "nuforge/catalog.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "nuforge/errors.hpp"

namespace nuforge {

namespace {

void require_positive(const char* name, double v) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw AdmissibilityError(fmt::format("{} must be positive and finite, got {}", name, v));
}

void require_jacobi_well(double alpha, double beta) {
    if (!(alpha > 0.5) || !(beta > 0.5) || !std::isfinite(alpha) || !std::isfinite(beta))
        throw AdmissibilityError(fmt::format(
            "bound states need alpha > 1/2 and beta > 1/2 (got alpha = {}, beta = {})", alpha, beta));
}

// The engine's decomposed spectrum must reproduce the closed form installed
// on the system; anything else is a construction bug.
void cross_check(const SolvableSystem& engine, const SolvableSystem::EnergyFn& closed, int lo, int hi) {
    for (int n = lo; n <= hi; ++n) {
        const EnergyLevel a = engine.energy(n);
        const EnergyLevel b = closed(n);
        const double scale = 1.0 + std::abs(b.total) + std::abs(b.polynomial_part) + std::abs(b.factor_part);
        if (std::abs(a.total - b.total) > 1e-9 * scale ||
            std::abs(a.polynomial_part - b.polynomial_part) > 1e-9 * scale)
            throw std::logic_error(fmt::format("{}: decomposed E_{} = {} disagrees with closed form {}", engine.name(),
                                               n, a.total, b.total));
    }
}

double param(const ParameterMap& p, const std::string& id, const char* name) {
    const auto it = p.find(name);
    if (it != p.end()) return it->second;
    const ParameterMap defaults = default_parameters(id);
    return defaults.at(name);
}

int integer_param(const ParameterMap& p, const std::string& id, const char* name) {
    const double v = param(p, id, name);
    if (v < 0.0 || v != std::floor(v) || v > 1e6)
        throw AdmissibilityError(fmt::format("{} must be a non-negative integer, got {}", name, v));
    return static_cast<int>(v);
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"poschl_teller", "trigonometric Poschl-Teller well on (0, pi/a)",
         "Jacobi P_n^(alpha,beta)(s), s = cos(a r)",
         {{"alpha", "> 1/2"}, {"beta", "> 1/2"}, {"a", "> 0"}}},
        {"poschl_teller_alt", "same well, weighted Jacobi function, alternate energy split",
         "(1-s)^alpha (1+s)^beta P_n^(alpha,beta)(s), s = cos(a r)",
         {{"alpha", "> 1/2"}, {"beta", "> 1/2"}, {"a", "> 0"}}},
        {"radial_oscillator", "3-D radial harmonic oscillator, hbar = 2m = 1",
         "Laguerre L_n^(l+1/2)(s), s = w r^2 / 2",
         {{"ell", "integer >= 0"}, {"w", "> 0"}}},
        {"inversely_linear_nonrel", "n-dependent -1/r - 3/(16 r^2) potential, one level per system",
         "Hermite e^(-s^2/2) H_n(s), s = sqrt(2 a r)",
         {{"a", "> 0"}, {"n", "integer >= 0"}}},
    };
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& id) {
    for (const auto& e : catalog_entries())
        if (e.id == id) return e;
    throw ParameterDomainError(fmt::format("unknown catalog system '{}'", id));
}

SolvableSystem poschl_teller(double alpha, double beta, double a) {
    require_positive("a", a);
    require_jacobi_well(alpha, beta);
    const auto family = PolynomialFamily::jacobi(alpha, beta);
    const auto engine = assemble_system(family, {0, 2}, solve_transformation_constraint(family, a * a));
    SolvableSystem::EnergyFn closed = [=](int n) {
        const double k = n;
        const double ef = a * a * k * (k + alpha + beta + 1.0);
        const double ff = a * a / 4.0 * (alpha + beta + 1.0) * (alpha + beta + 1.0);
        return EnergyLevel{ef + ff, ef, ff};
    };
    cross_check(engine, closed, 0, 2);
    return engine.with_energy(std::move(closed), "a^2 n(n+alpha+beta+1) + a^2 (alpha+beta+1)^2 / 4",
                              fmt::format("poschl_teller(alpha={}, beta={}, a={})", alpha, beta, a));
}

SolvableSystem poschl_teller_alt(double alpha, double beta, double a) {
    require_positive("a", a);
    require_jacobi_well(alpha, beta);
    if (!(alpha + beta > 0.0)) throw AdmissibilityError("alpha + beta must be positive");
    const auto family = PolynomialFamily::jacobi(alpha, beta);
    const auto engine = assemble_system(family, {0, 2}, solve_transformation_constraint(family, a * a),
                                        JacobiWeighting::Weighted);
    SolvableSystem::EnergyFn closed = [=](int n) {
        const double k = n;
        const double ef = a * a * (k + 1.0) * (k + alpha + beta);
        const double ff = a * a / 4.0 * (alpha + beta - 1.0) * (alpha + beta - 1.0);
        return EnergyLevel{ef + ff, ef, ff};
    };
    cross_check(engine, closed, 0, 2);
    return engine.with_energy(std::move(closed), "a^2 (n+1)(n+alpha+beta) + a^2 (alpha+beta-1)^2 / 4",
                              fmt::format("poschl_teller_alt(alpha={}, beta={}, a={})", alpha, beta, a));
}

SolvableSystem radial_oscillator(int ell, double w) {
    if (ell < 0) throw AdmissibilityError(fmt::format("ell must be >= 0, got {}", ell));
    require_positive("w", w);
    const double alpha = ell + 0.5;
    const double a2 = 2.0 * w;
    const auto family = PolynomialFamily::laguerre(alpha);
    const auto engine = assemble_system(family, {0, 2}, solve_transformation_constraint(family, a2));
    SolvableSystem::EnergyFn closed = [=](int n) {
        const double ef = a2 * (n + alpha / 2.0 + 1.0);
        const double ff = -a2 / 2.0;
        return EnergyLevel{ef + ff, ef, ff};
    };
    cross_check(engine, closed, 0, 2);
    return engine.with_energy(std::move(closed), "w (2n + l + 3/2)",
                              fmt::format("radial_oscillator(ell={}, w={})", ell, w));
}

SolvableSystem inversely_linear_nonrel(double a, int n) {
    require_positive("a", a);
    if (n < 0) throw AdmissibilityError(fmt::format("n must be >= 0, got {}", n));
    const auto family = PolynomialFamily::hermite();
    const auto engine = assemble_system(family, {n, n}, solve_transformation_constraint(family, a * a));
    SolvableSystem::EnergyFn closed = [=](int) { return EnergyLevel{-a * a, -a * a, 0.0}; };
    cross_check(engine, closed, n, n);
    return engine.with_energy(std::move(closed), "-a^2",
                              fmt::format("inversely_linear_nonrel(a={}, n={})", a, n));
}

ParameterMap default_parameters(const std::string& id) {
    if (id == "poschl_teller" || id == "poschl_teller_alt") return {{"alpha", 1.0}, {"beta", 1.0}, {"a", 1.0}};
    if (id == "radial_oscillator") return {{"ell", 0.0}, {"w", 1.0}};
    if (id == "inversely_linear_nonrel") return {{"a", 1.0}, {"n", 0.0}};
    throw ParameterDomainError(fmt::format("unknown catalog system '{}'", id));
}

SolvableSystem build_catalog_system(const std::string& id, const ParameterMap& params, int level) {
    if (id == "poschl_teller")
        return poschl_teller(param(params, id, "alpha"), param(params, id, "beta"), param(params, id, "a"));
    if (id == "poschl_teller_alt")
        return poschl_teller_alt(param(params, id, "alpha"), param(params, id, "beta"), param(params, id, "a"));
    if (id == "radial_oscillator") return radial_oscillator(integer_param(params, id, "ell"), param(params, id, "w"));
    if (id == "inversely_linear_nonrel") return inversely_linear_nonrel(param(params, id, "a"), level);
    throw ParameterDomainError(fmt::format("unknown catalog system '{}'", id));
}

}  // namespace nuforge
