#include "nuforge/orthopoly.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "nuforge/errors.hpp"

namespace nuforge {

namespace {

void require_degree(int n) {
    if (n < 0) throw ParameterDomainError(fmt::format("polynomial degree must be >= 0, got {}", n));
}

void require_finite(double s) {
    if (!std::isfinite(s)) throw ParameterDomainError("evaluation point must be finite");
}

// p_n = (A_n s + B_n) p_{n-1} - C_n p_{n-2}
struct RecurrenceStep {
    double a;
    double b;
    double c;
};

RecurrenceStep recurrence_step(const PolynomialFamily& family, int n) {
    const double k = n;
    switch (family.kind()) {
        case FamilyKind::Jacobi: {
            const double al = family.alpha();
            const double be = family.beta();
            if (n == 1) return {(al + be + 2.0) / 2.0, (al - be) / 2.0, 0.0};
            const double g = 2.0 * k + al + be;
            const double denom = 2.0 * k * (k + al + be) * (g - 2.0);
            return {(g - 1.0) * g * (g - 2.0) / denom, (g - 1.0) * (al * al - be * be) / denom,
                    2.0 * (k + al - 1.0) * (k + be - 1.0) * g / denom};
        }
        case FamilyKind::Laguerre: {
            const double al = family.alpha();
            return {-1.0 / k, (2.0 * k - 1.0 + al) / k, (k - 1.0 + al) / k};
        }
        case FamilyKind::Hermite:
            return {2.0, 0.0, 2.0 * (k - 1.0)};
    }
    return {0.0, 0.0, 0.0};
}

}  // namespace

PolynomialFamily PolynomialFamily::jacobi(double alpha, double beta) {
    if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) || !std::isfinite(beta))
        throw ParameterDomainError(
            fmt::format("Jacobi parameters must satisfy alpha, beta > -1 (got {}, {})", alpha, beta));
    return {FamilyKind::Jacobi, alpha, beta};
}

PolynomialFamily PolynomialFamily::laguerre(double alpha) {
    if (!(alpha > -1.0) || !std::isfinite(alpha))
        throw ParameterDomainError(fmt::format("Laguerre parameter must satisfy alpha > -1 (got {})", alpha));
    return {FamilyKind::Laguerre, alpha, 0.0};
}

PolynomialFamily PolynomialFamily::hermite() { return {FamilyKind::Hermite, 0.0, 0.0}; }

std::string PolynomialFamily::name() const {
    switch (kind_) {
        case FamilyKind::Jacobi: return fmt::format("Jacobi(alpha={}, beta={})", alpha_, beta_);
        case FamilyKind::Laguerre: return fmt::format("Laguerre(alpha={})", alpha_);
        case FamilyKind::Hermite: return "Hermite";
    }
    return {};
}

Jet eval_poly_jet(const PolynomialFamily& family, int n, double s) {
    require_degree(n);
    require_finite(s);
    Jet prev{};  // p_{-1} = 0
    Jet cur{1.0, 0.0, 0.0};
    for (int k = 1; k <= n; ++k) {
        const auto [a, b, c] = recurrence_step(family, k);
        const double lin = a * s + b;
        const Jet next{lin * cur.value - c * prev.value,
                       a * cur.value + lin * cur.first - c * prev.first,
                       2.0 * a * cur.first + lin * cur.second - c * prev.second};
        prev = cur;
        cur = next;
    }
    return cur;
}

double eval_poly(const PolynomialFamily& family, int n, double s) { return eval_poly_jet(family, n, s).value; }

double eval_poly_derivative(const PolynomialFamily& family, int n, double s, int order) {
    if (order != 1 && order != 2)
        throw UnsupportedOrderError(fmt::format("derivative order must be 1 or 2, got {}", order));
    const Jet j = eval_poly_jet(family, n, s);
    return order == 1 ? j.first : j.second;
}

Polynomial poly_coefficients(const PolynomialFamily& family, int n) {
    require_degree(n);
    Polynomial prev;
    Polynomial cur{1.0};
    for (int k = 1; k <= n; ++k) {
        const auto [a, b, c] = recurrence_step(family, k);
        Polynomial next = Polynomial{b, a} * cur - c * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

HypergeometricData hypergeometric_data(const PolynomialFamily& family, int n, JacobiWeighting weighting) {
    require_degree(n);
    HypergeometricData d;
    d.family = family;
    d.weighting = weighting;
    d.degree = n;
    const double al = family.alpha();
    const double be = family.beta();
    const double k = n;
    switch (family.kind()) {
        case FamilyKind::Jacobi: {
            d.sigma = Polynomial{1.0, 0.0, -1.0};
            double lam = 0.0;
            if (weighting == JacobiWeighting::Plain) {
                d.tau_tilde = Polynomial{be - al, -(al + be + 2.0)};
                lam = k * (k + al + be + 1.0);
            } else {
                // tau of the equation satisfied by rho * P_n: 2 sigma' - tau_plain.
                d.tau_tilde = Polynomial{al - be, al + be - 2.0};
                lam = (k + 1.0) * (k + al + be);
            }
            d.sigma_tilde = lam * d.sigma;
            d.lambda = lam;
            break;
        }
        case FamilyKind::Laguerre:
            d.sigma = Polynomial{0.0, 1.0};
            d.tau_tilde = Polynomial{1.0, 1.0};
            d.sigma_tilde = Polynomial{-al * al / 4.0, k + al / 2.0 + 1.0};
            break;
        case FamilyKind::Hermite:
            d.sigma = Polynomial{1.0};
            d.tau_tilde = Polynomial{};
            d.sigma_tilde = Polynomial{2.0 * k + 1.0, 0.0, -1.0};
            break;
    }
    return d;
}

ClassicalEquation classical_equation(const PolynomialFamily& family, int n) {
    require_degree(n);
    const double al = family.alpha();
    const double be = family.beta();
    const double k = n;
    switch (family.kind()) {
        case FamilyKind::Jacobi:
            return {Polynomial{1.0, 0.0, -1.0}, Polynomial{be - al, -(al + be + 2.0)}, k * (k + al + be + 1.0)};
        case FamilyKind::Laguerre:
            return {Polynomial{0.0, 1.0}, Polynomial{al + 1.0, -1.0}, k};
        case FamilyKind::Hermite:
            return {Polynomial{1.0}, Polynomial{0.0, -2.0}, 2.0 * k};
    }
    return {};
}

double lambda_n(const Polynomial& sigma, const Polynomial& tau, int n) {
    const double k = n;
    const double tau_prime = tau.coefficient(1);
    const double sigma_second = 2.0 * sigma.coefficient(2);
    return -k * tau_prime - k * (k - 1.0) / 2.0 * sigma_second;
}

double WeightFunction::operator()(double s) const {
    switch (family.kind()) {
        case FamilyKind::Jacobi: return std::pow(1.0 - s, family.alpha()) * std::pow(1.0 + s, family.beta());
        case FamilyKind::Laguerre: return std::pow(s, family.alpha()) * std::exp(-s);
        case FamilyKind::Hermite: return std::exp(-s * s);
    }
    return 0.0;
}

WeightFunction weight_function(const PolynomialFamily& family) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    switch (family.kind()) {
        case FamilyKind::Jacobi:
            return {family, fmt::format("(1-s)^{} (1+s)^{}", family.alpha(), family.beta()), -1.0, 1.0};
        case FamilyKind::Laguerre:
            return {family, fmt::format("s^{} exp(-s)", family.alpha()), 0.0, inf};
        case FamilyKind::Hermite:
            return {family, "exp(-s^2)", -inf, inf};
    }
    return {family, "", 0.0, 0.0};
}

SolutionPrefactor solution_prefactor(const HypergeometricData& data) {
    const auto& fam = data.family;
    std::string desc;
    switch (fam.kind()) {
        case FamilyKind::Jacobi:
            desc = data.weighting == JacobiWeighting::Plain
                       ? "1"
                       : fmt::format("(1-s)^{} (1+s)^{}", fam.alpha(), fam.beta());
            break;
        case FamilyKind::Laguerre: desc = fmt::format("s^{} exp(-s)", fam.alpha() / 2.0); break;
        case FamilyKind::Hermite: desc = "exp(-s^2/2)"; break;
    }
    return {fam, data.weighting, desc};
}

double SolutionPrefactor::log_value(double s) const {
    switch (family.kind()) {
        case FamilyKind::Jacobi:
            if (weighting == JacobiWeighting::Plain) return 0.0;
            return family.alpha() * std::log1p(-s) + family.beta() * std::log1p(s);
        case FamilyKind::Laguerre: return family.alpha() / 2.0 * std::log(s) - s;
        case FamilyKind::Hermite: return -s * s / 2.0;
    }
    return 0.0;
}

double SolutionPrefactor::log_first(double s) const {
    switch (family.kind()) {
        case FamilyKind::Jacobi:
            if (weighting == JacobiWeighting::Plain) return 0.0;
            return -family.alpha() / (1.0 - s) + family.beta() / (1.0 + s);
        case FamilyKind::Laguerre: return family.alpha() / (2.0 * s) - 1.0;
        case FamilyKind::Hermite: return -s;
    }
    return 0.0;
}

double SolutionPrefactor::log_second(double s) const {
    switch (family.kind()) {
        case FamilyKind::Jacobi:
            if (weighting == JacobiWeighting::Plain) return 0.0;
            return -family.alpha() / ((1.0 - s) * (1.0 - s)) - family.beta() / ((1.0 + s) * (1.0 + s));
        case FamilyKind::Laguerre: return -family.alpha() / (2.0 * s * s);
        case FamilyKind::Hermite: return -1.0;
    }
    return 0.0;
}

Jet eval_solution(const HypergeometricData& data, double s) {
    const SolutionPrefactor w = solution_prefactor(data);
    const Jet y = eval_poly_jet(data.family, data.degree, s);
    const double wv = std::exp(w.log_value(s));
    const double l1 = w.log_first(s);
    const double l2 = w.log_second(s);
    return {wv * y.value, wv * (l1 * y.value + y.first),
            wv * ((l2 + l1 * l1) * y.value + 2.0 * l1 * y.first + y.second)};
}

double hypergeometric_residual(const HypergeometricData& data, double s) {
    const Jet f = eval_solution(data, s);
    const double sg = data.sigma(s);
    return sg * sg * f.second + sg * data.tau_tilde(s) * f.first + data.sigma_tilde(s) * f.value;
}

double ode_residual(const PolynomialFamily& family, int n, double s) {
    const ClassicalEquation eq = classical_equation(family, n);
    const Jet y = eval_poly_jet(family, n, s);
    return eq.sigma(s) * y.second + eq.tau(s) * y.first + eq.lambda * y.value;
}

namespace {

long double falling(long double x, int k) {
    long double out = 1.0L;
    for (int i = 0; i < k; ++i) out *= x - i;
    return out;
}

long double binomial(int n, int k) {
    long double out = 1.0L;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

long double factorial(int n) {
    long double out = 1.0L;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

}  // namespace

RodriguesValue rodrigues_expansion(const PolynomialFamily& family, int n, double s) {
    require_degree(n);
    require_finite(s);
    if (n > kRodriguesMaxDegree)
        throw OracleRangeError(
            fmt::format("Rodrigues reference supports n <= {}, got {}", kRodriguesMaxDegree, n));
    const long double x = s;
    long double sum = 0.0L;
    long double mag = 0.0L;
    switch (family.kind()) {
        case FamilyKind::Jacobi: {
            // d^n[(1-s)^(n+a) (1+s)^(n+b)] / rho, expanded by Leibniz.
            const long double al = family.alpha();
            const long double be = family.beta();
            for (int k = 0; k <= n; ++k) {
                const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
                const long double term = binomial(n, k) * sign * falling(n + al, k) * falling(n + be, n - k) *
                                         std::pow(1.0L - x, n - k) * std::pow(1.0L + x, k);
                sum += term;
                mag += std::fabs(term);
            }
            const long double norm = ((n % 2 == 0) ? 1.0L : -1.0L) / (std::pow(2.0L, n) * factorial(n));
            return {static_cast<double>(sum * norm), static_cast<double>(mag * std::fabs(norm))};
        }
        case FamilyKind::Laguerre: {
            const long double al = family.alpha();
            for (int k = 0; k <= n; ++k) {
                const long double sign = ((n - k) % 2 == 0) ? 1.0L : -1.0L;
                const long double term = binomial(n, k) * falling(n + al, k) * sign * std::pow(x, n - k);
                sum += term;
                mag += std::fabs(term);
            }
            const long double norm = 1.0L / factorial(n);
            return {static_cast<double>(sum * norm), static_cast<double>(mag * norm)};
        }
        case FamilyKind::Hermite: {
            // d/ds [q(s) e^{-s^2}] = (q' - 2 s q) e^{-s^2}
            Polynomial q{1.0};
            for (int k = 0; k < n; ++k) q = q.derivative() - Polynomial{0.0, 2.0} * q;
            if (n % 2 == 1) q *= -1.0;
            const auto c = q.coefficients();
            for (std::size_t i = c.size(); i-- > 0;) {
                sum = sum * x + c[i];
                mag += std::fabs(c[i]) * std::pow(std::fabs(x), static_cast<long double>(i));
            }
            return {static_cast<double>(sum), static_cast<double>(mag)};
        }
    }
    return {0.0, 0.0};
}

double rodrigues_reference(const PolynomialFamily& family, int n, double s) {
    return rodrigues_expansion(family, n, s).value;
}

}  // namespace nuforge
