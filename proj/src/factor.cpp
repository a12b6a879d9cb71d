#include "nuforge/factor.hpp"

#include <cmath>

#include <fmt/format.h>

#include "nuforge/errors.hpp"

namespace nuforge {

namespace {

LogIntegral integrate_ratio(const Polynomial& tau, const Polynomial& sigma) {
    const double t0 = tau.coefficient(0);
    const double t1 = tau.coefficient(1);
    LogIntegral out;
    switch (sigma.degree()) {
        case 0: {
            const double c0 = sigma.coefficient(0);
            out.linear = t0 / c0;
            out.quadratic = t1 / (2.0 * c0);
            return out;
        }
        case 1: {
            const double c0 = sigma.coefficient(0);
            const double c1 = sigma.coefficient(1);
            out.linear = t1 / c1;
            const double w = (t0 - t1 * c0 / c1) / c1;
            if (w != 0.0) out.logs.emplace_back(-c0 / c1, w);
            return out;
        }
        case 2: {
            const double c0 = sigma.coefficient(0);
            const double c1 = sigma.coefficient(1);
            const double c2 = sigma.coefficient(2);
            const double disc = c1 * c1 - 4.0 * c2 * c0;
            if (!(disc > 0.0))
                throw DecompositionError("sigma must have two distinct real roots to integrate tau~/sigma");
            const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
            double r1 = q / c2;
            double r2 = c0 / q;
            if (r1 > r2) std::swap(r1, r2);
            const double w1 = (t0 + t1 * r1) / (c2 * (r1 - r2));
            const double w2 = (t0 + t1 * r2) / (c2 * (r2 - r1));
            if (w1 != 0.0) out.logs.emplace_back(r1, w1);
            if (w2 != 0.0) out.logs.emplace_back(r2, w2);
            return out;
        }
        default:
            throw DecompositionError("sigma must be a nonzero polynomial of degree <= 2");
    }
}

std::vector<double> real_roots(const Polynomial& p) {
    const double c0 = p.coefficient(0);
    const double c1 = p.coefficient(1);
    const double c2 = p.coefficient(2);
    if (p.degree() == 1) return {-c0 / c1};
    if (p.degree() == 2) {
        const double disc = c1 * c1 - 4.0 * c2 * c0;
        if (disc < 0.0) return {};
        const double q = -0.5 * (c1 + std::copysign(std::sqrt(disc), c1));
        if (q == 0.0) return {0.0};
        return {q / c2, c0 / q};
    }
    return {};
}

}  // namespace

double LogIntegral::operator()(double s) const {
    double v = linear * s + quadratic * s * s;
    for (const auto& [root, weight] : logs) v += weight * std::log(std::abs(s - root));
    return v;
}

FactorF::FactorF(Transformation t, Polynomial sigma, Polynomial tau_tilde, LogIntegral integral)
    : t_(t), sigma_(std::move(sigma)), tau_(std::move(tau_tilde)), integral_(std::move(integral)) {}

double FactorF::log_first(double r) const {
    const MapJet j = t_.jet(r);
    const double ratio = tau_(j.s) / sigma_(j.s);
    return -j.d2 / (2.0 * j.d1) + 0.5 * ratio * j.d1;
}

double FactorF::log_second(double r) const {
    const MapJet j = t_.jet(r);
    const double sg = sigma_(j.s);
    const double tau = tau_(j.s);
    const double ratio = tau / sg;
    const double ratio_prime = (tau_.derivative()(j.s) * sg - tau * sigma_.derivative()(j.s)) / (sg * sg);
    return -(j.d3 * j.d1 - j.d2 * j.d2) / (2.0 * j.d1 * j.d1) + 0.5 * (ratio_prime * j.d1 * j.d1 + ratio * j.d2);
}

double FactorF::log_value(double r) const {
    const MapJet j = t_.jet(r);
    return -0.5 * std::log(std::abs(j.d1)) + 0.5 * integral_(j.s);
}

double FactorF::second_over_value(double r) const {
    const double l1 = log_first(r);
    return log_second(r) + l1 * l1;
}

std::string FactorF::descriptor() const {
    std::string out = "(s')^(-1/2)";
    for (const auto& [root, weight] : integral_.logs) {
        const std::string base = root == 0.0 ? "|s|"
                                 : root < 0.0 ? fmt::format("|s + {:.10g}|", -root)
                                              : fmt::format("|s - {:.10g}|", root);
        out += fmt::format(" {}^({:.10g})", base, weight / 2.0);
    }
    if (integral_.linear != 0.0 || integral_.quadratic != 0.0)
        out += fmt::format(" exp({:.10g} s + {:.10g} s^2)", integral_.linear / 2.0, integral_.quadratic / 2.0);
    return out + ", " + t_.descriptor();
}

FactorF build_factor_f(const HypergeometricData& data, const Transformation& t) {
    const Interval sr = t.s_range();
    for (double root : real_roots(data.sigma)) {
        if (sr.contains(root))
            throw SingularTransformationError(
                fmt::format("sigma vanishes at s = {} inside the range swept by {}", root, t.descriptor()));
    }
    if (data.sigma.is_zero()) throw SingularTransformationError("sigma is identically zero");
    return FactorF(t, data.sigma, data.tau_tilde, integrate_ratio(data.tau_tilde, data.sigma));
}

}  // namespace nuforge
