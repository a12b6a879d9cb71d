#pragma once

#include <string>

#include "nuforge/orthopoly.hpp"
#include "nuforge/transformation.hpp"

namespace nuforge {

/// Closed form of Phi(s) = integral of tau~/sigma ds for deg(tau~) <= 1 and
/// deg(sigma) <= 2 with real roots:
///   Phi(s) = linear*s + quadratic*s^2 + sum_k weight_k * ln|s - root_k|
struct LogIntegral {
    double linear = 0.0;
    double quadratic = 0.0;
    std::vector<std::pair<double, double>> logs;  // (root, weight)
    double operator()(double s) const;
};

/// Modulation factor f(r) = (s')^(-1/2) exp(Phi(s(r)) / 2), stored through
/// its log-derivatives so that f''/f = l2 + l1^2 stays analytic. Constant
/// prefactors are dropped.
class FactorF {
public:
    FactorF(Transformation t, Polynomial sigma, Polynomial tau_tilde, LogIntegral integral);

    const Transformation& transformation() const { return t_; }

    /// l1 = (ln f)'
    double log_first(double r) const;
    /// l2 = (ln f)''
    double log_second(double r) const;
    /// ln f up to an additive constant.
    double log_value(double r) const;
    /// f''/f
    double second_over_value(double r) const;

    std::string descriptor() const;

private:
    Transformation t_;
    Polynomial sigma_;
    Polynomial tau_;
    LogIntegral integral_;
};

FactorF build_factor_f(const HypergeometricData& data, const Transformation& t);

}  // namespace nuforge
