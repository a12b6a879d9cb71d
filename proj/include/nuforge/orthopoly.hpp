#pragma once

#include <optional>
#include <string>

#include "nuforge/jet.hpp"
#include "nuforge/polynomial.hpp"

namespace nuforge {

enum class FamilyKind { Jacobi, Laguerre, Hermite };

/// Classical orthogonal polynomial family with its real parameters.
/// Jacobi needs alpha, beta > -1; Laguerre needs alpha > -1.
class PolynomialFamily {
public:
    static PolynomialFamily jacobi(double alpha, double beta);
    static PolynomialFamily laguerre(double alpha);
    static PolynomialFamily hermite();

    FamilyKind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    std::string name() const;

private:
    PolynomialFamily(FamilyKind kind, double alpha, double beta) : kind_(kind), alpha_(alpha), beta_(beta) {}
    FamilyKind kind_;
    double alpha_;
    double beta_;
};

/// Which function of the Jacobi family plays the role of F in the reduced
/// equation: P_n itself, or the weighted product (1-s)^a (1+s)^b P_n.
enum class JacobiWeighting { Plain, Weighted };

/// Polynomial coefficients of F'' + (tau~/sigma) F' + (sigma~/sigma^2) F = 0.
struct HypergeometricData {
    PolynomialFamily family = PolynomialFamily::hermite();
    JacobiWeighting weighting = JacobiWeighting::Plain;
    int degree = 0;
    Polynomial sigma;
    Polynomial tau_tilde;
    Polynomial sigma_tilde;
    /// Present when sigma_tilde == lambda * sigma; then tau_tilde is the tau of
    /// sigma y'' + tau y' + lambda y = 0 and F is a solution of that equation.
    std::optional<double> lambda;
};

/// sigma y'' + tau y' + lambda y = 0 satisfied by the polynomial y_n itself.
struct ClassicalEquation {
    Polynomial sigma;
    Polynomial tau;
    double lambda = 0.0;
};

/// Orthogonality weight rho(s) with (sigma rho)' = tau rho.
struct WeightFunction {
    PolynomialFamily family;
    std::string descriptor;
    double lower;
    double upper;
    double operator()(double s) const;
};

/// Factor w(s) with F = w(s) y_n(s), held as ln w and its first two derivatives.
struct SolutionPrefactor {
    PolynomialFamily family;
    JacobiWeighting weighting;
    std::string descriptor;
    double log_value(double s) const;
    double log_first(double s) const;
    double log_second(double s) const;
};

double eval_poly(const PolynomialFamily& family, int n, double s);

/// d^order/ds^order of the degree-n polynomial; order must be 1 or 2.
double eval_poly_derivative(const PolynomialFamily& family, int n, double s, int order);

/// Value, first and second derivative in one recurrence pass.
Jet eval_poly_jet(const PolynomialFamily& family, int n, double s);

/// Monomial coefficients of the degree-n polynomial, generated by the same
/// three-term recurrence as eval_poly.
Polynomial poly_coefficients(const PolynomialFamily& family, int n);

HypergeometricData hypergeometric_data(const PolynomialFamily& family, int n,
                                       JacobiWeighting weighting = JacobiWeighting::Plain);

ClassicalEquation classical_equation(const PolynomialFamily& family, int n);

/// -n tau' - n(n-1)/2 sigma''.
double lambda_n(const Polynomial& sigma, const Polynomial& tau, int n);

WeightFunction weight_function(const PolynomialFamily& family);
SolutionPrefactor solution_prefactor(const HypergeometricData& data);

/// F(s) = w(s) y_n(s) and its s-derivatives for the given reduced-equation data.
Jet eval_solution(const HypergeometricData& data, double s);

/// sigma^2 F'' + sigma tau~ F' + sigma~ F at s; zero when the data are consistent.
double hypergeometric_residual(const HypergeometricData& data, double s);

/// sigma y'' + tau y' + lambda_n y for the classical equation of the family.
double ode_residual(const PolynomialFamily& family, int n, double s);

inline constexpr int kRodriguesMaxDegree = 12;

struct RodriguesValue {
    double value;
    /// Sum of absolute values of the expansion terms; the natural scale for
    /// judging rounding error near roots.
    double magnitude;
};

/// Rodrigues-formula evaluation B_n / rho * d^n/ds^n [sigma^n rho] by direct
/// Leibniz expansion; independent of the recurrence. n <= 12.
double rodrigues_reference(const PolynomialFamily& family, int n, double s);
RodriguesValue rodrigues_expansion(const PolynomialFamily& family, int n, double s);

}  // namespace nuforge
