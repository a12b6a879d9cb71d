#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace nuforge {

/// Dense real polynomial in the monomial basis; coefficient i multiplies s^i.
/// Trailing zero coefficients are trimmed, the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<double> coefficients);
    explicit Polynomial(std::vector<double> coefficients);

    static Polynomial constant(double c) { return Polynomial{c}; }
    static Polynomial monomial(int degree, double c = 1.0);

    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::span<const double> coefficients() const { return coeffs_; }
    double coefficient(int i) const;

    /// Horner evaluation.
    double operator()(double s) const;
    Polynomial derivative() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(double c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, double c) { return a *= c; }
    friend Polynomial operator*(double c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Human-readable form, e.g. "1 - s^2".
    std::string to_string(char var = 's') const;

private:
    void trim();
    std::vector<double> coeffs_;
};

}  // namespace nuforge
