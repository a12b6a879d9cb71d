#pragma once

#include <span>
#include <string>
#include <vector>

namespace nuforge {

/// Open interval (left, right) of the radial coordinate.
struct Interval {
    double left = 0.0;
    double right = 0.0;
    bool contains(double r) const { return r > left && r < right; }
    double length() const { return right - left; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Basis functions a potential may be built from. CscSq and CscCot carry a
/// positive scale a: csc^2(a r) and csc(a r) cot(a r).
enum class Basis { Const, InvR, InvR2, RSquared, CscSq, CscCot };

struct PotentialTerm {
    double coefficient;
    Basis basis;
    double scale = 0.0;
};

std::string basis_name(Basis b);
double basis_value(Basis b, double scale, double r);

/// Sum of coefficient * basis(r) over a fixed grammar of basis functions.
/// Terms are collected (one entry per basis and scale) and zero terms dropped.
class PotentialExpr {
public:
    PotentialExpr() = default;
    explicit PotentialExpr(Interval domain) : domain_(domain) {}

    PotentialExpr& add(double coefficient, Basis basis, double scale = 0.0);

    double operator()(double r) const;
    std::span<const PotentialTerm> terms() const { return terms_; }
    const Interval& domain() const { return domain_; }
    void set_domain(Interval d) { domain_ = d; }
    bool empty() const { return terms_.empty(); }

    /// Coefficient of the given basis, zero if absent.
    double coefficient(Basis basis, double scale = 0.0) const;
    double constant_term() const { return coefficient(Basis::Const); }
    PotentialExpr without_constant() const;

    std::string to_string() const;

    PotentialExpr& operator+=(const PotentialExpr& other);
    PotentialExpr& operator*=(double c);
    friend PotentialExpr operator+(PotentialExpr a, const PotentialExpr& b) { return a += b; }
    friend PotentialExpr operator-(PotentialExpr a, PotentialExpr b) { return a += (b *= -1.0); }
    friend PotentialExpr operator*(double c, PotentialExpr a) { return a *= c; }

    /// Pointwise product; throws DecompositionError when a product of two
    /// terms falls outside the grammar.
    friend PotentialExpr operator*(const PotentialExpr& a, const PotentialExpr& b);

private:
    Interval domain_{0.0, 0.0};
    std::vector<PotentialTerm> terms_;
};

}  // namespace nuforge
