#pragma once

#include <string>
#include <vector>

#include "nuforge/orthopoly.hpp"
#include "nuforge/potential.hpp"

namespace nuforge {

enum class MapKind {
    Cosine,     ///< s = cos(a r) on (0, pi/a)
    Quadratic,  ///< s = a^2 r^2 / 4 on (0, inf)
    Sqrt,       ///< s = sqrt(2 a r) on (0, inf)
};

/// Solution branch of the Jacobi constraint s'^2 / (1 - s^2) = C. Only the
/// cosine branch is implemented; the hyperbolic branches are declared so that
/// callers get a definite error instead of a silent fallback.
enum class Branch { Principal, HyperbolicCosine, HyperbolicSine, HyperbolicTangent, HyperbolicCotangent };

/// s(r) and its first three derivatives.
struct MapJet {
    double s;
    double d1;
    double d2;
    double d3;
};

/// Closed-form coordinate map s(r) with scale a > 0.
class Transformation {
public:
    static Transformation cosine(double a);
    static Transformation quadratic(double a);
    static Transformation sqrt_map(double a);

    MapKind kind() const { return kind_; }
    double scale() const { return a_; }
    /// Open r-interval on which the map is monotone and s' != 0.
    Interval domain() const;
    /// Open interval of s values swept by the domain.
    Interval s_range() const;

    double s(double r) const { return jet(r).s; }
    MapJet jet(double r) const;

    /// Left-hand side of the defining identity: s'^2/(1-s^2), s'^2/s or
    /// s'^2 s^2 according to the map; equals a^2 everywhere in the domain.
    double constraint_value(double r) const;

    /// Basis functions a pointwise function of s(r) can be expanded in.
    std::vector<PotentialTerm> candidate_basis() const;

    std::string descriptor() const;

private:
    Transformation(MapKind kind, double a) : kind_(kind), a_(a) {}
    MapKind kind_;
    double a_;
};

/// Picks the map whose defining identity matches the family structure;
/// `constant` is C = a^2 > 0.
Transformation solve_transformation_constraint(const PolynomialFamily& family, double constant,
                                               Branch branch = Branch::Principal);

}  // namespace nuforge
