#pragma once

#include <vector>

namespace nuforge {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int points);

/// Gauss-Legendre rule repeated on `panels` equal sub-intervals of [lo, hi].
QuadratureRule composite_gauss_legendre(double lo, double hi, int panels, int points_per_panel);

}  // namespace nuforge
