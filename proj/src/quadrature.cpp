#include "nuforge/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "nuforge/errors.hpp"

namespace nuforge {

QuadratureRule gauss_legendre(int points) {
    if (points < 1) throw ParameterDomainError("quadrature needs at least one point");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(points));
    rule.weights.resize(static_cast<std::size_t>(points));
    const int half = (points + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= points; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = points * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        // Recompute the derivative at the converged node for the weight.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= points; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = points * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(points - 1 - i);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    return rule;
}

QuadratureRule composite_gauss_legendre(double lo, double hi, int panels, int points_per_panel) {
    if (panels < 1) throw ParameterDomainError("composite quadrature needs at least one panel");
    if (!(hi > lo)) throw ParameterDomainError("quadrature interval must have hi > lo");
    const QuadratureRule base = gauss_legendre(points_per_panel);
    QuadratureRule out;
    out.nodes.reserve(static_cast<std::size_t>(panels) * base.nodes.size());
    out.weights.reserve(out.nodes.capacity());
    const double width = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + p * width;
        const double mid = a + 0.5 * width;
        for (std::size_t i = 0; i < base.nodes.size(); ++i) {
            out.nodes.push_back(mid + 0.5 * width * base.nodes[i]);
            out.weights.push_back(0.5 * width * base.weights[i]);
        }
    }
    return out;
}

}  // namespace nuforge
