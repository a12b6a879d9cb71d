#include <algorithm>
#include <cmath>
#include <limits>

#include "nuforge/kernels.hpp"

namespace nuforge::kernels {

int sturm_count(std::span<const double> diagonal, double off_diagonal, double x) {
    const double e2 = off_diagonal * off_diagonal;
    const double pivmin = std::max(std::numeric_limits<double>::min(), e2 * 1e-300);
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < diagonal.size(); ++i) {
        q = diagonal[i] - x - (i == 0 ? 0.0 : e2 / q);
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

namespace detail {

std::pair<double, double> spectrum_bounds(std::span<const double> diagonal, double off_diagonal) {
    const double e = std::abs(off_diagonal);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < diagonal.size(); ++i) {
        const double radius = (i == 0 || i + 1 == diagonal.size()) ? e : 2.0 * e;
        lo = std::min(lo, diagonal[i] - radius);
        hi = std::max(hi, diagonal[i] + radius);
    }
    return {lo, hi};
}

double bisect_one(std::span<const double> diagonal, double off_diagonal, int index, double lo, double hi,
                  double rel_width) {
    for (int iter = 0; iter < 400; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= rel_width * (1.0 + std::abs(mid)) || mid == lo || mid == hi) break;
        if (sturm_count(diagonal, off_diagonal, mid) > index)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

std::vector<double> bisect_eigenvalues_serial(std::span<const double> diagonal, double off_diagonal, int k,
                                              double rel_width) {
    const auto [lo, hi] = detail::spectrum_bounds(diagonal, off_diagonal);
    std::vector<double> out(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
        out[static_cast<std::size_t>(j)] = detail::bisect_one(diagonal, off_diagonal, j, lo, hi, rel_width);
    return out;
}

SweepResult residual_sweep_serial(std::span<const double> nodes, const std::function<PointValue(double)>& fn) {
    SweepResult out;
    for (double r : nodes) {
        const PointValue v = fn(r);
        out.max_residual = std::max(out.max_residual, std::abs(v.residual));
        out.max_magnitude = std::max(out.max_magnitude, std::abs(v.magnitude));
    }
    return out;
}

std::vector<double> tabulate_serial(std::span<const double> nodes, int functions,
                                    const std::function<double(int, double)>& fn) {
    const std::size_t n = nodes.size();
    std::vector<double> out(static_cast<std::size_t>(functions) * n);
    for (int f = 0; f < functions; ++f)
        for (std::size_t i = 0; i < n; ++i) out[static_cast<std::size_t>(f) * n + i] = fn(f, nodes[i]);
    return out;
}

}  // namespace nuforge::kernels
