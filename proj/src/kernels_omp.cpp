#include <algorithm>
#include <cmath>

#include <omp.h>

#include "nuforge/kernels.hpp"

namespace nuforge::kernels {

std::vector<double> bisect_eigenvalues_omp(std::span<const double> diagonal, double off_diagonal, int k,
                                           double rel_width) {
    const auto [lo, hi] = detail::spectrum_bounds(diagonal, off_diagonal);
    std::vector<double> out(static_cast<std::size_t>(k));
#pragma omp parallel for schedule(dynamic, 1)
    for (int j = 0; j < k; ++j)
        out[static_cast<std::size_t>(j)] = detail::bisect_one(diagonal, off_diagonal, j, lo, hi, rel_width);
    return out;
}

SweepResult residual_sweep_omp(std::span<const double> nodes, const std::function<PointValue(double)>& fn) {
    double max_res = 0.0;
    double max_mag = 0.0;
    const auto n = static_cast<long>(nodes.size());
#pragma omp parallel for reduction(max : max_res, max_mag) schedule(static)
    for (long i = 0; i < n; ++i) {
        const PointValue v = fn(nodes[static_cast<std::size_t>(i)]);
        max_res = std::max(max_res, std::abs(v.residual));
        max_mag = std::max(max_mag, std::abs(v.magnitude));
    }
    return {max_res, max_mag};
}

std::vector<double> tabulate_omp(std::span<const double> nodes, int functions,
                                 const std::function<double(int, double)>& fn) {
    const auto n = static_cast<long>(nodes.size());
    std::vector<double> out(static_cast<std::size_t>(functions) * nodes.size());
#pragma omp parallel for collapse(2) schedule(static)
    for (int f = 0; f < functions; ++f)
        for (long i = 0; i < n; ++i)
            out[static_cast<std::size_t>(f) * nodes.size() + static_cast<std::size_t>(i)] =
                fn(f, nodes[static_cast<std::size_t>(i)]);
    return out;
}

}  // namespace nuforge::kernels
