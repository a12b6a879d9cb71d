#pragma once

#include <functional>
#include <span>
#include <vector>

/// Data-parallel inner loops of the verification oracle. Every kernel has a
/// serial reference and an OpenMP version; both produce bit-identical results.
namespace nuforge::kernels {

enum class Execution { Serial, Parallel };

/// Number of eigenvalues smaller than x of the symmetric tridiagonal matrix
/// with the given diagonal and constant off-diagonal.
int sturm_count(std::span<const double> diagonal, double off_diagonal, double x);

/// The k lowest eigenvalues by Sturm-sequence bisection, each bracketed to
/// width rel_width * (1 + |lambda|).
std::vector<double> bisect_eigenvalues_serial(std::span<const double> diagonal, double off_diagonal, int k,
                                              double rel_width);
std::vector<double> bisect_eigenvalues_omp(std::span<const double> diagonal, double off_diagonal, int k,
                                           double rel_width);

struct PointValue {
    double residual;
    double magnitude;
};

struct SweepResult {
    double max_residual = 0.0;
    double max_magnitude = 0.0;
};

/// max |residual| and max |magnitude| of fn over the nodes.
SweepResult residual_sweep_serial(std::span<const double> nodes, const std::function<PointValue(double)>& fn);
SweepResult residual_sweep_omp(std::span<const double> nodes, const std::function<PointValue(double)>& fn);

/// Row-major table out[f * nodes.size() + i] = fn(f, nodes[i]) for f < functions.
std::vector<double> tabulate_serial(std::span<const double> nodes, int functions,
                                    const std::function<double(int, double)>& fn);
std::vector<double> tabulate_omp(std::span<const double> nodes, int functions,
                                 const std::function<double(int, double)>& fn);

inline std::vector<double> bisect_eigenvalues(Execution e, std::span<const double> diagonal, double off_diagonal,
                                              int k, double rel_width) {
    return e == Execution::Serial ? bisect_eigenvalues_serial(diagonal, off_diagonal, k, rel_width)
                                  : bisect_eigenvalues_omp(diagonal, off_diagonal, k, rel_width);
}

inline SweepResult residual_sweep(Execution e, std::span<const double> nodes,
                                  const std::function<PointValue(double)>& fn) {
    return e == Execution::Serial ? residual_sweep_serial(nodes, fn) : residual_sweep_omp(nodes, fn);
}

inline std::vector<double> tabulate(Execution e, std::span<const double> nodes, int functions,
                                    const std::function<double(int, double)>& fn) {
    return e == Execution::Serial ? tabulate_serial(nodes, functions, fn) : tabulate_omp(nodes, functions, fn);
}

namespace detail {
/// Gershgorin interval of the matrix.
std::pair<double, double> spectrum_bounds(std::span<const double> diagonal, double off_diagonal);
/// Bisection for the eigenvalue with 0-based index `index`.
double bisect_one(std::span<const double> diagonal, double off_diagonal, int index, double lo, double hi,
                  double rel_width);
}  // namespace detail

}  // namespace nuforge::kernels
