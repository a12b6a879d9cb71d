#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nuforge/catalog.hpp"
#include "nuforge/oracle.hpp"

namespace nuforge {

/// One comparison of a closed form against the numerical oracle.
struct CheckRecord {
    std::string system;
    ParameterMap params;
    std::optional<Grid> grid;
    std::string check;
    double closed_form = 0.0;
    double oracle_value = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

nlohmann::json to_json(const CheckRecord& record);

struct VerifyOptions {
    /// Adds an eigenvalue convergence study (grid spacing halved).
    bool grid_halve = false;
    int levels = 4;
};

/// Grid used by the finite-difference eigensolver for a catalog entry.
Grid standard_grid(const std::string& id, const ParameterMap& params);

std::vector<CheckRecord> verify_system(const std::string& id, const ParameterMap& params,
                                       const VerifyOptions& options = {});

/// Quantization, consistency and pointwise Klein-Gordon checks.
std::vector<CheckRecord> verify_kg(double m, double B, int sign, int n_max);

/// Particle in a box on (0, pi): eigenvalues n^2 and second-order convergence.
std::vector<CheckRecord> verify_oracle_self_test();

/// Every catalog entry at default parameters, the K-G levels and the oracle
/// self-test. Independent groups run concurrently; order of the result is fixed.
std::vector<CheckRecord> verify_all(const VerifyOptions& options = {}, Execution execution = Execution::Parallel);

/// Ratio of eigenvalue errors on grids with spacing h and h/2.
struct ConvergenceStudy {
    double coarse_error;
    double fine_error;
    double ratio;
};
ConvergenceStudy eigenvalue_convergence(const PotentialExpr& potential, const Grid& coarse, int index,
                                        double exact);

}  // namespace nuforge
