#pragma once

#include <functional>
#include <string>
#include <vector>

#include "learnlab/network.hpp"

namespace learnlab {

// Central difference with step 1e-5 * max(1, |x_i|), the binary64 sweet
// spot for first derivatives.
inline double fd_step(double x) {
    double ax = x < 0 ? -x : x;
    return 1e-5 * (ax > 1.0 ? ax : 1.0);
}

std::vector<double> fd_gradient(const std::function<double(std::span<const double>)>& fn,
                                std::vector<double> x);

// Pass when |a - b| <= max(abs_floor, rel_tol * max(|a|, |b|)).
bool close_enough(double a, double b, double rel_tol = 1e-6, double abs_floor = 1e-8);

struct FdCheckReport {
    int components_checked = 0;
    int failures = 0;
    double worst_abs_diff = 0.0;
    std::string worst_location;
    bool pass() const { return failures == 0; }
};

// error_gradient against central differences of quadratic_error.
FdCheckReport check_error_gradient(const Dims& dims, const Activation& f, const Activation& g,
                                   const ParamVec& params, const TrainingSet& data,
                                   double rel_tol = 1e-6, double abs_floor = 1e-8);

// theta_jacobian rows against central differences of theta.
FdCheckReport check_theta_jacobian(const Dims& dims, const Activation& f, const Activation& g,
                                   const std::vector<std::vector<double>>& gammas,
                                   const ParamVec& params, double rel_tol = 1e-6,
                                   double abs_floor = 1e-8);

// beta_tangent against the central difference of theta(beta(rho, .)) at 0.
FdCheckReport check_beta_tangent(const Dims& dims, const Activation& f, const Activation& g,
                                 std::span<const double> rho,
                                 const std::vector<std::vector<double>>& gammas,
                                 double rel_tol = 1e-6, double abs_floor = 1e-8);

}  // namespace learnlab
