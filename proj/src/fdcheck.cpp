#include "learnlab/fdcheck.hpp"

#include <cmath>

namespace learnlab {

std::vector<double> fd_gradient(const std::function<double(std::span<const double>)>& fn,
                                std::vector<double> x) {
    std::vector<double> grad(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        double orig = x[i];
        double h = fd_step(orig);
        x[i] = orig + h;
        double hi = fn(x);
        x[i] = orig - h;
        double lo = fn(x);
        x[i] = orig;
        grad[i] = (hi - lo) / (2.0 * h);
    }
    return grad;
}

bool close_enough(double a, double b, double rel_tol, double abs_floor) {
    double diff = std::fabs(a - b);
    double scale = std::max(std::fabs(a), std::fabs(b));
    return diff <= std::max(abs_floor, rel_tol * scale);
}

namespace {

void record(FdCheckReport& rep, double analytic, double numeric, double rel_tol, double abs_floor,
            const std::string& where) {
    ++rep.components_checked;
    double diff = std::fabs(analytic - numeric);
    if (!close_enough(analytic, numeric, rel_tol, abs_floor)) {
        ++rep.failures;
        if (diff > rep.worst_abs_diff) {
            rep.worst_abs_diff = diff;
            rep.worst_location = where;
        }
    } else if (rep.failures == 0 && diff > rep.worst_abs_diff) {
        rep.worst_abs_diff = diff;
        rep.worst_location = where;
    }
}

}  // namespace

FdCheckReport check_error_gradient(const Dims& dims, const Activation& f, const Activation& g,
                                   const ParamVec& params, const TrainingSet& data, double rel_tol,
                                   double abs_floor) {
    std::vector<double> analytic = error_gradient(dims, f, g, params, data);
    auto loss = [&](std::span<const double> flat) {
        return quadratic_error(dims, f, g, ParamVec::from_flat(dims, flat), data);
    };
    std::vector<double> numeric = fd_gradient(loss, params.flatten());
    FdCheckReport rep;
    for (size_t i = 0; i < analytic.size(); ++i)
        record(rep, analytic[i], numeric[i], rel_tol, abs_floor, "grad[" + std::to_string(i) + "]");
    return rep;
}

FdCheckReport check_theta_jacobian(const Dims& dims, const Activation& f, const Activation& g,
                                   const std::vector<std::vector<double>>& gammas,
                                   const ParamVec& params, double rel_tol, double abs_floor) {
    Mat analytic = theta_jacobian(dims, f, g, gammas, params);
    FdCheckReport rep;
    std::vector<double> flat = params.flatten();
    for (size_t j = 0; j < flat.size(); ++j) {
        double orig = flat[j];
        double h = fd_step(orig);
        flat[j] = orig + h;
        std::vector<double> hi = theta(dims, f, g, gammas, ParamVec::from_flat(dims, flat));
        flat[j] = orig - h;
        std::vector<double> lo = theta(dims, f, g, gammas, ParamVec::from_flat(dims, flat));
        flat[j] = orig;
        for (size_t i = 0; i < hi.size(); ++i) {
            double numeric = (hi[i] - lo[i]) / (2.0 * h);
            record(rep, analytic(i, j), numeric, rel_tol, abs_floor,
                   "jac[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        }
    }
    return rep;
}

FdCheckReport check_beta_tangent(const Dims& dims, const Activation& f, const Activation& g,
                                 std::span<const double> rho,
                                 const std::vector<std::vector<double>>& gammas, double rel_tol,
                                 double abs_floor) {
    std::vector<double> analytic = beta_tangent(dims, f, g, rho, gammas);
    double h = fd_step(0.0);
    std::vector<double> hi = theta(dims, f, g, gammas, beta(dims, rho, h));
    std::vector<double> lo = theta(dims, f, g, gammas, beta(dims, rho, -h));
    FdCheckReport rep;
    for (size_t i = 0; i < analytic.size(); ++i) {
        double numeric = (hi[i] - lo[i]) / (2.0 * h);
        record(rep, analytic[i], numeric, rel_tol, abs_floor, "tangent[" + std::to_string(i) + "]");
    }
    return rep;
}

}  // namespace learnlab
