#pragma once

#include <span>
#include <vector>

#include "learnlab/activation.hpp"
#include "learnlab/linalg.hpp"

namespace learnlab {

// Architecture sizes: m hidden units, n inputs, p training points. The
// parameter count is q = m(n+2)+1: m(n+1) weights plus m+1 thresholds.
struct Dims {
    int m = 1;
    int n = 1;
    int p = 1;

    int q() const { return m * (n + 2) + 1; }
    void validate() const;
};

// Parameters (v, s, w, t): output weights v in R^m, output threshold s,
// hidden weights w in R^{m x n} (row-major), hidden thresholds t in R^m.
// Flattening order is fixed as v, s, w row-major, t.
struct ParamVec {
    std::vector<double> v;
    double s = 0.0;
    std::vector<double> w;
    std::vector<double> t;

    static ParamVec zeros(const Dims& dims);

    double wval(const Dims& dims, int unit, int input) const {
        return w[static_cast<size_t>(unit) * dims.n + input];
    }

    std::vector<double> flatten() const;
    static ParamVec from_flat(const Dims& dims, std::span<const double> flat);

    void check_shapes(const Dims& dims) const;
};

// Training data ((gamma_1, zeta_1), ..., (gamma_p, zeta_p)) with pairwise
// distinct gamma. Construction rejects p = 0 and exact duplicates; samplers
// keep a 1e-6 separation on top of that.
struct TrainingSet {
    std::vector<std::vector<double>> gamma;
    std::vector<double> zeta;

    TrainingSet(std::vector<std::vector<double>> gamma_in, std::vector<double> zeta_in);

    int size() const { return static_cast<int>(gamma.size()); }
};

// f(s + sum_k v_k g(t_k + sum_l w_kl x_l))
double forward(const Dims& dims, const Activation& f, const Activation& g, const ParamVec& params,
               std::span<const double> x);

// sum_i (zeta_i - o(gamma_i))^2
double quadratic_error(const Dims& dims, const Activation& f, const Activation& g,
                       const ParamVec& params, const TrainingSet& data);

// Gradient of quadratic_error with respect to the flattened parameters.
std::vector<double> error_gradient(const Dims& dims, const Activation& f, const Activation& g,
                                   const ParamVec& params, const TrainingSet& data);

// theta(params) = (o(gamma_1), ..., o(gamma_p))
std::vector<double> theta(const Dims& dims, const Activation& f, const Activation& g,
                          const std::vector<std::vector<double>>& gammas, const ParamVec& params);

// p x q matrix; row i is the gradient of o(gamma_i) in the flattened
// parameters.
Mat theta_jacobian(const Dims& dims, const Activation& f, const Activation& g,
                   const std::vector<std::vector<double>>& gammas, const ParamVec& params);

// The probe curve: v = (V1, 0, ..., 0), s = 0, w has rho as first row and 0
// elsewhere, t = 0.
ParamVec beta(const Dims& dims, std::span<const double> rho, double v1);

// Closed-form tangent of theta o beta at V1 = 0:
// f'(0) * (g(rho . gamma_1), ..., g(rho . gamma_p)).
std::vector<double> beta_tangent(const Dims& dims, const Activation& f, const Activation& g,
                                 std::span<const double> rho,
                                 const std::vector<std::vector<double>>& gammas);

double dot(std::span<const double> a, std::span<const double> b);

}  // namespace learnlab
