#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "learnlab/activation.hpp"
#include "learnlab/linalg.hpp"
#include "learnlab/network.hpp"

namespace learnlab {

struct PointSearchResult {
    bool success = false;
    int attempts_used = 0;
    std::vector<std::vector<double>> rho;
    std::vector<std::vector<double>> gamma;
    double det = 0.0;
    double scaled_det = 0.0;
};

// Rejection-samples rho_i, gamma_j in [-2,2]^n until the matrix g(rho_i . gamma_j)
// has Hadamard-scaled |det| > tol. Budget exhaustion yields success=false, no throw.
PointSearchResult find_nondegenerate_points(const Activation& g, const Dims& dims, uint64_t seed,
                                            int max_attempts = 100, double tol = 1e-12);

// Row i = f'(0) * (g(rho_i . gamma_1), ..., g(rho_i . gamma_p)).
Mat tangent_family(const Activation& f, const Activation& g, const Dims& dims,
                   const std::vector<std::vector<double>>& rho,
                   const std::vector<std::vector<double>>& gamma);

struct WitnessReport {
    Dims dims;
    std::string f_kind;
    std::string g_kind;
    uint64_t seed = 0;
    bool search_success = false;
    int search_attempts = 0;
    std::vector<std::vector<double>> rho;
    std::vector<std::vector<double>> gamma;
    double scaled_det = 0.0;
    std::vector<double> sigma;
    int tangent_rank = 0;
    int q = 0;
    std::string verdict;
    std::string narrative;
    std::string footer;
};

// "contradiction-witnessed" iff rank == p and p > q; "no-contradiction-at-this-size"
// when p <= q; "rank-deficient-family" when p > q but rank < p.
std::string witness_verdict(int rank, int p, int q);

WitnessReport unfeasibility_witness(const Activation& f, const Activation& g, const Dims& dims,
                                    uint64_t seed, int max_attempts = 100, double tol = 1e-12);

// Same analysis on caller-supplied points; no sampling.
WitnessReport witness_from_points(const Activation& f, const Activation& g, const Dims& dims,
                                  const std::vector<std::vector<double>>& rho,
                                  const std::vector<std::vector<double>>& gamma);

// Candidate learner: target vector in R^p -> parameter vector.
using PiMap = std::function<ParamVec(const std::vector<double>&)>;

// || theta(pi(theta(params0))) - theta(params0) ||_2 over the gamma inputs.
double perfect_map_residual(const Activation& f, const Activation& g, const Dims& dims,
                            const std::vector<std::vector<double>>& gamma, const PiMap& pi,
                            const ParamVec& params0);

struct DirectionProbe {
    std::vector<double> direction;
    double max_rel_deviation = 0.0;
};

struct PiProbeReport {
    std::vector<std::vector<double>> gamma;
    std::vector<double> zeta_star;
    std::vector<double> steps;
    std::vector<DirectionProbe> directions;
    double worst_deviation = 0.0;
};

// Samples unit directions and compares forward and backward difference quotients of pi
// at zeta* = (f(0), ..., f(0)) across step sizes; reports spread, draws no conclusion.
PiProbeReport pi_point_differentiability_probe(const PiMap& pi, const Activation& f,
                                               const Dims& dims,
                                               const std::vector<std::vector<double>>& gamma,
                                               uint64_t seed = 2026, int num_directions = 5);

}  // namespace learnlab
