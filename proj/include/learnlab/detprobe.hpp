#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "learnlab/activation.hpp"
#include "learnlab/linalg.hpp"

namespace learnlab {

// p x p matrix with entry (i, j) = g(a_i * b_j).
Mat g_matrix(const Activation& g, std::span<const double> a, std::span<const double> b);

// Determinant of g_matrix by partially pivoted LU.
double det_g_matrix(const Activation& g, std::span<const double> a, std::span<const double> b);

// First-column expansion weights M_i with det = sum_i g(a_i b_1) M_i.
// Each M_i is a signed (p-1) x (p-1) minor and never involves column 1,
// hence never b_1. Requires p >= 2.
std::vector<double> cofactors_first_column(const Activation& g, std::span<const double> a,
                                           std::span<const double> b);

// Residual of the k-th b_1-derivative identity
//   d^k/db_1^k det(g(a_i b_j)) = sum_i P_k(g(a_i b_1)) a_i^k M_i
// with the left side from Richardson-extrapolated central stencils and the
// right side from the exact-coefficient P_k. Normalized by |rhs| + 1.
// Requires an algebro-differential activation and k in {1, 2}; higher k is
// numerically unreliable through finite differences.
double estrella_identity_check(const Activation& g, std::span<const double> a,
                               std::span<const double> b, int k);

// Residual of the sin identity at b_1 = 0 and k = 0: the first b_1-derivative
// of det(sin(a_i b_j)) equals sum_i a_i M_i there. b[0] is treated as 0;
// the remaining b_j enter the minors. Requires p >= 2.
double sin_derivative_identity_check(std::span<const double> a, std::span<const double> b, int k);

struct DetAttempt {
    std::vector<double> a;
    std::vector<double> b;
    double det = 0.0;
    double scaled = 0.0;
    bool pass = false;
};

struct IdentityResidual {
    std::string name;  // "estrella_k1", "estrella_k2", "sin_k0"
    double residual = 0.0;
};

struct DetProbeReport {
    std::string kind;
    int p = 0;
    uint64_t seed = 0;
    int max_attempts = 0;
    double tol = 0.0;
    bool success = false;
    int success_attempt = -1;  // 1-based; -1 when all attempts failed
    std::vector<DetAttempt> attempts;
    std::vector<IdentityResidual> identity_residuals;
};

// Samples a, b from [-2, 2]^p with coincident nodes (separation < 1e-6)
// rejected, until the Hadamard-scaled |det| exceeds tol. Exhausting
// max_attempts yields a failure report, not an exception. On success the
// applicable derivative-identity residuals are evaluated on the successful
// nodes and included.
DetProbeReport probe_nonvanishing(const Activation& g, int p, uint64_t seed,
                                  int max_attempts = 100, double tol = 1e-12);

}  // namespace learnlab
