#include "learnlab/detprobe.hpp"

#include <cmath>
#include <stdexcept>

#include "learnlab/pk_recursion.hpp"
#include "learnlab/rng.hpp"

namespace learnlab {

Mat g_matrix(const Activation& g, std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("node vectors must have equal positive length");
    const size_t p = a.size();
    Mat out(p, p);
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < p; ++j) out(i, j) = g.value(a[i] * b[j]);
    return out;
}

double det_g_matrix(const Activation& g, std::span<const double> a, std::span<const double> b) {
    return det_lu(g_matrix(g, a, b));
}

namespace {

// Signed minor along column 0: (-1)^i * det(matrix without row i, column 0).
std::vector<double> first_column_weights(const Mat& m) {
    const size_t p = m.rows();
    std::vector<double> weights(p);
    for (size_t skip = 0; skip < p; ++skip) {
        Mat minor(p - 1, p - 1);
        size_t r = 0;
        for (size_t i = 0; i < p; ++i) {
            if (i == skip) continue;
            for (size_t j = 1; j < p; ++j) minor(r, j - 1) = m(i, j);
            ++r;
        }
        double sign = (skip % 2 == 0) ? 1.0 : -1.0;
        weights[skip] = sign * det_lu(minor);
    }
    return weights;
}

double pow_int(double base, int e) {
    double out = 1.0;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

std::vector<double> cofactors_first_column(const Activation& g, std::span<const double> a,
                                           std::span<const double> b) {
    if (a.size() < 2) throw std::invalid_argument("cofactor expansion requires p >= 2");
    return first_column_weights(g_matrix(g, a, b));
}

double estrella_identity_check(const Activation& g, std::span<const double> a,
                               std::span<const double> b, int k) {
    if (k != 1 && k != 2) throw std::invalid_argument("identity check supports k in {1, 2} only");
    if (a.size() < 2) throw std::invalid_argument("identity check requires p >= 2");
    auto algdiff = g.algdiff();
    if (!algdiff) throw std::invalid_argument("activation has no algebro-differential data");

    PkSequence seq = pk_sequence(algdiff->G, algdiff->g0, k, g.name());
    const RationalPoly& pk = seq.entries[static_cast<size_t>(k)].poly;

    std::vector<double> weights = cofactors_first_column(g, a, b);
    double rhs = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        rhs += pk.eval_double(g.value(a[i] * b[0])) * pow_int(a[i], k) * weights[i];

    std::vector<double> bvar(b.begin(), b.end());
    auto det_at = [&](double b1) {
        bvar[0] = b1;
        return det_g_matrix(g, a, bvar);
    };

    const double h = 1e-4;
    double lhs;
    if (k == 1) {
        auto central = [&](double step) { return (det_at(b[0] + step) - det_at(b[0] - step)) / (2.0 * step); };
        lhs = (4.0 * central(h) - central(2.0 * h)) / 3.0;
    } else {
        double f0 = det_at(b[0]);
        auto second = [&](double step) {
            return (det_at(b[0] + step) - 2.0 * f0 + det_at(b[0] - step)) / (step * step);
        };
        lhs = (4.0 * second(h) - second(2.0 * h)) / 3.0;
    }
    return std::fabs(lhs - rhs) / (std::fabs(rhs) + 1.0);
}

double sin_derivative_identity_check(std::span<const double> a, std::span<const double> b, int k) {
    if (k != 0)
        throw std::invalid_argument("only the first-derivative (k = 0) sin identity is checked numerically");
    if (a.size() < 2) throw std::invalid_argument("identity check requires p >= 2");
    Activation sine(ActKind::Sin);

    std::vector<double> bvar(b.begin(), b.end());
    bvar[0] = 0.0;
    std::vector<double> weights = first_column_weights(g_matrix(sine, a, bvar));
    double rhs = 0.0;
    for (size_t i = 0; i < a.size(); ++i) rhs += a[i] * weights[i];

    auto det_at = [&](double b1) {
        bvar[0] = b1;
        return det_g_matrix(sine, a, bvar);
    };
    const double h = 1e-4;
    auto central = [&](double step) { return (det_at(step) - det_at(-step)) / (2.0 * step); };
    double lhs = (4.0 * central(h) - central(2.0 * h)) / 3.0;
    return std::fabs(lhs - rhs) / (std::fabs(rhs) + 1.0);
}

DetProbeReport probe_nonvanishing(const Activation& g, int p, uint64_t seed, int max_attempts,
                                  double tol) {
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    if (max_attempts < 1) throw std::invalid_argument("max_attempts must be >= 1");

    DetProbeReport report;
    report.kind = g.name();
    report.p = p;
    report.seed = seed;
    report.max_attempts = max_attempts;
    report.tol = tol;

    Rng rng(seed);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        DetAttempt da;
        da.a = sample_distinct_scalars(rng, static_cast<size_t>(p), -2.0, 2.0);
        da.b = sample_distinct_scalars(rng, static_cast<size_t>(p), -2.0, 2.0);
        Mat m = g_matrix(g, da.a, da.b);
        da.det = det_lu(m);
        da.scaled = hadamard_scaled_det(m);
        da.pass = da.scaled > tol;
        bool found = da.pass;
        std::vector<double> a_nodes = da.a, b_nodes = da.b;
        report.attempts.push_back(std::move(da));
        if (found) {
            report.success = true;
            report.success_attempt = attempt;
            if (p >= 2) {
                if (g.algdiff()) {
                    report.identity_residuals.push_back(
                        {"estrella_k1", estrella_identity_check(g, a_nodes, b_nodes, 1)});
                    report.identity_residuals.push_back(
                        {"estrella_k2", estrella_identity_check(g, a_nodes, b_nodes, 2)});
                } else {
                    report.identity_residuals.push_back(
                        {"sin_k0", sin_derivative_identity_check(a_nodes, b_nodes, 0)});
                }
            }
            break;
        }
    }
    return report;
}

}  // namespace learnlab
