#include "learnlab/witness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "learnlab/rng.hpp"

namespace learnlab {

namespace {

Mat g_inner_matrix(const Activation& g, const std::vector<std::vector<double>>& rho,
                   const std::vector<std::vector<double>>& gamma) {
    const size_t p = rho.size();
    Mat m(p, p);
    for (size_t i = 0; i < p; ++i)
        for (size_t j = 0; j < p; ++j) m(i, j) = g.value(dot(rho[i], gamma[j]));
    return m;
}

void check_point_shapes(const Dims& dims, const std::vector<std::vector<double>>& rho,
                        const std::vector<std::vector<double>>& gamma) {
    if (rho.size() != static_cast<size_t>(dims.p) || gamma.size() != static_cast<size_t>(dims.p))
        throw std::invalid_argument("expected p rho vectors and p gamma vectors");
    for (const auto& r : rho)
        if (r.size() != static_cast<size_t>(dims.n)) throw std::invalid_argument("rho vector of wrong dimension");
    for (const auto& c : gamma)
        if (c.size() != static_cast<size_t>(dims.n)) throw std::invalid_argument("gamma vector of wrong dimension");
}

double l2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

PointSearchResult find_nondegenerate_points(const Activation& g, const Dims& dims, uint64_t seed,
                                            int max_attempts, double tol) {
    dims.validate();
    if (max_attempts < 1) throw std::invalid_argument("max_attempts must be >= 1");

    PointSearchResult res;
    Rng rng(seed);
    const size_t p = static_cast<size_t>(dims.p);
    const size_t n = static_cast<size_t>(dims.n);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        res.attempts_used = attempt;
        res.rho = sample_distinct_points(rng, p, n, -2.0, 2.0);
        res.gamma = sample_distinct_points(rng, p, n, -2.0, 2.0);
        Mat m = g_inner_matrix(g, res.rho, res.gamma);
        res.det = det_lu(m);
        res.scaled_det = hadamard_scaled_det(m);
        if (res.scaled_det > tol) {
            res.success = true;
            break;
        }
    }
    return res;
}

Mat tangent_family(const Activation& f, const Activation& g, const Dims& dims,
                   const std::vector<std::vector<double>>& rho,
                   const std::vector<std::vector<double>>& gamma) {
    check_point_shapes(dims, rho, gamma);
    const size_t p = rho.size();
    Mat out(p, p);
    for (size_t i = 0; i < p; ++i) {
        std::vector<double> row = beta_tangent(dims, f, g, rho[i], gamma);
        for (size_t j = 0; j < p; ++j) out(i, j) = row[j];
    }
    return out;
}

std::string witness_verdict(int rank, int p, int q) {
    if (p <= q) return "no-contradiction-at-this-size";
    return rank == p ? "contradiction-witnessed" : "rank-deficient-family";
}

namespace {

std::string compose_narrative(const WitnessReport& r) {
    std::ostringstream os;
    const int p = r.dims.p;
    os << "A map that reconstructed exact parameters from every realizable target vector, "
          "differentiably, would route each probe-curve tangent through one fixed linear map "
          "from the parameter space R^" << r.q << " (q = m(n+2)+1 = " << r.q
       << ") into R^" << p << ", capping the span of the " << p << " tangents at dimension "
       << r.q << ". ";
    if (r.verdict == "contradiction-witnessed") {
        os << "The sampled family has numerical rank " << r.tangent_rank << " and " << r.tangent_rank
           << " > " << r.q << ", so no such map exists for this instance: contradiction witnessed.";
    } else if (r.verdict == "no-contradiction-at-this-size") {
        os << "Here p = " << p << " <= q = " << r.q
           << ", so a rank-" << r.tangent_rank << " family fits the cap and yields no obstruction.";
    } else if (r.verdict == "rank-deficient-family") {
        os << "Here p = " << p << " > q = " << r.q << " but the sampled family only reached rank "
           << r.tangent_rank << " < " << p
           << "; this sample does not exhibit the obstruction. Resample with a different seed.";
    } else {
        os << "No nondegenerate point family was found within the attempt budget; nothing was measured.";
    }
    return os.str();
}

const char kFooter[] =
    "The closing bound is sometimes quoted as p <= m(m+2)+1; this report uses q = m(n+2)+1, the "
    "parameter-space dimension the tangents factor through, and treats the other form as a "
    "misprint (the two coincide when m = n). Nonvanishing of the sampled determinant certifies "
    "only the instances listed here, not the generic statement.";

WitnessReport analyze_points(const Activation& f, const Activation& g, const Dims& dims,
                             const std::vector<std::vector<double>>& rho,
                             const std::vector<std::vector<double>>& gamma) {
    WitnessReport rep;
    rep.dims = dims;
    rep.f_kind = f.name();
    rep.g_kind = g.name();
    rep.rho = rho;
    rep.gamma = gamma;
    rep.q = dims.q();
    rep.scaled_det = hadamard_scaled_det(g_inner_matrix(g, rho, gamma));

    Mat fam = tangent_family(f, g, dims, rho, gamma);
    rep.sigma = singular_values(fam);
    rep.tangent_rank =
        numerical_rank(rep.sigma, static_cast<size_t>(std::max(dims.p, rep.q)));
    rep.verdict = witness_verdict(rep.tangent_rank, dims.p, rep.q);
    rep.narrative = compose_narrative(rep);
    rep.footer = kFooter;
    return rep;
}

}  // namespace

WitnessReport witness_from_points(const Activation& f, const Activation& g, const Dims& dims,
                                  const std::vector<std::vector<double>>& rho,
                                  const std::vector<std::vector<double>>& gamma) {
    dims.validate();
    check_point_shapes(dims, rho, gamma);
    WitnessReport rep = analyze_points(f, g, dims, rho, gamma);
    rep.search_success = true;
    return rep;
}

WitnessReport unfeasibility_witness(const Activation& f, const Activation& g, const Dims& dims,
                                    uint64_t seed, int max_attempts, double tol) {
    dims.validate();
    PointSearchResult pts = find_nondegenerate_points(g, dims, seed, max_attempts, tol);
    WitnessReport rep;
    if (pts.success) {
        rep = analyze_points(f, g, dims, pts.rho, pts.gamma);
    } else {
        rep.dims = dims;
        rep.f_kind = f.name();
        rep.g_kind = g.name();
        rep.q = dims.q();
        rep.verdict = "search-failed";
        rep.narrative = compose_narrative(rep);
        rep.footer = kFooter;
    }
    rep.seed = seed;
    rep.search_success = pts.success;
    rep.search_attempts = pts.attempts_used;
    return rep;
}

double perfect_map_residual(const Activation& f, const Activation& g, const Dims& dims,
                            const std::vector<std::vector<double>>& gamma, const PiMap& pi,
                            const ParamVec& params0) {
    dims.validate();
    params0.check_shapes(dims);
    std::vector<double> zeta0 = theta(dims, f, g, gamma, params0);
    ParamVec recon = pi(zeta0);
    recon.check_shapes(dims);
    std::vector<double> zeta1 = theta(dims, f, g, gamma, recon);
    double sum = 0.0;
    for (size_t i = 0; i < zeta0.size(); ++i) {
        double d = zeta1[i] - zeta0[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

PiProbeReport pi_point_differentiability_probe(const PiMap& pi, const Activation& f,
                                               const Dims& dims,
                                               const std::vector<std::vector<double>>& gamma,
                                               uint64_t seed, int num_directions) {
    dims.validate();
    if (num_directions < 1) throw std::invalid_argument("num_directions must be >= 1");

    PiProbeReport rep;
    rep.gamma = gamma;
    rep.zeta_star.assign(static_cast<size_t>(dims.p), f.value(0.0));
    rep.steps = {1e-2, 1e-3, 1e-4};

    Rng rng(seed);
    const size_t p = static_cast<size_t>(dims.p);
    std::vector<double> base = pi(rep.zeta_star).flatten();

    for (int di = 0; di < num_directions; ++di) {
        std::vector<double> dir;
        double norm = 0.0;
        do {
            dir = rng.uniform_vec(p, -1.0, 1.0);
            norm = l2(dir);
        } while (norm < 1e-8);
        for (double& x : dir) x /= norm;

        std::vector<std::vector<double>> estimates;
        for (double h : rep.steps) {
            std::vector<double> plus(rep.zeta_star), minus(rep.zeta_star);
            for (size_t i = 0; i < p; ++i) {
                plus[i] += h * dir[i];
                minus[i] -= h * dir[i];
            }
            std::vector<double> fwd = pi(plus).flatten();
            std::vector<double> bwd = pi(minus).flatten();
            for (size_t i = 0; i < fwd.size(); ++i) fwd[i] = (fwd[i] - base[i]) / h;
            for (size_t i = 0; i < bwd.size(); ++i) bwd[i] = (base[i] - bwd[i]) / h;
            estimates.push_back(std::move(fwd));
            estimates.push_back(std::move(bwd));
        }

        double denom = 1e-12;
        for (const auto& e : estimates) denom = std::max(denom, l2(e));
        double worst = 0.0;
        for (size_t i = 0; i < estimates.size(); ++i) {
            for (size_t j = i + 1; j < estimates.size(); ++j) {
                double diff2 = 0.0;
                for (size_t k = 0; k < estimates[i].size(); ++k) {
                    double d = estimates[i][k] - estimates[j][k];
                    diff2 += d * d;
                }
                worst = std::max(worst, std::sqrt(diff2) / denom);
            }
        }
        rep.directions.push_back({std::move(dir), worst});
        rep.worst_deviation = std::max(rep.worst_deviation, worst);
    }
    return rep;
}

}  // namespace learnlab
