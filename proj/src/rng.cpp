#include "learnlab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace learnlab {

uint64_t derive_seed(uint64_t master, uint64_t stream) {
    uint64_t z = master ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

double dist2(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

}  // namespace

std::vector<std::vector<double>> sample_distinct_points(Rng& rng, size_t count, size_t dim,
                                                        double lo, double hi, double min_dist,
                                                        int max_tries) {
    std::vector<std::vector<double>> out;
    out.reserve(count);
    const double min_d2 = min_dist * min_dist;
    int tries = 0;
    while (out.size() < count) {
        if (++tries > max_tries) throw std::runtime_error("distinct point sampling budget exhausted");
        std::vector<double> cand = rng.uniform_vec(dim, lo, hi);
        bool ok = true;
        for (const auto& prev : out) {
            if (dist2(cand, prev) < min_d2) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(std::move(cand));
    }
    return out;
}

std::vector<double> sample_distinct_scalars(Rng& rng, size_t count, double lo, double hi,
                                            double min_dist, int max_tries) {
    std::vector<double> out;
    out.reserve(count);
    int tries = 0;
    while (out.size() < count) {
        if (++tries > max_tries) throw std::runtime_error("distinct scalar sampling budget exhausted");
        double cand = rng.uniform(lo, hi);
        bool ok = true;
        for (double prev : out) {
            if (std::fabs(cand - prev) < min_dist) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(cand);
    }
    return out;
}

}  // namespace learnlab
