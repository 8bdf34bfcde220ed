#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace learnlab {

// Seeded generator with fully specified output. Uniform doubles are
// produced from the top 53 bits of the mt19937_64 stream, so identical
// seeds give identical samples on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1).
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    std::vector<double> uniform_vec(size_t count, double lo, double hi) {
        std::vector<double> out(count);
        for (double& x : out) x = uniform(lo, hi);
        return out;
    }

private:
    std::mt19937_64 eng_;
};

// Stateless seed derivation (splitmix64 over master ^ golden-ratio stream),
// so per-run seeds are decoupled and reproducible.
uint64_t derive_seed(uint64_t master, uint64_t stream);

// `count` points in [lo, hi]^dim with pairwise Euclidean distance >= min_dist,
// by per-point rejection. Throws after max_tries rejected draws.
std::vector<std::vector<double>> sample_distinct_points(Rng& rng, size_t count, size_t dim,
                                                        double lo, double hi,
                                                        double min_dist = 1e-6,
                                                        int max_tries = 10000);

// Scalar nodes with pairwise separation >= min_dist.
std::vector<double> sample_distinct_scalars(Rng& rng, size_t count, double lo, double hi,
                                            double min_dist = 1e-6, int max_tries = 10000);

}  // namespace learnlab
