#pragma once

#include <string>
#include <vector>

#include "learnlab/poly.hpp"
#include "learnlab/rational.hpp"

namespace learnlab {

// One entry of the recursion P_0 = T, P_{k+1} = P_k' * G, together with the
// exact value P_k(g0).
struct PkEntry {
    int k = 0;
    RationalPoly poly;
    Rat value_at_g0;
};

struct PkSequence {
    std::string kind;  // activation name, or "custom"
    RationalPoly G;
    Rat g0;
    std::vector<PkEntry> entries;  // k = 0 .. kmax
};

// Hard cap on how far the recursion may be driven; coefficient bit-size
// grows superlinearly in k.
inline constexpr int kPkMaxCap = 256;
inline constexpr int kPkDefaultMax = 50;

// Requires deg G >= 1 and G(g0) != 0; rejects violations. Every P_k in the
// result is a nonzero polynomial.
PkSequence pk_sequence(const RationalPoly& G, const Rat& g0, int kmax = kPkDefaultMax,
                       const std::string& kind = "custom");

// The p smallest indices k with P_k(g0) != 0, in increasing order. Whenever
// P_k(g0) = 0 with multiplicity m_k = mult(P_k, g0), the value P_{k+m_k}(g0)
// is nonzero; a scan that outruns this bound reports an internal invariant
// violation instead of looping.
std::vector<int> select_indices(const RationalPoly& G, const Rat& g0, int p);

// Exact evaluation certificate for det(c_j * a_i^{k_j}).
struct DetCertificate {
    bool nonzero = false;  // false means: these nodes degenerate, resample
    Rat det;
};

// Requires c_j != 0, exponents strictly increasing and nonnegative, nodes
// positive and pairwise distinct. Determinant computed by exact fraction
// elimination.
DetCertificate vandermonde_like_det(const std::vector<Rat>& scalings,
                                    const std::vector<int>& exponents,
                                    const std::vector<Rat>& nodes);

}  // namespace learnlab
