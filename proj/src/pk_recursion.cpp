#include "learnlab/pk_recursion.hpp"

#include <stdexcept>

namespace learnlab {

namespace {

void check_hypotheses(const RationalPoly& G, const Rat& g0) {
    if (G.degree() < 1) throw std::invalid_argument("pk recursion requires deg G >= 1");
    if (rat_is_zero(G.eval(g0))) throw std::invalid_argument("pk recursion requires G(g0) != 0");
}

}  // namespace

PkSequence pk_sequence(const RationalPoly& G, const Rat& g0, int kmax, const std::string& kind) {
    check_hypotheses(G, g0);
    if (kmax < 0) throw std::invalid_argument("kmax must be nonnegative");
    if (kmax > kPkMaxCap) throw std::invalid_argument("kmax exceeds the cap of " + std::to_string(kPkMaxCap));

    PkSequence seq;
    seq.kind = kind;
    seq.G = G;
    seq.g0 = g0;
    seq.entries.reserve(static_cast<size_t>(kmax) + 1);

    RationalPoly pk = RationalPoly::identity();
    for (int k = 0; k <= kmax; ++k) {
        if (pk.is_zero()) throw std::logic_error("P_k vanished, recursion hypotheses violated");
        seq.entries.push_back(PkEntry{k, pk, pk.eval(g0)});
        if (k < kmax) pk = pk.derivative() * G;
    }
    return seq;
}

std::vector<int> select_indices(const RationalPoly& G, const Rat& g0, int p) {
    check_hypotheses(G, g0);
    if (p < 1) throw std::invalid_argument("p must be >= 1");

    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(p));

    RationalPoly pk = RationalPoly::identity();
    int guaranteed_by = -1;  // index by which a nonzero value must appear
    for (int k = 0; static_cast<int>(chosen.size()) < p; ++k) {
        if (k > kPkMaxCap)
            throw std::logic_error("index selection exceeded the recursion cap");
        Rat val = pk.eval(g0);
        if (!rat_is_zero(val)) {
            chosen.push_back(k);
            guaranteed_by = -1;
        } else {
            if (guaranteed_by >= 0 && k >= guaranteed_by)
                throw std::logic_error(
                    "P_{k+m_k}(g0) vanished: internal invariant violation at k=" + std::to_string(k));
            // P_k = Q_k (T - g0)^{m_k} with Q_k(g0) != 0 forces
            // P_{k+m_k}(g0) = Q_k(g0) G(g0)^{m_k} != 0.
            int mult = pk.root_multiplicity(g0);
            int bound = k + mult;
            if (guaranteed_by < 0 || bound < guaranteed_by) guaranteed_by = bound;
        }
        pk = pk.derivative() * G;
    }
    return chosen;
}

DetCertificate vandermonde_like_det(const std::vector<Rat>& scalings,
                                    const std::vector<int>& exponents,
                                    const std::vector<Rat>& nodes) {
    const size_t p = scalings.size();
    if (p == 0 || exponents.size() != p || nodes.size() != p)
        throw std::invalid_argument("scalings, exponents and nodes must have equal positive length");
    for (const Rat& c : scalings)
        if (rat_is_zero(c)) throw std::invalid_argument("column scalings must be nonzero");
    for (size_t j = 0; j + 1 < p; ++j)
        if (exponents[j] >= exponents[j + 1])
            throw std::invalid_argument("exponents must be strictly increasing");
    if (exponents[0] < 0) throw std::invalid_argument("exponents must be nonnegative");
    for (const Rat& a : nodes)
        if (sgn(a) <= 0) throw std::invalid_argument("nodes must be positive");
    for (size_t i = 0; i < p; ++i)
        for (size_t j = i + 1; j < p; ++j)
            if (nodes[i] == nodes[j]) throw std::invalid_argument("nodes must be pairwise distinct");

    // M[i][j] = c_j * a_i^{k_j}, then exact Gaussian elimination.
    std::vector<std::vector<Rat>> mat(p, std::vector<Rat>(p, rat(0)));
    for (size_t i = 0; i < p; ++i) {
        for (size_t j = 0; j < p; ++j) {
            Rat pw = rat(1);
            for (int e = 0; e < exponents[j]; ++e) pw *= nodes[i];
            mat[i][j] = scalings[j] * pw;
        }
    }

    Rat det = rat(1);
    for (size_t col = 0; col < p; ++col) {
        size_t pivot = col;
        while (pivot < p && rat_is_zero(mat[pivot][col])) ++pivot;
        if (pivot == p) return DetCertificate{false, rat(0)};
        if (pivot != col) {
            std::swap(mat[pivot], mat[col]);
            det = -det;
        }
        det *= mat[col][col];
        for (size_t row = col + 1; row < p; ++row) {
            if (rat_is_zero(mat[row][col])) continue;
            Rat factor = mat[row][col] / mat[col][col];
            for (size_t j = col; j < p; ++j) mat[row][j] -= factor * mat[col][j];
        }
    }
    return DetCertificate{!rat_is_zero(det), det};
}

}  // namespace learnlab
