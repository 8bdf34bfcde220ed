#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "learnlab/poly.hpp"
#include "learnlab/rational.hpp"

namespace learnlab {

enum class ActKind { Logistic, Tanh, Sin };

// Data for activations satisfying g' = G(g) with deg G >= 1: the polynomial
// G and the exact value g(0). Exactness of g0 matters downstream, where the
// index selection tests P_k(g(0)) != 0 must be free of rounding.
struct AlgDiffData {
    RationalPoly G;
    Rat g0;
};

class Activation {
public:
    explicit Activation(ActKind kind) : kind_(kind) {}

    static Activation from_name(std::string_view name);

    ActKind kind() const { return kind_; }
    const char* name() const;

    double value(double u) const;
    double deriv(double u) const;

    // Present for Logistic (G = T - T^2, g0 = 1/2) and Tanh (G = 1 - T^2,
    // g0 = 0); absent for Sin, whose derivative is not a polynomial in sin.
    std::optional<AlgDiffData> algdiff() const;

private:
    ActKind kind_;
};

std::optional<AlgDiffData> algdiff_data(ActKind kind);

}  // namespace learnlab
