#include "learnlab/activation.hpp"

#include <cmath>
#include <stdexcept>

namespace learnlab {

Activation Activation::from_name(std::string_view name) {
    if (name == "logistic") return Activation(ActKind::Logistic);
    if (name == "tanh") return Activation(ActKind::Tanh);
    if (name == "sin") return Activation(ActKind::Sin);
    throw std::invalid_argument("unknown activation '" + std::string(name) +
                                "' (expected logistic, tanh or sin)");
}

const char* Activation::name() const {
    switch (kind_) {
        case ActKind::Logistic: return "logistic";
        case ActKind::Tanh: return "tanh";
        case ActKind::Sin: return "sin";
    }
    return "?";
}

double Activation::value(double u) const {
    switch (kind_) {
        case ActKind::Logistic:
            // Branch form avoids overflow of exp for large |u|.
            if (u >= 0.0) return 1.0 / (1.0 + std::exp(-u));
            {
                double e = std::exp(u);
                return e / (1.0 + e);
            }
        case ActKind::Tanh: return std::tanh(u);
        case ActKind::Sin: return std::sin(u);
    }
    return 0.0;
}

double Activation::deriv(double u) const {
    switch (kind_) {
        case ActKind::Logistic: {
            double g = value(u);
            return g * (1.0 - g);
        }
        case ActKind::Tanh: {
            double g = std::tanh(u);
            return 1.0 - g * g;
        }
        case ActKind::Sin: return std::cos(u);
    }
    return 0.0;
}

std::optional<AlgDiffData> Activation::algdiff() const { return algdiff_data(kind_); }

std::optional<AlgDiffData> algdiff_data(ActKind kind) {
    switch (kind) {
        case ActKind::Logistic:
            // logistic' = g(1 - g), i.e. G = T - T^2
            return AlgDiffData{RationalPoly({rat(0), rat(1), rat(-1)}), rat(1, 2)};
        case ActKind::Tanh:
            // tanh' = 1 - g^2, i.e. G = 1 - T^2
            return AlgDiffData{RationalPoly({rat(1), rat(0), rat(-1)}), rat(0)};
        case ActKind::Sin: return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace learnlab
