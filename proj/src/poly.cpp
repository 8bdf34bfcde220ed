#include "learnlab/poly.hpp"

#include <sstream>
#include <utility>

namespace learnlab {

RationalPoly::RationalPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void RationalPoly::normalize() {
    while (!coeffs_.empty() && rat_is_zero(coeffs_.back())) coeffs_.pop_back();
}

RationalPoly RationalPoly::constant(const Rat& c) {
    return RationalPoly(std::vector<Rat>{c});
}

RationalPoly RationalPoly::identity() {
    return RationalPoly(std::vector<Rat>{rat(0), rat(1)});
}

Rat RationalPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return rat(0);
    return coeffs_[static_cast<size_t>(k)];
}

Rat RationalPoly::leading_coeff() const {
    if (is_zero()) return rat(0);
    return coeffs_.back();
}

RationalPoly RationalPoly::derivative() const {
    if (coeffs_.size() <= 1) return zero();
    std::vector<Rat> out(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * rat(static_cast<long>(k));
    return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator+(const RationalPoly& other) const {
    std::vector<Rat> out(std::max(coeffs_.size(), other.coeffs_.size()), rat(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
    for (size_t k = 0; k < other.coeffs_.size(); ++k) out[k] += other.coeffs_[k];
    return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator-(const RationalPoly& other) const {
    std::vector<Rat> out(std::max(coeffs_.size(), other.coeffs_.size()), rat(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
    for (size_t k = 0; k < other.coeffs_.size(); ++k) out[k] -= other.coeffs_[k];
    return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator*(const RationalPoly& other) const {
    if (is_zero() || other.is_zero()) return zero();
    std::vector<Rat> out(coeffs_.size() + other.coeffs_.size() - 1, rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    return RationalPoly(std::move(out));
}

Rat RationalPoly::eval(const Rat& x) const {
    Rat acc = rat(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RationalPoly::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + rat_double(*it);
    return acc;
}

std::pair<RationalPoly, Rat> RationalPoly::divide_by_linear(const Rat& r) const {
    if (is_zero()) return {zero(), rat(0)};
    // Synthetic division: remainder equals eval(r).
    std::vector<Rat> quot(coeffs_.size() - 1, rat(0));
    Rat carry = coeffs_.back();
    for (size_t k = coeffs_.size() - 1; k-- > 0;) {
        quot[k] = carry;
        carry = coeffs_[k] + carry * r;
    }
    return {RationalPoly(std::move(quot)), carry};
}

int RationalPoly::root_multiplicity(const Rat& r) const {
    if (is_zero()) throw std::invalid_argument("root multiplicity of the zero polynomial");
    int mult = 0;
    RationalPoly cur = *this;
    while (true) {
        auto [quot, rem] = cur.divide_by_linear(r);
        if (!rat_is_zero(rem)) return mult;
        ++mult;
        cur = std::move(quot);
        if (cur.is_zero()) return mult;  // full power of (T - r) consumed
    }
}

std::string RationalPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rat& c = coeffs_[k];
        if (rat_is_zero(c)) continue;
        Rat a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (k == 0 || !unit) os << a.get_str();
        if (k >= 1) {
            if (!unit) os << "*";
            os << "T";
            if (k >= 2) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace learnlab
