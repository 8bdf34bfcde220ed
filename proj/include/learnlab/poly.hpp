#pragma once

#include <string>
#include <vector>

#include "learnlab/rational.hpp"

namespace learnlab {

// Univariate polynomial with exact rational coefficients, lowest degree
// first. The zero polynomial is the empty coefficient list; any other
// representation keeps a nonzero leading coefficient.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rat> coeffs);

    static RationalPoly zero() { return RationalPoly(); }
    static RationalPoly constant(const Rat& c);
    // The monomial T.
    static RationalPoly identity();

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int k) const;
    Rat leading_coeff() const;

    RationalPoly derivative() const;
    RationalPoly operator+(const RationalPoly& other) const;
    RationalPoly operator-(const RationalPoly& other) const;
    RationalPoly operator*(const RationalPoly& other) const;
    bool operator==(const RationalPoly& other) const { return coeffs_ == other.coeffs_; }

    Rat eval(const Rat& x) const;
    // Horner in binary64 with coefficients rounded to double.
    double eval_double(double x) const;

    // Quotient and remainder of division by (T - r); the remainder is eval(r).
    std::pair<RationalPoly, Rat> divide_by_linear(const Rat& r) const;

    // Largest k with (T - r)^k dividing this polynomial. Rejects the zero
    // polynomial.
    int root_multiplicity(const Rat& r) const;

    std::string to_string() const;  // e.g. "1 - 3*T^2 + 2*T^3"

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

}  // namespace learnlab
