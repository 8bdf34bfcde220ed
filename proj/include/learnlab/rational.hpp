#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace learnlab {

// Exact rational scalar. GMP's mpq_class keeps numerator/denominator as
// arbitrary-precision integers, always in lowest terms once canonicalized.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "num/den" or a bare integer "num".
Rat rat_parse(std::string_view text);

// Canonical "num/den" form, denominator always present ("3/1", "-1/2").
std::string rat_str(const Rat& q);

inline double rat_double(const Rat& q) { return q.get_d(); }

inline bool rat_is_zero(const Rat& q) { return sgn(q) == 0; }

}  // namespace learnlab
