#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

#include "eigencycle/errors.hpp"

namespace eigencycle {

// Exact arithmetic for integer-valued games. Payoffs and rest points of
// small matrix games stay well inside 64-bit numerators/denominators.
using Rational = boost::rational<std::int64_t>;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Solves A x = b exactly by Gaussian elimination with partial (nonzero)
// pivoting. Throws SingularDesign when A is singular.
RationalVector solve_rational(RationalMatrix a, RationalVector b);

}  // namespace eigencycle
