#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "riesz/piecewise.hpp"
#include "riesz/polynomial.hpp"
#include "riesz/rational.hpp"

namespace riesz::test {

inline Rational R(long n, long d = 1) { return Rational(n, d); }

/// Polynomial from coefficients, lowest degree first.
inline Polynomial P(std::initializer_list<Rational> c) { return Polynomial(c); }

inline PiecewisePoly PP(std::initializer_list<Polynomial> pieces, std::initializer_list<Rational> bps) {
    return make_pp(std::vector<Rational>(bps), std::vector<Polynomial>(pieces));
}

inline PiecewisePoly PP(const Polynomial& p) { return PiecewisePoly(p); }

/// Rationals 0, 1/4, ..., hi.
inline std::vector<Rational> quarter_grid(long hi) {
    std::vector<Rational> out;
    for (long k = 0; k <= 4 * hi; ++k) out.emplace_back(k, 4);
    return out;
}

} // namespace riesz::test
