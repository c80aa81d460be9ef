#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "riesz/c00.hpp"
#include "riesz/finitedim.hpp"
#include "riesz/piecewise.hpp"
#include "riesz/tensor.hpp"

namespace riesz::check {

/// Random values for the property suites. Every generator draws only from the
/// engine it owns, so a seed fixes the whole sequence.
class Gen {
public:
    explicit Gen(std::uint32_t seed) : rng_(seed) {}

    long integer(long lo, long hi);
    bool coin() { return integer(0, 1) == 1; }
    /// n / d with n in [lo * d, hi * d] and d in [1, max_den].
    Rational rational(long lo, long hi, long max_den = 4);
    Rational nonzero_rational(long lo, long hi, long max_den = 4);
    Polynomial poly(int max_degree, long bound, long max_den = 1);

    /// 0 followed by pieces - 1 increasing multiples of 1/2 in (0, 6].
    std::vector<Rational> breakpoints(std::size_t pieces);

    /// Continuous and affine on each piece, with values in [-10, 10] at breakpoints.
    PiecewisePoly affine_pp(std::size_t max_pieces);
    /// Continuous with pieces of degree <= max_degree: each new piece is the
    /// previous one's value at the breakpoint plus (x - t) * w(x).
    PiecewisePoly continuous_pp(std::size_t max_pieces, int max_degree);
    /// Member of E_x: first piece x * q(x), affine last piece.
    PiecewisePoly ideal_member(std::size_t max_pieces, int max_degree);
    /// f(0) = 0 and a last piece of degree exactly 2.
    PiecewisePoly quadratic_tail(std::size_t max_pieces, int max_degree);

    /// Three functions W * A, W * B, W * C with W a product of rational linear
    /// factors and a piecewise affine function, and A, B, C piecewise affine on
    /// shared breakpoints. Every difference of pieces then has rational roots.
    std::vector<PiecewisePoly> factored_triple(std::size_t max_pieces);

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

/// Affine interpolation of `values` at `bps`, continued with `slope` past the last breakpoint.
std::vector<Polynomial> affine_pieces(const std::vector<Rational>& bps, const std::vector<Rational>& values,
                                      const Rational& slope);

} // namespace riesz::check
