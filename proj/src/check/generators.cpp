#include "generators.hpp"

#include <algorithm>
#include <set>

namespace riesz::check {

namespace {

Polynomial linear(const Rational& root) { return Polynomial{-root, Rational(1)}; }

} // namespace

long Gen::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

Rational Gen::rational(long lo, long hi, long max_den) {
    const long d = integer(1, max_den);
    return Rational(integer(lo * d, hi * d), d);
}

Rational Gen::nonzero_rational(long lo, long hi, long max_den) {
    while (true)
        if (Rational r = rational(lo, hi, max_den); !r.is_zero()) return r;
}

Polynomial Gen::poly(int max_degree, long bound, long max_den) {
    std::vector<Rational> c;
    const long degree = integer(0, max_degree);
    for (long k = 0; k <= degree; ++k) c.push_back(rational(-bound, bound, max_den));
    return Polynomial(std::move(c));
}

std::vector<Rational> Gen::breakpoints(std::size_t pieces) {
    std::set<long> halves;
    while (halves.size() + 1 < pieces) halves.insert(integer(1, 12));
    std::vector<Rational> out{Rational(0)};
    for (long h : halves) out.emplace_back(h, 2);
    return out;
}

std::vector<Polynomial> affine_pieces(const std::vector<Rational>& bps, const std::vector<Rational>& values,
                                      const Rational& slope) {
    std::vector<Polynomial> pieces;
    for (std::size_t i = 0; i < bps.size(); ++i) {
        const Rational s = i + 1 < bps.size() ? (values[i + 1] - values[i]) / (bps[i + 1] - bps[i]) : slope;
        pieces.push_back(Polynomial{values[i] - s * bps[i], s});
    }
    return pieces;
}

PiecewisePoly Gen::affine_pp(std::size_t max_pieces) {
    const auto bps = breakpoints(static_cast<std::size_t>(integer(1, static_cast<long>(max_pieces))));
    std::vector<Rational> values;
    for (std::size_t i = 0; i < bps.size(); ++i) values.emplace_back(integer(-10, 10));
    return make_pp(bps, affine_pieces(bps, values, Rational(integer(-10, 10))));
}

PiecewisePoly Gen::continuous_pp(std::size_t max_pieces, int max_degree) {
    const auto bps = breakpoints(static_cast<std::size_t>(integer(1, static_cast<long>(max_pieces))));
    std::vector<Polynomial> pieces{poly(max_degree, 10)};
    for (std::size_t i = 1; i < bps.size(); ++i) {
        const Rational& t = bps[i];
        pieces.push_back(Polynomial::constant(pieces.back()(t)) + linear(t) * poly(max_degree - 1, 10));
    }
    return make_pp(bps, std::move(pieces));
}

PiecewisePoly Gen::ideal_member(std::size_t max_pieces, int max_degree) {
    const auto bps = breakpoints(static_cast<std::size_t>(integer(1, static_cast<long>(max_pieces))));
    std::vector<Polynomial> pieces;
    const int first_degree = bps.size() == 1 ? 0 : max_degree - 1;
    pieces.push_back(Polynomial::identity() * poly(first_degree, 10));
    for (std::size_t i = 1; i < bps.size(); ++i) {
        const Rational& t = bps[i];
        const int degree = i + 1 == bps.size() ? 0 : max_degree - 1;
        pieces.push_back(Polynomial::constant(pieces.back()(t)) + linear(t) * poly(degree, 10));
    }
    return make_pp(bps, std::move(pieces));
}

PiecewisePoly Gen::quadratic_tail(std::size_t max_pieces, int max_degree) {
    const PiecewisePoly base = ideal_member(max_pieces, max_degree);
    std::vector<Rational> bps = base.breakpoints();
    std::vector<Polynomial> pieces = base.pieces();
    const Rational t = bps.back() + Rational(integer(1, 4), 2);
    const Polynomial w{rational(-10, 10), nonzero_rational(-10, 10)};
    pieces.push_back(Polynomial::constant(pieces.back()(t)) + linear(t) * w);
    bps.push_back(t);
    return make_pp(std::move(bps), std::move(pieces));
}

std::vector<PiecewisePoly> Gen::factored_triple(std::size_t max_pieces) {
    const auto bps = breakpoints(static_cast<std::size_t>(integer(1, static_cast<long>(max_pieces))));
    const long roots = integer(0, 2);
    Polynomial w = Polynomial::constant(nonzero_rational(-3, 3, 2));
    for (long k = 0; k < roots; ++k) w = w * linear(rational(0, 6, 4));
    auto random_affine = [&](long bound) {
        std::vector<Rational> values;
        for (std::size_t i = 0; i < bps.size(); ++i) values.emplace_back(integer(-bound, bound));
        return affine_pieces(bps, values, Rational(integer(-bound, bound)));
    };
    std::vector<Polynomial> common(bps.size(), w);
    if (coin()) {
        const auto s = random_affine(5);
        for (std::size_t i = 0; i < bps.size(); ++i) common[i] = common[i] * s[i];
    }
    std::vector<PiecewisePoly> out;
    for (int k = 0; k < 3; ++k) {
        const auto a = random_affine(10);
        std::vector<Polynomial> pieces;
        for (std::size_t i = 0; i < bps.size(); ++i) pieces.push_back(common[i] * a[i]);
        out.push_back(make_pp(bps, std::move(pieces)));
    }
    return out;
}

} // namespace riesz::check
