#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "riesz/c00.hpp"

using namespace riesz;
using namespace riesz::test;

namespace {

using RatMap = FinSuppMap<Rational>;

RatMap rmap(std::vector<std::pair<const char*, long>> entries) {
    RatMap out;
    for (auto [i, v] : entries) out.set(Index(i), R(v));
    return out;
}

C00Expr<Rational> ind(const char* i, long v) {
    return C00Expr<Rational>::leaf(IndicatorSum<Rational>{{{Index(i), R(v)}}});
}

} // namespace

TEST_CASE("pointwise operations") {
    const RatMap f = rmap({{"a", 1}, {"c", 2}}), g = rmap({{"b", 3}, {"c", 1}});
    CHECK(join(f, g) == rmap({{"a", 1}, {"b", 3}, {"c", 2}}));
    CHECK(c00_pointwise(PointwiseOp::add, rmap({{"a", 1}}), rmap({{"a", -1}})).empty());
    CHECK(meet(f, g) == rmap({{"c", 1}}));
    CHECK(c00_pointwise(PointwiseOp::scale, f, RatMap(), R(-2)) == rmap({{"a", -2}, {"c", -4}}));
    CHECK(abs(rmap({{"a", -3}})) == rmap({{"a", 3}}));

    FinSuppMap<PiecewisePoly> p, q;
    p.set(Index("a"), PP(Polynomial::identity()));
    q.set(Index("a"), PP(P({R(2), R(-1)})));
    FinSuppMap<PiecewisePoly> expected;
    expected.set(Index("a"), PP({P({R(2), R(-1)}), Polynomial::identity()}, {R(0), R(1)}));
    CHECK(join(p, q) == expected);
}

TEST_CASE("finite suprema") {
    const RatMap f = rmap({{"a", 1}, {"c", 2}}), g = rmap({{"b", 3}, {"c", 1}});
    CHECK(c00_sup<Rational>({f, g}) == rmap({{"a", 1}, {"b", 3}, {"c", 2}}));
    CHECK(c00_sup<Rational>({f}) == f);
    CHECK_THROWS_AS(c00_sup<Rational>({}), PreconditionError);

    std::mt19937 rng(17);
    std::uniform_int_distribution<int> val(-5, 5), idx(0, 6);
    for (int n = 0; n < 20; ++n) {
        std::vector<RatMap> family(5);
        for (auto& m : family)
            for (int k = 0; k < 4; ++k) m.set(Index(std::string(1, char('a' + idx(rng)))), R(val(rng)));
        RatMap forward = family[0], backward = family[4];
        for (int k = 1; k < 5; ++k) forward = join(forward, family[k]);
        for (int k = 3; k >= 0; --k) backward = join(family[k], backward);
        CHECK(c00_sup(family) == forward);
        CHECK(c00_sup(family) == backward);
    }
}

TEST_CASE("from tensor") {
    IndicatorSum<Rational> s{{{Index("a"), R(5)}, {Index("b"), R(7)}}};
    CHECK(c00_from_tensor(C00Expr<Rational>::leaf(s)) == rmap({{"a", 5}, {"b", 7}}));
    CHECK(c00_from_tensor(C00Expr<Rational>::sum(ind("a", 1), ind("a", -1))).empty());
    CHECK(c00_from_tensor(C00Expr<Rational>::join(ind("a", 2), ind("a", 3))) == rmap({{"a", 3}}));
    CHECK(c00_from_tensor(C00Expr<Rational>::abs(ind("a", -3))) == rmap({{"a", 3}}));
}

TEST_CASE("disjointness matches an empty meet for nonnegative maps") {
    CHECK(c00_disjoint(rmap({{"a", 1}}), rmap({{"b", 1}})));
    CHECK_FALSE(c00_disjoint(rmap({{"a", 1}}), rmap({{"a", 2}})));
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> val(0, 3), idx(0, 5);
    for (int n = 0; n < 100; ++n) {
        RatMap f, g;
        for (int k = 0; k < 3; ++k) {
            f.set(Index(std::to_string(idx(rng))), R(val(rng)));
            g.set(Index(std::to_string(idx(rng))), R(val(rng)));
        }
        bool brute = true;
        for (const auto& i : f.support())
            for (const auto& j : g.support())
                if (i == j) brute = false;
        CHECK(c00_disjoint(f, g) == brute);
        CHECK(meet(f, g).empty() == brute);
    }
}
