#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace riesz;
using namespace riesz::test;

namespace {

const Polynomial kX = Polynomial::identity();

/// Pointwise oracle: `f` agrees with `op(g, h)` on the quarter grid of [0, 4].
template <typename Op>
bool agrees_on_grid(const PiecewisePoly& f, const PiecewisePoly& g, const PiecewisePoly& h, Op op) {
    for (const Rational& x : quarter_grid(4))
        if (f(x) != op(g(x), h(x))) return false;
    return true;
}

const auto kMax = [](const Rational& a, const Rational& b) { return std::max(a, b); };

} // namespace

TEST_CASE("make_pp validation") {
    CHECK(PP({kX}, {R(0)}) == PP(kX));
    CHECK_NOTHROW(PP({P({R(0), R(0), R(1)}), P({R(-1), R(2)})}, {R(0), R(1)}));
    CHECK_NOTHROW(PP({P({R(0), R(0), R(1)}), kX}, {R(0), R(1)}));
    try {
        PP({P({R(0), R(0), R(1)}), P({R(5), R(1)})}, {R(0), R(1)});
        FAIL("expected a discontinuity");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).starts_with("discontinuity at breakpoint 1"));
        CHECK(e.index() == 1);
    }
    CHECK_THROWS_WITH(PP({kX}, {R(1)}), "first breakpoint must be 0");
    try {
        PP({kX, kX, kX}, {R(0), R(2), R(1)});
        FAIL("expected non-monotone breakpoints");
    } catch (const ValidationError& e) {
        CHECK(e.index() == 2);
    }
    CHECK_THROWS_AS(make_pp({R(0), R(1)}, {kX}), ValidationError);
}

TEST_CASE("canonical form merges identical neighbours") {
    const PiecewisePoly f = PP({kX, kX, kX}, {R(0), R(1), R(2)});
    CHECK(f.size() == 1);
    CHECK(f == PP(kX));
}

TEST_CASE("vector operations and evaluation") {
    const PiecewisePoly run = PP({P({R(0), R(0), R(1)}), P({R(-1), R(2)})}, {R(0), R(1)});
    CHECK((PP(kX) + PP(-kX)).is_zero());
    CHECK(run(R(3)) == R(5));
    CHECK(scale(R(1, 2), PP(kX))(R(4)) == R(2));
    CHECK_THROWS_AS(run(R(-1)), DomainError);
    CHECK(run.str() == "pp [0: x^2][1: 2*x - 1]");
}

TEST_CASE("join, meet and abs") {
    const PiecewisePoly x = PP(kX), two_minus_x = PP(P({R(2), R(-1)}));
    const PiecewisePoly j = join(x, two_minus_x);
    CHECK(j == PP({P({R(2), R(-1)}), kX}, {R(0), R(1)}));
    CHECK(agrees_on_grid(j, x, two_minus_x, kMax));
    const PiecewisePoly a = abs(PP(P({R(-1), R(1)})));
    CHECK(a == PP({P({R(1), R(-1)}), P({R(-1), R(1)})}, {R(0), R(1)}));
    CHECK(join(j, j) == j);
    CHECK(meet(x, two_minus_x) == PP({kX, P({R(2), R(-1)})}, {R(0), R(1)}));
}

TEST_CASE("irrational crossings are reported with an isolating interval") {
    const PiecewisePoly x2 = PP(P({R(0), R(0), R(1)})), two = PP(Polynomial::constant(R(2)));
    try {
        join(x2, two);
        FAIL("expected an irrational crossing");
    } catch (const IrrationalCrossing& e) {
        CHECK(e.where().lo < e.where().hi);
        CHECK(e.where().lo * e.where().lo < R(2));
        CHECK(e.where().hi * e.where().hi > R(2));
    }
}

TEST_CASE("tangency at an irrational point does not split") {
    // (x^2 - 2)^2 touches zero at sqrt 2 without changing sign.
    const Polynomial q = P({R(-2), R(0), R(1)});
    const PiecewisePoly f = PP(q * q);
    CHECK(join(f, PiecewisePoly()) == f);
    CHECK(meet(f, PiecewisePoly()).is_zero());
}

TEST_CASE("find_negative and leq") {
    CHECK(find_negative(PP(kX)) == std::nullopt);
    const auto w = find_negative(PP(P({R(0), R(1), R(-1)})));
    REQUIRE(w);
    CHECK(PP(P({R(0), R(1), R(-1)}))(*w) < R(0));
    CHECK(leq(PP(kX), PP(P({R(0), R(2)}))));
    CHECK_FALSE(leq(PP(P({R(0), R(2)})), PP(kX)));
}

TEST_CASE("ideal membership in E_x") {
    const PiecewisePoly run = PP({P({R(0), R(0), R(1)}), P({R(-1), R(2)})}, {R(0), R(1)});
    const IdealMembership m = ideal_member_linear(run);
    REQUIRE(m);
    CHECK(*m.lambda == R(2));
    // Grid oracle: |f(x)| <= 2x at 1000 points.
    for (long k = 0; k < 1000; ++k) {
        const Rational xk(k, 100);
        CHECK(run(xk).abs() <= R(2) * xk);
    }
    const IdealMembership one = ideal_member_linear(PP(Polynomial::constant(R(1))));
    CHECK_FALSE(one);
    CHECK(one.reason == "f(0) = 1 is nonzero");
    const IdealMembership sq = ideal_member_linear(PP(P({R(0), R(0), R(1)})));
    CHECK_FALSE(sq);
    CHECK(sq.reason == "last piece degree 2");
    CHECK(*ideal_member_linear(PiecewisePoly()).lambda >= R(0));
}

TEST_CASE("eventual affinity") {
    const PiecewisePoly run = PP({P({R(0), R(0), R(1)}), P({R(-1), R(2)})}, {R(0), R(1)});
    const EventualAffinity a = eventual_affinity(run, R(2));
    CHECK(a.k == R(1));
    CHECK(a.tail_second_derivative.is_zero());
    CHECK(eventual_affinity(PP(kX), R(1)).k == R(0));
    try {
        eventual_affinity(PP(P({R(0), R(0), R(1)})), R(1));
        FAIL("expected a bound violation");
    } catch (const BoundViolation& e) {
        CHECK(e.witness() == R(2));
    }
}

TEST_CASE("equality") {
    CHECK(join(PP(kX), PP(P({R(2), R(-1)}))) == PP({P({R(2), R(-1)}), kX}, {R(0), R(1)}));
    CHECK(PP(kX) == PP(kX + Polynomial()));
    CHECK_FALSE(PP(kX) == PP(P({R(0), R(2)})));
}

TEST_CASE("derivative forms") {
    const PiecewisePoly run = PP({P({R(0), R(0), R(1)}), P({R(-1), R(2)})}, {R(0), R(1)});
    const PieceForm d2 = derivative(run, 2);
    REQUIRE(d2.pieces.size() == 2);
    CHECK(d2.pieces[0] == Polynomial::constant(R(2)));
    CHECK(d2.pieces[1].is_zero());
    CHECK(d2.pieces_beyond(R(1)).size() == 1);
    CHECK(d2.pieces_beyond(R(1, 2)).size() == 2);
}

TEST_CASE("tail_from") {
    const PiecewisePoly f = PP({P({R(0), R(0), R(1)}), P({R(-1), R(2)}), P({R(1), R(1)})}, {R(0), R(1), R(2)});
    const PiecewisePoly t = tail_from(f, R(3, 2));
    CHECK(t == PP({P({R(-1), R(2)}), P({R(1), R(1)})}, {R(0), R(2)}));
}
