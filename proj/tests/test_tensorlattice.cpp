#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "riesz/refute.hpp"
#include "riesz/tensor.hpp"

using namespace riesz;
using namespace riesz::test;

namespace {

PiecewisePoly mono(long c, unsigned k) { return PP(Polynomial::monomial(R(c), k)); }

TensorSum ox(PiecewisePoly a, PiecewisePoly b) { return TensorSum::elementary(std::move(a), std::move(b)); }

LatticeExpr leaf(TensorSum t) { return LatticeExpr::leaf(std::move(t)); }

const PiecewisePoly kRun = PP({P({R(0), R(0), R(1)}), P({R(-1), R(2)})}, {R(0), R(1)});

/// Direct recursive evaluation of an expression tree.
Rational direct(const LatticeExpr& e, const Rational& x, const Rational& y) {
    switch (e.kind()) {
    case ExprKind::leaf: return ts_eval(e.value(), x, y);
    case ExprKind::sum: return direct(e.child(0), x, y) + direct(e.child(1), x, y);
    case ExprKind::negate: return -direct(e.child(0), x, y);
    case ExprKind::scale: return e.factor() * direct(e.child(0), x, y);
    case ExprKind::join: return std::max(direct(e.child(0), x, y), direct(e.child(1), x, y));
    case ExprKind::meet: return std::min(direct(e.child(0), x, y), direct(e.child(1), x, y));
    case ExprKind::abs: return direct(e.child(0), x, y).abs();
    }
    return {};
}

} // namespace

TEST_CASE("evaluation") {
    const SupInfForm h = counterexample_h_form();
    CHECK(sif_eval(h, R(3), R(1)) == R(1));
    CHECK(sif_eval(h, R(2), R(2)) == R(4));
    CHECK(ts_eval(ox(mono(1, 1), mono(1, 1)), R(3), R(5)) == R(15));
    CHECK_THROWS_AS(ts_eval(ox(mono(1, 1), mono(1, 1)), R(-1), R(5)), DomainError);
    CHECK(TensorSum(std::vector<TensorTerm>{{mono(1, 1), PiecewisePoly()}}).empty());
}

TEST_CASE("normalize rewrite rules") {
    const TensorSum a = ox(mono(1, 1), mono(1, 0)), b = ox(mono(1, 0), mono(1, 1)), c = ox(mono(1, 1), mono(1, 1));
    SUBCASE("meet of leaves is one row") {
        const SupInfForm s = normalize(LatticeExpr::meet(leaf(a), leaf(b)));
        REQUIRE(s.rows.size() == 1);
        CHECK(s.rows[0] == std::vector<TensorSum>{a, b});
    }
    SUBCASE("negated join is a single row of negations") {
        const SupInfForm s = normalize(LatticeExpr::negate(LatticeExpr::join(leaf(a), leaf(b))));
        REQUIRE(s.rows.size() == 1);
        CHECK(s.rows[0] == std::vector<TensorSum>{-a, -b});
    }
    SUBCASE("meet distributes over join") {
        const LatticeExpr e = LatticeExpr::meet(LatticeExpr::join(leaf(a), leaf(b)), leaf(c));
        const SupInfForm s = normalize(e);
        REQUIRE(s.rows.size() == 2);
        CHECK(s.rows[0] == std::vector<TensorSum>{a, c});
        CHECK(s.rows[1] == std::vector<TensorSum>{b, c});
        std::mt19937 rng(3);
        std::uniform_int_distribution<int> num(0, 40);
        for (int k = 0; k < 50; ++k) {
            const Rational x(num(rng), 7), y(num(rng), 5);
            CHECK(sif_eval(s, x, y) == direct(e, x, y));
        }
    }
    SUBCASE("negative scale and abs") {
        const LatticeExpr e = LatticeExpr::abs(LatticeExpr::sum(LatticeExpr::scale(R(-3, 2), leaf(a)), leaf(b)));
        const SupInfForm s = normalize(e);
        for (const Rational& x : quarter_grid(3))
            for (const Rational& y : {R(0), R(1, 3), R(2), R(5)}) CHECK(sif_eval(s, x, y) == direct(e, x, y));
    }
}

TEST_CASE("restrict_line") {
    const SupInfForm h = counterexample_h_form();
    CHECK(restrict_line(h, Axis::x, R(3)) == PP({P({R(0), R(0), R(1)}), P({R(9)})}, {R(0), R(3)}));
    CHECK(restrict_line(SupInfForm({{ox(mono(1, 1), mono(1, 1))}}), Axis::x, R(2)) == mono(2, 1));
    CHECK(restrict_line(h, Axis::x, R(0)).is_zero());
    CHECK(restrict_line(h, Axis::y, R(3)) == PP({P({R(0), R(0), R(1)}), P({R(9)})}, {R(0), R(3)}));
    // 1-D oracle: min(9, y^2) on a grid.
    const PiecewisePoly r = restrict_line(h, Axis::x, R(3));
    for (const Rational& y : quarter_grid(6)) CHECK(r(y) == std::min(R(9), y * y));
}

TEST_CASE("second partials") {
    const SecondPartials a = second_partials(ox(mono(1, 2), mono(1, 0)));
    REQUIRE(a.xx.size() == 1);
    CHECK(a.xx[0].left.pieces == std::vector<Polynomial>{Polynomial::constant(R(2))});
    CHECK(a.xx[0].right.pieces == std::vector<Polynomial>{Polynomial::constant(R(1))});
    CHECK(a.yy.empty());
    const SecondPartials b = second_partials(ox(mono(1, 1), mono(1, 1)));
    CHECK(b.xx.empty());
    CHECK(b.yy.empty());
    const SecondPartials c = second_partials(ox(mono(1, 0), mono(1, 2)));
    CHECK(c.xx.empty());
    REQUIRE(c.yy.size() == 1);
    CHECK(c.yy[0].right.pieces == std::vector<Polynomial>{Polynomial::constant(R(2))});
}

TEST_CASE("generators_in_ideal") {
    CHECK(*generators_in_ideal(ox(mono(1, 1), mono(1, 1))).lambda == R(1));
    CHECK(*generators_in_ideal(ox(kRun, mono(1, 1))).lambda == R(2));
    const IdealMembership m = generators_in_ideal(ox(mono(1, 0), mono(1, 2)));
    CHECK_FALSE(m);
    CHECK(m.reason.find("f(0) = 1 is nonzero") != std::string::npos);
}

TEST_CASE("horizon") {
    CHECK(horizon(SupInfForm({{ox(mono(1, 1), mono(1, 1))}})) == R(0));
    CHECK(horizon(SupInfForm({{ox(kRun, mono(1, 1))}})) == R(1));
    const PiecewisePoly k3 = PP({mono(1, 1).tail(), P({R(3), R(0)})}, {R(0), R(3)});
    const PiecewisePoly k2 = PP({mono(1, 1).tail(), P({R(2)})}, {R(0), R(2)});
    const SupInfForm s({{ox(mono(1, 1), mono(1, 1)), ox(k3, mono(1, 1))}, {ox(mono(1, 1), k2)}});
    CHECK(horizon(s) == R(3));
    CHECK_THROWS_AS(horizon(counterexample_h_form()), PreconditionError);
}

TEST_CASE("refute_h examples") {
    SUBCASE("x (x) y") {
        const RefutationCertificate c = refute_h(SupInfForm({{ox(mono(1, 1), mono(1, 1))}}));
        CHECK(c.horizon == R(0));
        CHECK(c.line == R(2));
        CHECK(c.witness == R(1));
        CHECK(c.candidate_value == R(2));
        CHECK(c.h_value == R(1));
        CHECK(c.restricted_candidate == mono(2, 1));
    }
    SUBCASE("zero") {
        const RefutationCertificate c = refute_h(SupInfForm({{TensorSum()}}));
        CHECK(c.line == R(2));
        CHECK(c.witness == R(1));
        CHECK(c.candidate_value == R(0));
        CHECK(c.h_value == R(1));
    }
    SUBCASE("join of two rows") {
        const SupInfForm s({{ox(mono(1, 1), mono(1, 1))}, {ox(mono(2, 1), mono(1, 1))}});
        const RefutationCertificate c = refute_h(s);
        CHECK(c.restricted_candidate == mono(4, 1));
        CHECK(c.witness == R(1));
        CHECK(c.candidate_value == R(4));
        CHECK(c.h_value == R(1));
    }
    SUBCASE("explicit line") {
        const RefutationCertificate c = refute_h(SupInfForm({{ox(mono(1, 1), mono(1, 1))}}), R(5));
        CHECK(c.line == R(5));
        CHECK(c.candidate_value != c.h_value);
        CHECK(sif_eval(SupInfForm({{ox(mono(1, 1), mono(1, 1))}}), c.line, c.witness) == c.candidate_value);
    }
    SUBCASE("h itself is not a candidate") { CHECK_THROWS_AS(refute_h(counterexample_h_form()), PreconditionError); }
}

TEST_CASE("h is dominated by x (x) y") {
    const auto report = verify_h_dominated({R(2), R(0), R(1), R(1, 2)});
    REQUIRE(report.size() == 4);
    for (const auto& line : report) CHECK(line.holds);
    // Per-piece oracle for c = 2: 2y - y^2 = y(2 - y) >= 0 on [0, 2] and 2y - 4 >= 0 beyond.
    CHECK(report[0].restricted_h == PP({P({R(0), R(0), R(1)}), P({R(4)})}, {R(0), R(2)}));
}
