#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "riesz/roots.hpp"

using namespace riesz;
using namespace riesz::test;

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("6/4") == R(3, 2));
    CHECK(Rational::parse("-7") == R(-7));
    CHECK(R(3, -6).str() == "-1/2");
    CHECK(R(4, 2).str() == "2");
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("simplest rational between two bounds") {
    CHECK(simplest_between(R(1, 3), R(2, 3)) == R(1, 2));
    CHECK(simplest_between(R(7, 5), R(3, 2)) == R(3, 2));
    CHECK(simplest_between(R(-5, 2), R(-2)) == R(-2));
}

TEST_CASE("polynomial derivative, evaluation and product") {
    const Polynomial x2 = Polynomial::monomial(R(1), 2);
    CHECK(derivative(derivative(x2)) == Polynomial::constant(R(2)));
    CHECK(P({R(1), R(-3, 2), R(1)})(R(2)) == R(2));
    CHECK(P({R(1), R(1)}) * P({R(-1), R(1)}) == P({R(-1), R(0), R(1)}));
    CHECK(derivative(Polynomial::constant(R(5))).is_zero());
    CHECK(Polynomial().degree() == Polynomial::kZeroDegree);
}

TEST_CASE("polynomial printing") {
    CHECK(P({R(1), R(-3, 2), R(2)}).str() == "2*x^2 - 3/2*x + 1");
    CHECK(Polynomial().str() == "0");
    CHECK(P({R(0), R(-1)}).str('y') == "-y");
    CHECK(P({R(-1), R(0), R(1)}).str() == "x^2 - 1");
}

TEST_CASE("division, gcd and square-free part") {
    const Polynomial a = P({R(-1), R(0), R(1)});
    const auto [q, r] = divide(a, P({R(-1), R(1)}));
    CHECK(q == P({R(1), R(1)}));
    CHECK(r.is_zero());
    CHECK(gcd(a, P({R(1), R(2), R(1)})) == P({R(1), R(1)}));
    const Polynomial sq = P({R(1), R(1)}) * P({R(1), R(1)}) * P({R(-2), R(1)});
    CHECK(square_free_part(sq) == P({R(-2), R(-1), R(1)}));
}

TEST_CASE("isolate_roots") {
    SUBCASE("x^2 - 2 has one root, isolated inside (1, 2)") {
        const auto roots = isolate_roots(P({R(-2), R(0), R(1)}), R(0), R(3));
        REQUIRE(roots.size() == 1);
        CHECK_FALSE(roots[0].is_point());
        CHECK(roots[0].lo >= R(1));
        CHECK(roots[0].hi <= R(2));
        CHECK(roots[0].lo * roots[0].lo < R(2));
        CHECK(roots[0].hi * roots[0].hi > R(2));
    }
    SUBCASE("linear root is a point") {
        const auto roots = isolate_roots(P({R(-1), R(1)}), R(0), R(3));
        REQUIRE(roots.size() == 1);
        CHECK(roots[0].is_point());
        CHECK(roots[0].lo == R(1));
    }
    SUBCASE("no real roots") { CHECK(isolate_roots(P({R(1), R(0), R(1)}), R(0), R(10)).empty()); }
    SUBCASE("zero polynomial") { CHECK_THROWS_WITH(isolate_roots(Polynomial(), R(0), R(1)), "indeterminate roots"); }
    SUBCASE("range is half open") {
        const Polynomial p = P({R(0), R(-1), R(1)});  // roots 0 and 1
        const auto roots = isolate_roots(p, R(0), R(1));
        REQUIRE(roots.size() == 1);
        CHECK(roots[0].lo == R(1));
    }
    SUBCASE("repeated rational roots reported once") {
        const Polynomial p = P({R(-1, 2), R(1)}) * P({R(-1, 2), R(1)}) * P({R(-3), R(1)});
        const auto roots = isolate_roots(p, R(0), R(5));
        REQUIRE(roots.size() == 2);
        CHECK(roots[0] == RootInterval{R(1, 2), R(1, 2)});
        CHECK(roots[1] == RootInterval{R(3), R(3)});
    }
}

TEST_CASE("sign_on_interval") {
    CHECK(sign_on_interval(P({R(1), R(0), R(1)}), R(0), R(5)).kind == SignClass::strictly_positive);
    CHECK(sign_on_interval(Polynomial(), R(0), R(1)).kind == SignClass::identically_zero);
    const SignReport mixed = sign_on_interval(P({R(-1), R(1)}), R(0), R(2));
    CHECK(mixed.kind == SignClass::mixed);
    CHECK(mixed.negative_witness == R(1, 2));
    CHECK(mixed.positive_witness == R(3, 2));
    const SignReport touch = sign_on_interval(P({R(1), R(-2), R(1)}), R(0), R(2));
    CHECK(touch.kind == SignClass::nonnegative);
    CHECK(touch.zero_witness == R(1));
    CHECK(sign_on_interval(P({R(-1), R(1)}), R(1), R(2)).kind == SignClass::strictly_positive);
    CHECK(to_string(SignClass::mixed) == "mixed");
}

namespace {

Polynomial random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-10, 10);
    std::vector<Rational> c;
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k) c.emplace_back(coef(rng));
    return Polynomial(c);
}

} // namespace

TEST_CASE("polynomial ring laws on random instances") {
    std::mt19937 rng(11);
    for (int n = 0; n < 200; ++n) {
        const Polynomial a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        for (const Rational& x : {R(-3, 2), R(0), R(7, 3)}) CHECK((a * b)(x) == a(x) * b(x));
    }
}

TEST_CASE("root counts agree with a dense sign-change scan") {
    // Products of linear factors with well separated roots, half of them shifted by
    // a quadratic so that some roots are irrational.
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> root(-20, 20), pick(0, 1), count(1, 5);
    const Rational lo(-6), hi(6), step(1, 1024);
    for (int n = 0; n < 60; ++n) {
        std::set<int> centers;
        const int k = count(rng);
        while (static_cast<int>(centers.size()) < k) centers.insert(root(rng));
        Polynomial p = Polynomial::constant(R(1));
        for (int c : centers) {
            if (pick(rng)) {
                p = p * P({R(-c, 4), R(1)});
            } else {
                // (x - c/4)^2 - 1/1000 has two roots 0.0316 either side of c/4.
                const Rational a(c, 4);
                p = p * P({a * a - R(1, 1000), R(-2) * a, R(1)});
            }
        }
        long sign_changes = 0;
        int prev = p(lo).sign();
        for (Rational x = lo + step; x <= hi; x += step) {
            const int s = p(x).sign();
            if (s == 0) {
                ++sign_changes;  // exact root on the grid
                prev = 0;
                continue;
            }
            if (prev != 0 && s != prev) ++sign_changes;
            prev = s;
        }
        CHECK(static_cast<long>(isolate_roots(p, lo, hi).size()) == sign_changes);
    }
}
