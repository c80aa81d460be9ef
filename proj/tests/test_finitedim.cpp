#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "riesz/finitedim.hpp"

using namespace riesz;
using namespace riesz::test;

namespace {

FiniteMatrix M(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Rational>> grid;
    for (const auto& r : rows) {
        grid.emplace_back();
        for (long v : r) grid.back().push_back(R(v));
    }
    return FiniteMatrix(grid);
}

FiniteVector V(std::vector<long> xs) {
    std::vector<Rational> c;
    for (long v : xs) c.push_back(R(v));
    return FiniteVector(c);
}

FiniteMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> val(-9, 9);
    FiniteMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = R(val(rng), 1 + (val(rng) + 9) % 3);
    return m;
}

} // namespace

TEST_CASE("outer products") {
    CHECK(outer(V({1, 2}), V({3, 4, 5})) == M({{3, 4, 5}, {6, 8, 10}}));
    CHECK(outer(V({1, 2}), FiniteVector::zero(3)) == FiniteMatrix(2, 3));
    CHECK(outer(V({1, 0}), V({0, 1})) == M({{0, 1}, {0, 0}}));
    CHECK(abs(outer(V({-1, 2}), V({3, -4}))) == outer(abs(V({-1, 2})), abs(V({3, -4}))));
}

TEST_CASE("matrix suprema") {
    CHECK(matrix_sup({M({{1, 0, 2}, {0, 1, 0}}), M({{0, 2, 1}, {1, 0, 0}})}) == M({{1, 2, 2}, {1, 1, 0}}));
    CHECK(matrix_sup({M({{1, 2}})}) == M({{1, 2}}));
    CHECK_THROWS_AS(matrix_sup({M({{1, 2}}), M({{1}})}), ValidationError);
    CHECK_THROWS_AS(FiniteMatrix(std::vector<std::vector<Rational>>{{R(1)}, {R(1), R(2)}}), ValidationError);

    std::mt19937 rng(29);
    std::vector<FiniteMatrix> family;
    for (int k = 0; k < 10; ++k) family.push_back(random_matrix(rng, 3, 4));
    FiniteMatrix folded = family[0];
    for (std::size_t k = 1; k < family.size(); ++k) folded = join(folded, family[k]);
    CHECK(matrix_sup(family) == folded);
    CHECK(column_sup_reconstruction(family) == folded);
}

TEST_CASE("bimorphism factorization") {
    SUBCASE("elementary matrices give the identity") {
        BimorphismTable psi(2, 3);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) psi.set(i, j, outer(FiniteVector::indicator(2, i), FiniteVector::indicator(3, j)));
        const FactoredMap t = factor_bimorphism(psi);
        const FiniteMatrix m = M({{1, -2, 3}, {4, 5, -6}});
        CHECK(t(m) == m);
    }
    SUBCASE("zero table gives the zero map") {
        BimorphismTable psi(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) psi.set(i, j, FiniteMatrix(1, 1));
        CHECK(factor_bimorphism(psi)(M({{1, 2}, {3, 4}})) == FiniteMatrix(1, 1));
    }
    SUBCASE("random table against a direct double sum") {
        std::mt19937 rng(31);
        BimorphismTable psi(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) psi.set(i, j, random_matrix(rng, 2, 3));
        const FactoredMap t = factor_bimorphism(psi);
        for (int n = 0; n < 10; ++n) {
            const FiniteMatrix m = random_matrix(rng, 2, 2);
            FiniteMatrix expected(2, 3);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) expected = expected + scale(m(i, j), *psi.find(i, j));
            CHECK(t(m) == expected);
        }
    }
    SUBCASE("missing entries are reported") {
        BimorphismTable psi(2, 2);
        psi.set(0, 0, FiniteMatrix(1, 1));
        CHECK_THROWS_WITH_AS(factor_bimorphism(psi), "missing table entry (0, 1)", ValidationError);
    }
}
