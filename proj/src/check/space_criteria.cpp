#include <algorithm>
#include <map>

#include "generators.hpp"
#include "riesz/dsl.hpp"
#include "tally.hpp"

namespace riesz::check {

namespace {

Rational at(const Rational& v, const Rational&) { return v; }
Rational at(const PiecewisePoly& f, const Rational& x) { return f(x); }

const std::vector<Rational>& sample_xs() {
    static const std::vector<Rational> xs = [] {
        std::vector<Rational> out;
        for (long k = 0; k <= 24; ++k) out.emplace_back(k, 3);
        return out;
    }();
    return xs;
}

const std::vector<std::string> kTokens = {"a", "b", "c", "d", "e", "i1", "x_2", "7", "12"};

Index random_index(Gen& gen) { return Index(kTokens[static_cast<std::size_t>(gen.integer(0, 8))]); }

template <typename E>
E random_element(Gen& gen);

template <>
Rational random_element<Rational>(Gen& gen) {
    return gen.rational(-10, 10, 3);
}

template <>
PiecewisePoly random_element<PiecewisePoly>(Gen& gen) {
    return gen.affine_pp(3);
}

template <typename E>
E nonnegative_element(Gen& gen) {
    return ElementSpace<E>::abs(random_element<E>(gen));
}

template <typename E>
FinSuppMap<E> random_map(Gen& gen) {
    FinSuppMap<E> m;
    const long n = gen.integer(0, 5);
    for (long k = 0; k < n; ++k) m.set(random_index(gen), random_element<E>(gen));
    return m;
}

template <typename E>
IndicatorSum<E> random_indicator_sum(Gen& gen) {
    IndicatorSum<E> s;
    const long n = gen.integer(0, 4);
    for (long k = 0; k < n; ++k) s.terms.emplace_back(random_index(gen), random_element<E>(gen));
    return s;
}

/// Value at (i, x) of sum_k 1_{i_k} (x) v_k, by direct accumulation.
template <typename E>
Rational indicator_value(const IndicatorSum<E>& s, const Index& i, const Rational& x) {
    Rational v;
    for (const auto& [j, e] : s.terms)
        if (j == i) v += at(e, x);
    return v;
}

std::vector<Index> all_indices() {
    std::vector<Index> out;
    for (const auto& t : kTokens) out.emplace_back(t);
    out.emplace_back("unused");
    return out;
}

template <typename E>
void sup_family(Tally& tally, Gen& gen) {
    std::vector<FinSuppMap<E>> family(static_cast<std::size_t>(gen.integer(1, 6)));
    for (auto& m : family) m = random_map<E>(gen);
    const FinSuppMap<E> sup = c00_sup(family);
    FinSuppMap<E> folded = family.front();
    for (std::size_t k = 1; k < family.size(); ++k) folded = join(folded, family[k]);
    tally.check(sup == folded, [] { return std::string("c00_sup differs from the binary fold"); });
    for (const Index& i : all_indices()) {
        bool in_union = false;
        for (const auto& m : family) in_union = in_union || m.entries().contains(i);
        tally.check(in_union || !sup.entries().contains(i),
                    [&] { return "support of the supremum leaves the union at " + i.token(); });
        for (const Rational& x : sample_xs()) {
            Rational best = at(family.front()(i), x);
            for (const auto& m : family) best = std::max(best, at(m(i), x));
            tally.check(at(sup(i), x) == best, [&] { return "supremum wrong at " + i.token() + ", x = " + x.str(); });
            if constexpr (std::is_same_v<E, Rational>) break;
        }
    }
}

template <typename E>
void tensor_image(Tally& tally, Gen& gen) {
    using X = C00Expr<E>;
    const IndicatorSum<E> f = random_indicator_sum<E>(gen), g = random_indicator_sum<E>(gen);
    const Rational lambda = gen.rational(-5, 5, 3);
    const FinSuppMap<E> tf = c00_from_tensor(X::leaf(f)), tg = c00_from_tensor(X::leaf(g));
    const FinSuppMap<E> lin = c00_from_tensor(X::sum(X::scale(lambda, X::leaf(f)), X::leaf(g)));
    tally.check(lin == scale(lambda, tf) + tg, [] { return std::string("T is not linear"); });
    const FinSuppMap<E> j = c00_from_tensor(X::join(X::leaf(f), X::leaf(g)));
    const FinSuppMap<E> m = c00_from_tensor(X::meet(X::leaf(f), X::leaf(g)));
    const FinSuppMap<E> a = c00_from_tensor(X::abs(X::leaf(f)));
    tally.check(j == join(tf, tg) && m == meet(tf, tg) && a == abs(tf),
                [] { return std::string("T does not preserve lattice operations"); });
    for (const Index& i : all_indices())
        for (const Rational& x : sample_xs()) {
            const Rational vf = indicator_value(f, i, x), vg = indicator_value(g, i, x);
            tally.check(at(tf(i), x) == vf && at(lin(i), x) == lambda * vf + vg && at(j(i), x) == std::max(vf, vg) &&
                            at(m(i), x) == std::min(vf, vg) && at(a(i), x) == vf.abs(),
                        [&] { return "image differs from direct accumulation at " + i.token() + ", x = " + x.str(); });
            if constexpr (std::is_same_v<E, Rational>) break;
        }
}

template <typename E>
void disjoint_images(Tally& tally, Gen& gen) {
    using X = C00Expr<E>;
    IndicatorSum<E> f, g;
    for (const auto& t : kTokens) {
        const long side = gen.integer(0, 2);
        if (side == 0) f.terms.emplace_back(Index(t), nonnegative_element<E>(gen));
        if (side == 1) g.terms.emplace_back(Index(t), nonnegative_element<E>(gen));
    }
    const FinSuppMap<E> tf = c00_from_tensor(X::leaf(f)), tg = c00_from_tensor(X::leaf(g));
    tally.check(c00_disjoint(tf, tg) && meet(tf, tg).empty() && c00_from_tensor(X::meet(X::leaf(f), X::leaf(g))).empty(),
                [] { return std::string("images of disjoint nonnegative maps meet"); });
}

} // namespace

Outcome c00_suite(const Options& opt) {
    Tally tally(5, "c00 suprema and tensor isomorphism", 30);
    Gen gen(opt.seed + 5);
    for (int n = 0; n < 200; ++n) {
        const bool rational = n % 2 == 0;
        tally.guard(
            [&] {
                if (rational) {
                    sup_family<Rational>(tally, gen);
                    tensor_image<Rational>(tally, gen);
                    disjoint_images<Rational>(tally, gen);
                } else {
                    sup_family<PiecewisePoly>(tally, gen);
                    tensor_image<PiecewisePoly>(tally, gen);
                    disjoint_images<PiecewisePoly>(tally, gen);
                }
            },
            [&] { return "instance " + std::to_string(n); });
    }
    return tally.finish("200 families, 200 images, 200 disjoint pairs");
}

namespace {

FiniteMatrix random_matrix(Gen& gen, std::size_t rows, std::size_t cols) {
    FiniteMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = gen.rational(-10, 10, 3);
    return m;
}

std::size_t dim(Gen& gen, long hi) { return static_cast<std::size_t>(gen.integer(1, hi)); }

} // namespace

Outcome finite_dimensional(const Options& opt) {
    Tally tally(6, "finite-dimensional tensor products", 10);
    Gen gen(opt.seed + 6);
    for (int n = 0; n < 100; ++n) {
        const std::size_t rows = dim(gen, 6), cols = dim(gen, 6);
        std::vector<FiniteMatrix> family;
        const long size = gen.integer(1, 6);
        for (long k = 0; k < size; ++k) family.push_back(random_matrix(gen, rows, cols));
        tally.guard(
            [&] {
                // sum_j g_j (x) 1_{j} with g_j the column-wise supremum, assembled from scratch.
                FiniteMatrix column_form(rows, cols);
                for (std::size_t j = 0; j < cols; ++j) {
                    std::vector<Rational> g(rows);
                    for (std::size_t i = 0; i < rows; ++i) {
                        g[i] = family.front()(i, j);
                        for (const auto& h : family) g[i] = std::max(g[i], h(i, j));
                    }
                    column_form = column_form + outer(FiniteVector(g), FiniteVector::indicator(cols, j));
                }
                tally.check(matrix_sup(family) == column_form && column_sup_reconstruction(family) == column_form,
                            [&] { return "supremum differs from the column form for family " + std::to_string(n); });
            },
            [&] { return "family " + std::to_string(n); });
    }
    for (int n = 0; n < 50; ++n) {
        const std::size_t xs = dim(gen, 4), ys = dim(gen, 4), zr = dim(gen, 4), zc = dim(gen, 4);
        BimorphismTable psi(xs, ys);
        for (std::size_t i = 0; i < xs; ++i)
            for (std::size_t j = 0; j < ys; ++j) psi.set(i, j, random_matrix(gen, zr, zc));
        tally.guard(
            [&] {
                const FactoredMap t = factor_bimorphism(psi);
                for (std::size_t i = 0; i < xs; ++i)
                    for (std::size_t j = 0; j < ys; ++j)
                        tally.check(t(outer(FiniteVector::indicator(xs, i), FiniteVector::indicator(ys, j))) == *psi.find(i, j),
                                    [&] { return "T(e_i (x) f_j) != psi(i, j) at (" + std::to_string(i) + ", " + std::to_string(j) + ")"; });
                for (int k = 0; k < 2; ++k) {
                    const FiniteMatrix m = random_matrix(gen, xs, ys);
                    FiniteMatrix expected(zr, zc);
                    for (std::size_t r = 0; r < zr; ++r)
                        for (std::size_t c = 0; c < zc; ++c)
                            for (std::size_t i = 0; i < xs; ++i)
                                for (std::size_t j = 0; j < ys; ++j) expected(r, c) += m(i, j) * (*psi.find(i, j))(r, c);
                    tally.check(t(m) == expected, [] { return std::string("T differs from the double sum"); });
                }
            },
            [&] { return "table " + std::to_string(n); });
    }
    return tally.finish("100 families, 50 tables, 100 matrices");
}

namespace {

PiecewisePoly random_pp(Gen& gen) {
    PiecewisePoly f = scale(gen.nonzero_rational(-5, 5, 6), gen.continuous_pp(4, 3));
    return gen.integer(0, 5) == 0 ? PiecewisePoly() : f;
}

LatticeExpr random_tensor_expr(Gen& gen, int depth) {
    if (depth == 0 || gen.integer(0, 2) == 0) {
        if (gen.integer(0, 9) == 0) return LatticeExpr::leaf(TensorSum());
        return LatticeExpr::leaf(TensorSum::elementary(random_pp(gen), random_pp(gen)));
    }
    switch (gen.integer(0, 5)) {
    case 0: return LatticeExpr::sum(random_tensor_expr(gen, depth - 1), random_tensor_expr(gen, depth - 1));
    case 1: return LatticeExpr::negate(random_tensor_expr(gen, depth - 1));
    case 2: return LatticeExpr::scale(gen.rational(-4, 4, 3), random_tensor_expr(gen, depth - 1));
    case 3: return LatticeExpr::join(random_tensor_expr(gen, depth - 1), random_tensor_expr(gen, depth - 1));
    case 4: return LatticeExpr::meet(random_tensor_expr(gen, depth - 1), random_tensor_expr(gen, depth - 1));
    default: return LatticeExpr::abs(random_tensor_expr(gen, depth - 1));
    }
}

SupInfForm random_form(Gen& gen) {
    std::vector<std::vector<TensorSum>> rows(static_cast<std::size_t>(gen.integer(1, 3)));
    for (auto& row : rows) {
        const long width = gen.integer(1, 3);
        for (long k = 0; k < width; ++k) {
            std::vector<TensorTerm> terms;
            const long count = gen.integer(0, 3);
            for (long t = 0; t < count; ++t) terms.push_back({random_pp(gen), random_pp(gen)});
            row.push_back(TensorSum(std::move(terms)));
        }
    }
    return normalize(dsl::to_expr(SupInfForm(std::move(rows))));
}

template <typename E>
C00Expr<E> random_c00_expr(Gen& gen, int depth) {
    using X = C00Expr<E>;
    if (depth == 0 || gen.integer(0, 2) == 0) return X::leaf(random_indicator_sum<E>(gen));
    switch (gen.integer(0, 5)) {
    case 0: return X::sum(random_c00_expr<E>(gen, depth - 1), random_c00_expr<E>(gen, depth - 1));
    case 1: return X::negate(random_c00_expr<E>(gen, depth - 1));
    case 2: return X::scale(gen.rational(-4, 4, 3), random_c00_expr<E>(gen, depth - 1));
    case 3: return X::join(random_c00_expr<E>(gen, depth - 1), random_c00_expr<E>(gen, depth - 1));
    case 4: return X::meet(random_c00_expr<E>(gen, depth - 1), random_c00_expr<E>(gen, depth - 1));
    default: return X::abs(random_c00_expr<E>(gen, depth - 1));
    }
}

FiniteVector random_vector(Gen& gen) {
    std::vector<Rational> c(static_cast<std::size_t>(gen.integer(0, 5)));
    for (auto& v : c) v = gen.rational(-10, 10, 5);
    return FiniteVector(std::move(c));
}

BimorphismTable random_table(Gen& gen) {
    const std::size_t xs = dim(gen, 3), ys = dim(gen, 3);
    BimorphismTable t(xs, ys);
    for (std::size_t i = 0; i < xs; ++i)
        for (std::size_t j = 0; j < ys; ++j)
            if (gen.integer(0, 3) > 0) t.set(i, j, random_matrix(gen, dim(gen, 3), dim(gen, 3)));
    return t;
}

/// parse(print(v)) == v and printing is a fixed point.
void round_trip(Tally& tally, const dsl::Value& v) {
    const std::string text = dsl::print(v);
    const dsl::Value back = dsl::parse_value(text);
    tally.check(back == v, [&] { return "round trip changed " + text; });
    tally.check(dsl::print(back) == text, [&] { return "printing is not canonical for " + text; });
}

} // namespace

Outcome parser_round_trip(const Options& opt) {
    Tally tally(7, "parser round trip", 10);
    Gen gen(opt.seed + 7);
    for (int n = 0; n < 300; ++n) {
        tally.guard(
            [&] {
                round_trip(tally, random_pp(gen));
                round_trip(tally, random_tensor_expr(gen, 3));
                round_trip(tally, random_c00_expr<Rational>(gen, 3));
                round_trip(tally, random_c00_expr<PiecewisePoly>(gen, 2));
                round_trip(tally, random_vector(gen));
                round_trip(tally, random_matrix(gen, dim(gen, 4), dim(gen, 4)));
                round_trip(tally, random_table(gen));

                const SupInfForm s = random_form(gen);
                const std::string text = dsl::print(s);
                const dsl::Value back = dsl::parse_value(text);
                tally.check(std::holds_alternative<LatticeExpr>(back) && normalize(std::get<LatticeExpr>(back)) == s,
                            [&] { return "sup-inf form did not survive: " + text; });
                tally.check(dsl::print(back) == text, [&] { return "sup-inf printing not canonical: " + text; });

                const auto rm = random_map<Rational>(gen);
                const auto pm = random_map<PiecewisePoly>(gen);
                const auto rb = dsl::parse_value(dsl::print(rm));
                const auto pb = dsl::parse_value(dsl::print(pm));
                tally.check(c00_from_tensor(std::get<C00Expr<Rational>>(rb)) == rm &&
                                c00_from_tensor(std::get<C00Expr<PiecewisePoly>>(pb)) == pm,
                            [&] { return "map did not survive: " + dsl::print(rm) + " / " + dsl::print(pm); });
            },
            [&] { return "value set " + std::to_string(n); });
    }
    for (const auto& [name, text] : opt.corpus) {
        tally.guard(
            [&] {
                const dsl::Program p = dsl::parse(text);
                const std::string once = dsl::print(p);
                const dsl::Program q = dsl::parse(once);
                tally.check(dsl::print(q) == once, [&] { return name + ": printing is not idempotent"; });
                tally.check(p.bindings().size() == q.bindings().size(), [&] { return name + ": bindings lost"; });
                for (std::size_t k = 0; k < std::min(p.bindings().size(), q.bindings().size()); ++k)
                    tally.check(p.bindings()[k].value == q.bindings()[k].value,
                                [&] { return name + ": binding " + p.bindings()[k].name + " changed"; });
            },
            [&] { return name; });
    }
    return tally.finish("300 values per type, " + std::to_string(opt.corpus.size()) + " corpus files");
}

} // namespace riesz::check
