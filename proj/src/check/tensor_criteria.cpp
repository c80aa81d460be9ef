#include <algorithm>
#include <cmath>

#include "generators.hpp"
#include "riesz/refute.hpp"
#include "tally.hpp"

namespace riesz::check {

namespace {

std::vector<Rational> sample_points(const PiecewisePoly& f, const PiecewisePoly& g, const PiecewisePoly& h) {
    std::vector<Rational> xs;
    for (long k = 0; k <= 36; ++k) xs.emplace_back(k, 4);
    for (const auto* p : {&f, &g, &h})
        for (const auto& t : p->breakpoints()) xs.push_back(t + Rational(1, 7));
    return xs;
}

/// Applies the seven lattice identities to one triple; throws IrrationalCrossing
/// if any step cannot be computed exactly.
void lattice_identities(Tally& tally, const PiecewisePoly& f, const PiecewisePoly& g, const PiecewisePoly& h,
                        const Rational& lambda) {
    auto ctx = [&](const char* law) {
        return [&, law] { return std::string(law) + " fails for f = " + f.str() + ", g = " + g.str() + ", h = " + h.str(); };
    };
    const PiecewisePoly fg = join(f, g);
    tally.check(fg == join(g, f), ctx("commutativity"));
    tally.check(join(fg, h) == join(f, join(g, h)), ctx("associativity"));
    tally.check(fg + meet(f, g) == f + g, ctx("join plus meet"));
    tally.check(fg + h == join(f + h, g + h), ctx("translation invariance"));
    tally.check(meet(f, join(g, h)) == join(meet(f, g), meet(f, h)), ctx("distributivity"));
    const PiecewisePoly af = abs(f);
    tally.check(af == join(f, -f) && !find_negative(af), ctx("absolute value"));
    tally.check(abs(scale(lambda, f)) == scale(lambda.abs(), af), ctx("homogeneity of |.|"));
    // Evaluation homomorphism against scalar max/min.
    for (const Rational& x : sample_points(f, g, h)) {
        const Rational a = f(x), b = g(x), c = h(x);
        tally.check(fg(x) == std::max(a, b) && meet(g, h)(x) == std::min(b, c) && af(x) == a.abs(),
                    [&] { return "pointwise value mismatch at x = " + x.str(); });
    }
}

} // namespace

Outcome lattice_laws(const Options& opt) {
    Tally tally(1, "vector-lattice laws", 60);
    Gen gen(opt.seed + 1);
    long retries = 0, affine = 0, factored = 0, unconstrained = 0;
    for (int n = 0; n < 500; ++n) {
        const int family = n % 3;
        tally.guard(
            [&] {
                if (family == 0) {
                    lattice_identities(tally, gen.affine_pp(5), gen.affine_pp(5), gen.affine_pp(5),
                                       gen.nonzero_rational(-10, 10));
                    ++affine;
                    return;
                }
                if (family == 2) {
                    // Unconstrained pieces up to degree 4; an irrational crossing means a retry.
                    for (int attempt = 0; attempt < 3; ++attempt) {
                        const auto f = gen.continuous_pp(5, 4), g = gen.continuous_pp(5, 4), h = gen.continuous_pp(5, 4);
                        try {
                            lattice_identities(tally, f, g, h, gen.nonzero_rational(-10, 10));
                        } catch (const IrrationalCrossing&) {
                            ++retries;
                            continue;
                        }
                        ++unconstrained;
                        return;
                    }
                }
                const auto t = gen.factored_triple(5);
                lattice_identities(tally, t[0], t[1], t[2], gen.nonzero_rational(-10, 10));
                ++factored;
            },
            [&] { return "triple " + std::to_string(n); });
    }
    return tally.finish("500 triples (" + std::to_string(affine) + " piecewise affine, " + std::to_string(factored) +
                        " factored, " + std::to_string(unconstrained) + " unconstrained, " + std::to_string(retries) +
                        " retries)");
}

Outcome linear_bounded(const Options& opt) {
    Tally tally(2, "eventual affinity of E_x members", 10);
    Gen gen(opt.seed + 2);
    for (int n = 0; n < 200; ++n) {
        const PiecewisePoly f = gen.ideal_member(5, 4);
        tally.guard(
            [&] {
                const IdealMembership m = ideal_member_linear(f);
                tally.check(m.lambda.has_value(), [&] { return "member rejected: " + f.str() + " (" + m.reason + ")"; });
                if (!m) return;
                const Rational lambda = *m.lambda;
                // Independent bound check on a grid and at every breakpoint.
                const Rational end = f.last_breakpoint() + Rational(5);
                for (Rational x(0); x <= end; x += Rational(1, 8))
                    tally.check(f(x).abs() <= lambda * x, [&] { return "|f(" + x.str() + ")| > lambda x for " + f.str(); });
                const EventualAffinity a = eventual_affinity(f, lambda);
                tally.check(a.k == f.last_breakpoint(), [&] { return "k = " + a.k.str() + " for " + f.str(); });
                tally.check(a.tail_second_derivative.is_zero() && nth_derivative(f.tail(), 2).is_zero(),
                            [&] { return "tail not affine for " + f.str(); });
            },
            [&] { return "member " + f.str(); });
    }
    for (int n = 0; n < 50; ++n) {
        const bool quadratic = n % 2 == 0;
        PiecewisePoly f;
        std::string expected;
        if (quadratic) {
            f = gen.quadratic_tail(4, 4);
            expected = "last piece degree 2";
        } else {
            const Rational c = gen.nonzero_rational(-10, 10);
            f = gen.ideal_member(5, 4) + PiecewisePoly(Polynomial::constant(c));
            expected = "f(0) = " + c.str() + " is nonzero";
        }
        const IdealMembership m = ideal_member_linear(f);
        tally.check(!m && m.reason == expected,
                    [&] { return "non-member " + f.str() + " gave '" + m.reason + "', expected '" + expected + "'"; });
    }
    return tally.finish("200 members, 50 non-members");
}

namespace {

TensorSum random_entry(Gen& gen) {
    std::vector<TensorTerm> terms;
    const long count = gen.integer(1, 3);
    for (long k = 0; k < count; ++k) terms.push_back({gen.ideal_member(3, 3), gen.ideal_member(3, 3)});
    return TensorSum(std::move(terms));
}

SupInfForm random_candidate(Gen& gen) {
    std::vector<std::vector<TensorSum>> rows(static_cast<std::size_t>(gen.integer(1, 3)));
    for (auto& row : rows) {
        const long width = gen.integer(1, 3);
        for (long k = 0; k < width; ++k) row.push_back(random_entry(gen));
    }
    return SupInfForm(std::move(rows));
}

Rational h_direct(const Rational& x, const Rational& y) { return std::min(y * y, x * x); }

} // namespace

Outcome counterexample(const Options& opt) {
    Tally tally(3, "counterexample reproduction", 120);
    // (a) h <= x (x) y along twenty lines.
    std::vector<Rational> lines;
    for (long k = 1; k <= 20; ++k) lines.emplace_back(k, 2);
    tally.guard(
        [&] {
            const auto report = verify_h_dominated(lines);
            tally.check(report.size() == lines.size(), [] { return std::string("missing lines in report"); });
            for (const auto& line : report) {
                tally.check(line.holds, [&] { return "h <= x (x) y fails on x = " + line.line.str(); });
                for (long k = 0; k <= 100; ++k) {
                    const Rational y(k, 4);
                    tally.check(line.restricted_h(y) == h_direct(line.line, y) && h_direct(line.line, y) <= line.line * y,
                                [&] { return "restricted h wrong at (" + line.line.str() + ", " + y.str() + ")"; });
                }
            }
        },
        [] { return std::string("dominate-h"); });

    // (b) and (c) on random candidates in E_x (x) E_y.
    Gen gen(opt.seed + 3);
    const SupInfForm h = counterexample_h_form();
    long windowed = 0;
    for (int n = 0; n < 100; ++n) {
        const SupInfForm cand = random_candidate(gen);
        tally.guard(
            [&] {
                Rational k_direct;
                for (const auto& row : cand.rows)
                    for (const auto& entry : row) {
                        tally.check(generators_in_ideal(entry).lambda.has_value(),
                                    [&] { return "generated entry outside the ideal: " + generators_in_ideal(entry).reason; });
                        for (const auto& term : entry.terms())
                            k_direct = std::max({k_direct, term.left.last_breakpoint(), term.right.last_breakpoint()});
                    }
                const Rational k = horizon(cand);
                tally.check(k == k_direct, [&] { return "horizon " + k.str() + " != " + k_direct.str(); });
                for (const auto& row : cand.rows)
                    for (const auto& entry : row) {
                        const SecondPartials d = second_partials(entry);
                        auto zero_beyond = [&](const PieceForm& f) {
                            for (const auto& p : f.pieces_beyond(k))
                                if (!p.is_zero()) return false;
                            return true;
                        };
                        for (const auto& t : d.xx)
                            tally.check(zero_beyond(t.left), [&] { return "h_xx of an entry nonzero beyond " + k.str(); });
                        for (const auto& t : d.yy)
                            tally.check(zero_beyond(t.right), [&] { return "h_yy of an entry nonzero beyond " + k.str(); });
                    }
                const PiecewisePoly rh = restrict_line(h, Axis::x, k + Rational(2));
                const Polynomial y2 = Polynomial::monomial(Rational(1), 2);
                const bool has_square = std::find(rh.pieces().begin(), rh.pieces().end(), y2) != rh.pieces().end();
                tally.check(has_square && nth_derivative(y2, 2) == Polynomial::constant(Rational(2)),
                            [&] { return "restricted h lacks a y^2 piece: " + rh.str('y'); });

                const RefutationCertificate c = refute_h(cand);
                if (!c.window_start.is_zero()) ++windowed;
                tally.check(c.horizon == k && c.line > k && k < c.witness && c.witness < c.line,
                            [&] { return "certificate geometry wrong at line " + c.line.str(); });
                tally.check(sif_eval(cand, c.line, c.witness) == c.candidate_value,
                            [&] { return std::string("candidate value does not re-evaluate"); });
                tally.check(h_direct(c.line, c.witness) == c.h_value, [&] { return std::string("h value wrong"); });
                tally.check(c.candidate_value != c.h_value, [&] { return std::string("no mismatch at the witness"); });
                tally.check(c.restricted_candidate(c.witness) == c.candidate_value,
                            [&] { return std::string("restricted candidate disagrees at the witness"); });
            },
            [&] { return "candidate " + std::to_string(n); });
    }
    return tally.finish("20 lines, 100 candidates refuted (" + std::to_string(windowed) + " via tail window)");
}

namespace {

Rational direct_eval(const LatticeExpr& e, const Rational& x, const Rational& y) {
    switch (e.kind()) {
    case ExprKind::leaf: {
        Rational v;
        for (const auto& t : e.value().terms()) v += t.left(x) * t.right(y);
        return v;
    }
    case ExprKind::sum: return direct_eval(e.child(0), x, y) + direct_eval(e.child(1), x, y);
    case ExprKind::negate: return -direct_eval(e.child(0), x, y);
    case ExprKind::scale: return e.factor() * direct_eval(e.child(0), x, y);
    case ExprKind::join: return std::max(direct_eval(e.child(0), x, y), direct_eval(e.child(1), x, y));
    case ExprKind::meet: return std::min(direct_eval(e.child(0), x, y), direct_eval(e.child(1), x, y));
    case ExprKind::abs: return direct_eval(e.child(0), x, y).abs();
    }
    return {};
}

/// Upper bounds on (rows, entries per row) of the normal form.
struct Shape {
    double rows;
    double width;
};

Shape shape(const LatticeExpr& e) {
    switch (e.kind()) {
    case ExprKind::leaf: return {1, 1};
    case ExprKind::scale: {
        const Shape a = shape(e.child(0));
        if (e.factor().sign() >= 0) return a;
        return {std::pow(a.width, a.rows), a.rows};
    }
    case ExprKind::negate: {
        const Shape a = shape(e.child(0));
        return {std::pow(a.width, a.rows), a.rows};
    }
    case ExprKind::abs: {
        const Shape a = shape(e.child(0));
        return {a.rows + std::pow(a.width, a.rows), std::max(a.width, a.rows)};
    }
    case ExprKind::sum: {
        const Shape a = shape(e.child(0)), b = shape(e.child(1));
        return {a.rows * b.rows, a.width * b.width};
    }
    case ExprKind::join: {
        const Shape a = shape(e.child(0)), b = shape(e.child(1));
        return {a.rows + b.rows, std::max(a.width, b.width)};
    }
    case ExprKind::meet: {
        const Shape a = shape(e.child(0)), b = shape(e.child(1));
        return {a.rows * b.rows, a.width + b.width};
    }
    }
    return {1, 1};
}

LatticeExpr random_tree(Gen& gen, int depth) {
    if (depth == 0 || gen.integer(0, 3) == 0) {
        std::vector<TensorTerm> terms;
        const long count = gen.integer(1, 2);
        for (long k = 0; k < count; ++k) terms.push_back({gen.continuous_pp(3, 3), gen.affine_pp(3)});
        return LatticeExpr::leaf(TensorSum(std::move(terms)));
    }
    switch (gen.integer(0, 5)) {
    case 0: return LatticeExpr::sum(random_tree(gen, depth - 1), random_tree(gen, depth - 1));
    case 1: return LatticeExpr::negate(random_tree(gen, depth - 1));
    case 2: return LatticeExpr::scale(gen.rational(-3, 3), random_tree(gen, depth - 1));
    case 3: return LatticeExpr::join(random_tree(gen, depth - 1), random_tree(gen, depth - 1));
    case 4: return LatticeExpr::meet(random_tree(gen, depth - 1), random_tree(gen, depth - 1));
    default: return LatticeExpr::abs(random_tree(gen, depth - 1));
    }
}

} // namespace

Outcome normalization(const Options& opt) {
    Tally tally(4, "normalization and restriction", 60);
    Gen gen(opt.seed + 4);
    long rejected = 0;
    for (int n = 0; n < 100; ++n) {
        LatticeExpr e = random_tree(gen, 4);
        while (true) {
            const Shape s = shape(e);
            if (s.rows * s.width <= 400) break;
            ++rejected;
            e = random_tree(gen, 4);
        }
        tally.guard(
            [&] {
                const SupInfForm s = normalize(e);
                for (int k = 0; k < 50; ++k) {
                    const Rational x = gen.rational(0, 8), y = gen.rational(0, 8);
                    tally.check(sif_eval(s, x, y) == direct_eval(e, x, y),
                                [&] { return "normal form differs at (" + x.str() + ", " + y.str() + ")"; });
                }
                for (int line = 0; line < 2; ++line) {
                    const Rational c = gen.rational(0, 8);
                    const PiecewisePoly r = restrict_line(s, Axis::x, c);
                    for (int k = 0; k < 50; ++k) {
                        const Rational y = gen.rational(0, 10);
                        tally.check(r(y) == sif_eval(s, c, y),
                                    [&] { return "restriction differs at (" + c.str() + ", " + y.str() + ")"; });
                    }
                }
            },
            [&] { return "tree " + std::to_string(n); });
    }
    return tally.finish("100 trees (" + std::to_string(rejected) + " oversized redrawn)");
}

} // namespace riesz::check
