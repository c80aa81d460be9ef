#include "riesz/refute.hpp"

#include <algorithm>

namespace riesz {

namespace {

PiecewisePoly monomial_pp(long c, unsigned k) { return PiecewisePoly(Polynomial::monomial(Rational(c), k)); }

const Polynomial& square() {
    static const Polynomial p = Polynomial::monomial(Rational(1), 2);
    return p;
}

} // namespace

LatticeExpr counterexample_h() {
    return LatticeExpr::meet(LatticeExpr::leaf(TensorSum::elementary(monomial_pp(1, 0), monomial_pp(1, 2))),
                             LatticeExpr::leaf(TensorSum::elementary(monomial_pp(1, 2), monomial_pp(1, 0))));
}

SupInfForm counterexample_h_form() { return normalize(counterexample_h()); }

SecondPartials second_partials(const TensorSum& t) {
    SecondPartials out;
    for (const auto& term : t.terms()) {
        SecondPartials::Term xx{derivative(term.left, 2), as_form(term.right)};
        SecondPartials::Term yy{as_form(term.left), derivative(term.right, 2)};
        if (!xx.left.is_zero()) out.xx.push_back(std::move(xx));
        if (!yy.right.is_zero()) out.yy.push_back(std::move(yy));
    }
    return out;
}

IdealMembership generators_in_ideal(const TensorSum& t) {
    Rational lambda;
    for (std::size_t r = 0; r < t.terms().size(); ++r) {
        const auto& term = t.terms()[r];
        const IdealMembership left = ideal_member_linear(term.left);
        if (!left)
            return {std::nullopt, "term " + std::to_string(r) + " left factor " + term.left.str('x') +
                                      " not in E_x: " + left.reason};
        const IdealMembership right = ideal_member_linear(term.right);
        if (!right)
            return {std::nullopt, "term " + std::to_string(r) + " right factor " + term.right.str('y') +
                                      " not in E_y: " + right.reason};
        lambda += *left.lambda * *right.lambda;
    }
    return {lambda, {}};
}

Rational horizon(const SupInfForm& s) {
    Rational k;
    for (const auto& row : s.rows)
        for (const auto& entry : row) {
            if (const auto m = generators_in_ideal(entry); !m)
                throw PreconditionError("entry outside E_x (x) E_y: " + m.reason);
            for (const auto& term : entry.terms())
                k = std::max({k, term.left.last_breakpoint(), term.right.last_breakpoint()});
        }
    for (const auto& row : s.rows)
        for (const auto& entry : row) {
            const SecondPartials d = second_partials(entry);
            auto vanishes = [&](const PieceForm& f) {
                const auto beyond = f.pieces_beyond(k);
                return std::all_of(beyond.begin(), beyond.end(), [](const Polynomial& p) { return p.is_zero(); });
            };
            for (const auto& term : d.xx)
                if (!vanishes(term.left)) throw ConsistencyError("d^2/dx^2 does not vanish beyond " + k.str());
            for (const auto& term : d.yy)
                if (!vanishes(term.right)) throw ConsistencyError("d^2/dy^2 does not vanish beyond " + k.str());
        }
    return k;
}

RefutationCertificate refute_h(const SupInfForm& candidate, std::optional<Rational> line) {
    RefutationCertificate cert;
    cert.horizon = horizon(candidate);
    cert.line = line.value_or(cert.horizon + Rational(2));
    if (!(cert.line > cert.horizon))
        throw PreconditionError("line " + cert.line.str() + " must lie beyond the horizon " + cert.horizon.str());
    const Rational& k = cert.horizon;
    const Rational& c = cert.line;

    try {
        cert.restricted_candidate = restrict_line(candidate, Axis::x, c);
    } catch (const IrrationalCrossing&) {
        // Only (k, c) matters; beyond k every entry is affine so crossings are rational.
        cert.window_start = k;
        cert.restricted_candidate = restrict_line_from(candidate, Axis::x, c, k);
    }
    cert.restricted_h = restrict_line(counterexample_h_form(), Axis::x, c);

    const PiecewisePoly& rc = cert.restricted_candidate;
    for (std::size_t i = 0; i < rc.size(); ++i) {
        const bool beyond = i + 1 == rc.size() || rc.breakpoints()[i + 1] > k;
        if (beyond && !nth_derivative(rc.pieces()[i], 2).is_zero())
            throw ConsistencyError("restricted candidate is not affine beyond the horizon");
    }
    const PiecewisePoly& rh = cert.restricted_h;
    if (rh.pieces()[rh.piece_index(midpoint(k, c))] != square())
        throw ConsistencyError("restricted h is not y^2 between the horizon and the line");

    std::vector<Rational> cuts{k};
    for (const auto& t : rc.breakpoints())
        if (t > k && t < c) cuts.push_back(t);
    cuts.push_back(c);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rational& a = cuts[i];
        const Rational width = cuts[i + 1] - a;
        if (rc.pieces()[rc.piece_index(midpoint(a, cuts[i + 1]))] == square()) continue;
        // An affine piece meets y^2 at most twice, so one of three points differs.
        for (const Rational& frac : {Rational(1, 2), Rational(1, 4), Rational(3, 4)}) {
            const Rational y = a + frac * width;
            const Rational cand = rc(y);
            const Rational target = rh(y);
            if (cand == target) continue;
            if (candidate(c, y) != cand || counterexample_h_form()(c, y) != target)
                throw ConsistencyError("line restriction disagrees with direct evaluation at y = " + y.str());
            cert.witness = y;
            cert.candidate_value = cand;
            cert.h_value = target;
            return cert;
        }
    }
    throw ConsistencyError("no witness found on the line x = " + c.str());
}

std::vector<DominationLine> verify_h_dominated(const std::vector<Rational>& lines) {
    const SupInfForm h = counterexample_h_form();
    std::vector<DominationLine> out;
    for (const auto& c : lines) {
        PiecewisePoly rh = restrict_line(h, Axis::x, c);
        const auto w = find_negative(PiecewisePoly(Polynomial::monomial(c, 1)) - rh);
        out.push_back({c, !w.has_value(), w, std::move(rh)});
    }
    return out;
}

} // namespace riesz
