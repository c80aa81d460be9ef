#include "riesz/piecewise.hpp"

#include <algorithm>
#include <utility>

namespace riesz {

/// Appends pieces left to right, merging repeats; no validation.
class PiecewiseBuilder {
public:
    void push(const Rational& start, const Polynomial& p) {
        if (!out_.pieces_.empty() && out_.pieces_.back() == p) return;
        out_.breakpoints_.push_back(start);
        out_.pieces_.push_back(p);
    }

    PiecewisePoly finish() && {
        if (out_.pieces_.empty()) return PiecewisePoly();
        return std::move(out_);
    }

private:
    PiecewisePoly out_ = empty();

    static PiecewisePoly empty() {
        PiecewisePoly p;
        p.breakpoints_.clear();
        p.pieces_.clear();
        return p;
    }
};

PiecewisePoly::PiecewisePoly() : breakpoints_{Rational(0)}, pieces_{Polynomial()} {}

PiecewisePoly::PiecewisePoly(Polynomial p) : breakpoints_{Rational(0)}, pieces_{std::move(p)} {}

std::size_t PiecewisePoly::piece_index(const Rational& x) const {
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    return static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, it - breakpoints_.begin() - 1));
}

Rational PiecewisePoly::operator()(const Rational& x) const {
    if (x.sign() < 0) throw DomainError("evaluation at negative x = " + x.str());
    return pieces_[piece_index(x)](x);
}

std::string PiecewisePoly::str(char var) const {
    std::string out = "pp ";
    for (std::size_t i = 0; i < pieces_.size(); ++i)
        out += "[" + breakpoints_[i].str() + ": " + pieces_[i].str(var) + "]";
    return out;
}

PiecewisePoly make_pp(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces) {
    if (pieces.empty()) throw ValidationError("piecewise polynomial needs at least one piece", 0);
    if (breakpoints.size() != pieces.size())
        throw ValidationError("breakpoint and piece counts differ", std::min(breakpoints.size(), pieces.size()));
    if (!breakpoints.front().is_zero()) throw ValidationError("first breakpoint must be 0", 0);
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i - 1] < breakpoints[i]))
            throw ValidationError("breakpoints not strictly increasing at index " + std::to_string(i), i);
        const Rational left = pieces[i - 1](breakpoints[i]);
        const Rational right = pieces[i](breakpoints[i]);
        if (left != right)
            throw ValidationError("discontinuity at breakpoint " + breakpoints[i].str() + " (index " +
                                      std::to_string(i) + "): " + left.str() + " != " + right.str(),
                                  i);
    }
    PiecewiseBuilder b;
    for (std::size_t i = 0; i < pieces.size(); ++i) b.push(breakpoints[i], pieces[i]);
    return std::move(b).finish();
}

IrrationalCrossing::IrrationalCrossing(const RootInterval& where)
    : Error("irrational crossing in (" + where.lo.str() + ", " + where.hi.str() + ")"), where_(where) {}

namespace {

/// Walks the common refinement of two breakpoint lists.
template <typename Fn>
void for_each_segment(const PiecewisePoly& f, const PiecewisePoly& g, Fn&& fn) {
    std::vector<Rational> cuts;
    std::set_union(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(),
                   g.breakpoints().end(), std::back_inserter(cuts));
    std::size_t i = 0, j = 0;
    for (std::size_t k = 0; k < cuts.size(); ++k) {
        while (i + 1 < f.size() && f.breakpoints()[i + 1] <= cuts[k]) ++i;
        while (j + 1 < g.size() && g.breakpoints()[j + 1] <= cuts[k]) ++j;
        const Rational* end = k + 1 < cuts.size() ? &cuts[k + 1] : nullptr;
        fn(cuts[k], end, f.pieces()[i], g.pieces()[j]);
    }
}

PiecewisePoly select(const PiecewisePoly& f, const PiecewisePoly& g, bool take_max) {
    PiecewiseBuilder out;
    for_each_segment(f, g, [&](const Rational& start, const Rational* end, const Polynomial& a,
                               const Polynomial& b) {
        const Polynomial d = a - b;
        if (d.degree() < 1) {
            const int sg = d.is_zero() ? 0 : d.leading().sign();
            out.push(start, (sg >= 0) == take_max ? a : b);
            return;
        }
        const Rational stop = end ? *end : std::max(start, root_bound(d)) + Rational(1);
        std::vector<Rational> starts{start};
        for (const auto& r : isolate_roots(d, start, stop)) {
            if (r.is_point()) {
                if (r.lo < stop) starts.push_back(r.lo);
            } else if (d(r.lo).sign() != d(r.hi).sign()) {
                throw IrrationalCrossing(r);
            }
        }
        for (std::size_t s = 0; s < starts.size(); ++s) {
            const Rational sample =
                s + 1 < starts.size() ? midpoint(starts[s], starts[s + 1]) : (end ? midpoint(starts[s], *end) : stop);
            out.push(starts[s], (d(sample).sign() > 0) == take_max ? a : b);
        }
    });
    return std::move(out).finish();
}

} // namespace

PiecewisePoly operator+(const PiecewisePoly& f, const PiecewisePoly& g) {
    PiecewiseBuilder out;
    for_each_segment(f, g, [&](const Rational& start, const Rational*, const Polynomial& a, const Polynomial& b) {
        out.push(start, a + b);
    });
    return std::move(out).finish();
}

PiecewisePoly operator-(const PiecewisePoly& f, const PiecewisePoly& g) { return f + (-g); }

PiecewisePoly operator-(const PiecewisePoly& f) { return scale(Rational(-1), f); }

PiecewisePoly scale(const Rational& c, const PiecewisePoly& f) {
    if (c.is_zero()) return PiecewisePoly();
    PiecewiseBuilder out;
    for (std::size_t i = 0; i < f.size(); ++i) out.push(f.breakpoints()[i], scale(c, f.pieces()[i]));
    return std::move(out).finish();
}

PiecewisePoly join(const PiecewisePoly& f, const PiecewisePoly& g) { return select(f, g, true); }

PiecewisePoly meet(const PiecewisePoly& f, const PiecewisePoly& g) { return select(f, g, false); }

PiecewisePoly abs(const PiecewisePoly& f) { return join(f, -f); }

std::optional<Rational> find_negative(const PiecewisePoly& f) {
    const Polynomial& tail = f.tail();
    const Rational& t = f.last_breakpoint();
    if (!tail.is_zero() && tail.leading().sign() < 0) {
        Rational beyond = t;
        if (tail.degree() > 0) {
            const auto roots = isolate_roots(tail, t, std::max(t, root_bound(tail)) + Rational(1));
            if (!roots.empty()) beyond = roots.back().hi;
        }
        return Rational(mpq_class(beyond.floor() + 1));
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Rational& start = f.breakpoints()[i];
        const Polynomial& p = f.pieces()[i];
        if (p(start).sign() < 0) return start;
        const Rational stop = i + 1 < f.size()
                                  ? f.breakpoints()[i + 1]
                                  : (p.is_zero() ? start + Rational(1) : std::max(start, root_bound(p)) + Rational(1));
        const SignReport report = sign_on_interval(p, start, stop);
        if (report.negative_witness) return report.negative_witness;
    }
    return std::nullopt;
}

bool leq(const PiecewisePoly& f, const PiecewisePoly& g) { return !find_negative(g - f); }

PiecewisePoly tail_from(const PiecewisePoly& f, const Rational& k) {
    if (k.sign() <= 0) return f;
    const std::size_t first = f.piece_index(k);
    PiecewiseBuilder out;
    out.push(Rational(0), f.pieces()[first]);
    for (std::size_t i = first + 1; i < f.size(); ++i) out.push(f.breakpoints()[i], f.pieces()[i]);
    return std::move(out).finish();
}

namespace {

Rational abs_coefficient_sum(const Polynomial& p) {
    Rational sum;
    for (const auto& c : p.coefficients()) sum += c.abs();
    return sum;
}

// sup |p| on [lo, hi] with 0 <= lo <= hi, bounded by sum |c_k| * max(1, hi)^deg.
Rational coefficient_bound(const Polynomial& p, const Rational& hi) {
    if (p.is_zero()) return Rational(0);
    return abs_coefficient_sum(p) * power(std::max(Rational(1), hi), static_cast<unsigned>(p.degree()));
}

PiecewisePoly identity_times(const Rational& c) { return PiecewisePoly(Polynomial::monomial(c, 1)); }

} // namespace

IdealMembership ideal_member_linear(const PiecewisePoly& f) {
    const Rational at_zero = f(Rational(0));
    if (!at_zero.is_zero()) return {std::nullopt, "f(0) = " + at_zero.str() + " is nonzero"};
    if (f.tail().degree() > 1) return {std::nullopt, "last piece degree " + std::to_string(f.tail().degree())};

    const std::size_t n = f.size();
    Rational lambda;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const Polynomial& p = f.pieces()[i];
        const Rational& hi = f.breakpoints()[i + 1];
        if (i == 0) {
            // p(0) = 0, so p(x) = x * q(x) and |p(x)| / x = |q(x)| on (0, t_1].
            std::vector<Rational> shifted(p.coefficients().begin() + (p.is_zero() ? 0 : 1), p.coefficients().end());
            lambda = std::max(lambda, coefficient_bound(Polynomial(std::move(shifted)), hi));
        } else {
            lambda = std::max(lambda, coefficient_bound(p, hi) / f.breakpoints()[i]);
        }
    }
    // c + d*x on [t, inf): |c/x + d| is monotone in x, so it peaks at x = t or at infinity.
    const Rational& t = f.last_breakpoint();
    const Rational c = f.tail().coefficient(0);
    const Rational d = f.tail().coefficient(1);
    Rational tail_lambda = d.abs();
    if (t.sign() > 0) tail_lambda = std::max(tail_lambda, (c / t + d).abs());
    lambda = std::max(lambda, tail_lambda);

    if (find_negative(identity_times(lambda) - f) || find_negative(identity_times(lambda) + f))
        throw ConsistencyError("certified lambda " + lambda.str() + " does not bound " + f.str());
    return {lambda, {}};
}

BoundViolation::BoundViolation(const Rational& witness, const Rational& value, const Rational& bound)
    : PreconditionError("bound violated at x = " + witness.str() + ": |f(x)| = " + value.str() + " > " +
                        bound.str()),
      witness_(witness) {}

EventualAffinity eventual_affinity(const PiecewisePoly& f, const Rational& bound) {
    for (const auto& gap : {identity_times(bound) - f, identity_times(bound) + f}) {
        if (const auto w = find_negative(gap)) throw BoundViolation(*w, f(*w).abs(), bound * *w);
    }
    EventualAffinity out{f.last_breakpoint(), nth_derivative(f.tail(), 2)};
    if (!out.tail_second_derivative.is_zero())
        throw ConsistencyError("linearly bounded function with non-affine tail: " + f.str());
    return out;
}

std::vector<Polynomial> PieceForm::pieces_beyond(const Rational& k) const {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (i + 1 == pieces.size() || breakpoints[i + 1] > k) out.push_back(pieces[i]);
    return out;
}

bool PieceForm::is_zero() const {
    return std::all_of(pieces.begin(), pieces.end(), [](const Polynomial& p) { return p.is_zero(); });
}

PieceForm as_form(const PiecewisePoly& f) { return {f.breakpoints(), f.pieces()}; }

PieceForm derivative(const PiecewisePoly& f, unsigned order) {
    PieceForm out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        Polynomial d = nth_derivative(f.pieces()[i], order);
        if (!out.pieces.empty() && out.pieces.back() == d) continue;
        out.breakpoints.push_back(f.breakpoints()[i]);
        out.pieces.push_back(std::move(d));
    }
    return out;
}

} // namespace riesz
