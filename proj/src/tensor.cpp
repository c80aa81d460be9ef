#include "riesz/tensor.hpp"

#include <algorithm>

namespace riesz {

TensorSum::TensorSum(std::vector<TensorTerm> terms) {
    for (auto& t : terms)
        if (!t.left.is_zero() && !t.right.is_zero()) terms_.push_back(std::move(t));
}

TensorSum TensorSum::elementary(PiecewisePoly left, PiecewisePoly right) {
    return TensorSum({TensorTerm{std::move(left), std::move(right)}});
}

Rational TensorSum::operator()(const Rational& x, const Rational& y) const {
    if (x.sign() < 0 || y.sign() < 0) throw DomainError("evaluation outside the quadrant at (" + x.str() + ", " + y.str() + ")");
    Rational sum;
    for (const auto& t : terms_) sum += t.left(x) * t.right(y);
    return sum;
}

TensorSum operator+(const TensorSum& a, const TensorSum& b) {
    std::vector<TensorTerm> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return TensorSum(std::move(terms));
}

TensorSum scale(const Rational& c, const TensorSum& a) {
    std::vector<TensorTerm> terms;
    for (const auto& t : a.terms()) terms.push_back({scale(c, t.left), t.right});
    return TensorSum(std::move(terms));
}

TensorSum operator-(const TensorSum& a) { return scale(Rational(-1), a); }

Rational ts_eval(const TensorSum& t, const Rational& x, const Rational& y) { return t(x, y); }

SupInfForm::SupInfForm(std::vector<std::vector<TensorSum>> r) : rows(std::move(r)) {
    if (rows.empty()) throw ValidationError("sup-inf form needs at least one row", 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].empty()) throw ValidationError("sup-inf form row " + std::to_string(i) + " is empty", i);
}

Rational SupInfForm::operator()(const Rational& x, const Rational& y) const {
    std::optional<Rational> best;
    for (const auto& row : rows) {
        std::optional<Rational> low;
        for (const auto& entry : row) {
            Rational v = entry(x, y);
            if (!low || v < *low) low = std::move(v);
        }
        if (!best || *low > *best) best = std::move(low);
    }
    return *best;
}

std::size_t SupInfForm::entry_count() const {
    std::size_t n = 0;
    for (const auto& row : rows) n += row.size();
    return n;
}

Rational sif_eval(const SupInfForm& s, const Rational& x, const Rational& y) { return s(x, y); }

namespace {

using Rows = std::vector<std::vector<TensorSum>>;

template <typename T>
void push_unique(std::vector<T>& out, T value) {
    if (std::find(out.begin(), out.end(), value) == out.end()) out.push_back(std::move(value));
}

struct NormalForm {
    Rows leaf(const TensorSum& t) const { return {{t}}; }

    // sup_i inf_j a_ij + sup_k inf_l b_kl = sup_{i,k} inf_{j,l} (a_ij + b_kl)
    Rows add(const Rows& a, const Rows& b) const {
        Rows out;
        for (const auto& ra : a)
            for (const auto& rb : b) {
                std::vector<TensorSum> row;
                for (const auto& ea : ra)
                    for (const auto& eb : rb) push_unique(row, ea + eb);
                push_unique(out, std::move(row));
            }
        return out;
    }

    Rows join(Rows a, const Rows& b) const {
        for (const auto& row : b) push_unique(a, row);
        return a;
    }

    Rows meet(const Rows& a, const Rows& b) const {
        Rows out;
        for (const auto& ra : a)
            for (const auto& rb : b) {
                std::vector<TensorSum> row = ra;
                for (const auto& e : rb) push_unique(row, e);
                push_unique(out, std::move(row));
            }
        return out;
    }

    // -sup_i inf_j a_ij = sup over choice functions phi of inf_i (-a_{i, phi(i)})
    Rows negate(const Rows& a) const {
        Rows out;
        std::vector<std::size_t> pick(a.size(), 0);
        while (true) {
            std::vector<TensorSum> row;
            for (std::size_t i = 0; i < a.size(); ++i) push_unique(row, -a[i][pick[i]]);
            push_unique(out, std::move(row));
            std::size_t i = 0;
            while (i < a.size() && ++pick[i] == a[i].size()) pick[i++] = 0;
            if (i == a.size()) break;
        }
        return out;
    }

    Rows scale(const Rational& c, const Rows& a) const {
        if (c.sign() < 0) return negate(scale(c.abs(), a));
        Rows out;
        for (const auto& row : a) {
            std::vector<TensorSum> scaled;
            for (const auto& e : row) push_unique(scaled, riesz::scale(c, e));
            push_unique(out, std::move(scaled));
        }
        return out;
    }
};

std::optional<PiecewisePoly> fold_rows(const SupInfForm& s, Axis axis, const Rational& c,
                                       const std::optional<Rational>& window) {
    std::optional<PiecewisePoly> best;
    for (const auto& row : s.rows) {
        std::optional<PiecewisePoly> low;
        for (const auto& entry : row) {
            PiecewisePoly r = restrict_line(entry, axis, c);
            if (window) r = tail_from(r, *window);
            low = low ? meet(*low, r) : std::move(r);
        }
        best = best ? join(*best, *low) : std::move(low);
    }
    return best;
}

} // namespace

SupInfForm normalize(const LatticeExpr& e) {
    NormalForm alg;
    return SupInfForm(fold(e, alg));
}

PiecewisePoly restrict_line(const TensorSum& t, Axis axis, const Rational& c) {
    if (c.sign() < 0) throw DomainError("restriction line at negative coordinate " + c.str());
    PiecewisePoly out;
    for (const auto& term : t.terms()) {
        const bool fix_x = axis == Axis::x;
        const Rational factor = fix_x ? term.left(c) : term.right(c);
        out = out + scale(factor, fix_x ? term.right : term.left);
    }
    return out;
}

PiecewisePoly restrict_line(const SupInfForm& s, Axis axis, const Rational& c) {
    return *fold_rows(s, axis, c, std::nullopt);
}

PiecewisePoly restrict_line_from(const SupInfForm& s, Axis axis, const Rational& c, const Rational& window) {
    return *fold_rows(s, axis, c, window);
}

} // namespace riesz
