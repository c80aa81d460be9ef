#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riesz/expr.hpp"
#include "riesz/piecewise.hpp"

namespace riesz {

/// Elementary tensor left(x) * right(y).
struct TensorTerm {
    PiecewisePoly left;
    PiecewisePoly right;

    friend bool operator==(const TensorTerm&, const TensorTerm&) = default;
};

/// Element of the algebraic tensor product PP (x) PP: a finite sum of
/// elementary tensors. Terms with a zero factor are dropped, so the empty sum
/// is the zero element.
class TensorSum {
public:
    TensorSum() = default;
    explicit TensorSum(std::vector<TensorTerm> terms);
    static TensorSum elementary(PiecewisePoly left, PiecewisePoly right);

    const std::vector<TensorTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Throws DomainError for negative coordinates.
    Rational operator()(const Rational& x, const Rational& y) const;

    friend bool operator==(const TensorSum&, const TensorSum&) = default;

private:
    std::vector<TensorTerm> terms_;
};

TensorSum operator+(const TensorSum& a, const TensorSum& b);
TensorSum operator-(const TensorSum& a);
TensorSum scale(const Rational& c, const TensorSum& a);

Rational ts_eval(const TensorSum& t, const Rational& x, const Rational& y);

/// Element of the Riesz space generated by tensor sums, as sup over rows of
/// inf over each row's entries. Rows and entries are nonempty.
struct SupInfForm {
    std::vector<std::vector<TensorSum>> rows;

    SupInfForm() = default;
    explicit SupInfForm(std::vector<std::vector<TensorSum>> rows);

    Rational operator()(const Rational& x, const Rational& y) const;
    std::size_t entry_count() const;

    friend bool operator==(const SupInfForm&, const SupInfForm&) = default;
};

Rational sif_eval(const SupInfForm& s, const Rational& x, const Rational& y);

/// Lattice expression over tensor sums, prior to normalization.
using LatticeExpr = Expr<TensorSum>;

/// Rewrites an expression into sup-inf normal form, preserving its value.
/// Duplicate entries within a row and duplicate rows are removed.
SupInfForm normalize(const LatticeExpr& e);

enum class Axis { x, y };

/// t -> T(c, t) for axis x, or t -> T(t, c) for axis y.
PiecewisePoly restrict_line(const TensorSum& t, Axis axis, const Rational& c);

/// Exact univariate restriction of `s` along the line where `axis` equals c,
/// folded with pp join/meet. Propagates IrrationalCrossing.
PiecewisePoly restrict_line(const SupInfForm& s, Axis axis, const Rational& c);

/// Restriction valid only on [window, inf): every entry is first replaced by
/// tail_from(entry, window), so crossings to the left of the window are never
/// computed.
PiecewisePoly restrict_line_from(const SupInfForm& s, Axis axis, const Rational& c, const Rational& window);

} // namespace riesz
