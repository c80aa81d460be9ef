#pragma once

#include <optional>
#include <vector>

#include "riesz/piecewise.hpp"
#include "riesz/tensor.hpp"

namespace riesz {

/// h = (1 (x) y^2) /\ (x^2 (x) 1), i.e. h(x, y) = min(x^2, y^2).
LatticeExpr counterexample_h();
SupInfForm counterexample_h_form();

/// Piecewise second pure partials of a tensor sum: xx holds the terms
/// p'' (x) q and yy the terms p (x) q''. Terms with a zero factor are dropped.
struct SecondPartials {
    struct Term {
        PieceForm left;
        PieceForm right;
        friend bool operator==(const Term&, const Term&) = default;
    };
    std::vector<Term> xx;
    std::vector<Term> yy;
};

SecondPartials second_partials(const TensorSum& t);

/// Checks every left factor against E_x and every right factor against E_y;
/// on success lambda = sum of lambda_r * mu_r bounds |t| <= lambda * (x (x) y).
IdealMembership generators_in_ideal(const TensorSum& t);

/// Largest last breakpoint over every factor of every entry; beyond it every
/// factor is affine. Throws PreconditionError when an entry is outside the
/// ideal, and ConsistencyError if a second partial fails to vanish beyond k.
Rational horizon(const SupInfForm& s);

/// Exact witness that a candidate differs from h.
struct RefutationCertificate {
    Rational horizon;
    /// Abscissa c > horizon of the vertical line x = c.
    Rational line;
    /// Ordinate with horizon < witness < line.
    Rational witness;
    Rational candidate_value;
    Rational h_value;
    /// t -> candidate(c, t) and t -> h(c, t).
    PiecewisePoly restricted_candidate;
    PiecewisePoly restricted_h;
    /// The restricted candidate is exact on [window_start, inf); 0 unless the
    /// full restriction hit an irrational crossing left of the horizon.
    Rational window_start;
};

/// Refutes candidate = h. Default line is horizon + 2. Throws
/// PreconditionError for candidates outside E_x (x) E_y, and ConsistencyError
/// if no witness exists (impossible for valid input).
RefutationCertificate refute_h(const SupInfForm& candidate, std::optional<Rational> line = std::nullopt);

struct DominationLine {
    Rational line;
    bool holds;
    /// Some y with h(c, y) > c * y when the check fails.
    std::optional<Rational> witness;
    PiecewisePoly restricted_h;
};

/// Checks h(c, y) <= c * y on y >= 0 for each line x = c, symbolically.
std::vector<DominationLine> verify_h_dominated(const std::vector<Rational>& lines);

} // namespace riesz
