#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riesz/errors.hpp"
#include "riesz/polynomial.hpp"
#include "riesz/rational.hpp"
#include "riesz/roots.hpp"

namespace riesz {

/// Continuous piecewise polynomial on [0, inf).
///
/// Breakpoints 0 = t_0 < t_1 < ... < t_{n-1}; piece i is in force on
/// [t_i, t_{i+1}] and the last piece on [t_{n-1}, inf). Pieces are written in
/// the global variable (not shifted to their left endpoint). Canonical form has
/// no breakpoint whose neighbouring pieces coincide, so structural equality is
/// equality of functions.
class PiecewisePoly {
public:
    /// The zero function.
    PiecewisePoly();
    /// A single polynomial on all of [0, inf).
    explicit PiecewisePoly(Polynomial p);

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Polynomial>& pieces() const { return pieces_; }
    std::size_t size() const { return pieces_.size(); }

    const Rational& last_breakpoint() const { return breakpoints_.back(); }
    const Polynomial& tail() const { return pieces_.back(); }
    /// Index of the piece in force on [t_i, t_{i+1}) containing x >= 0.
    std::size_t piece_index(const Rational& x) const;

    /// Throws DomainError for x < 0.
    Rational operator()(const Rational& x) const;

    bool is_zero() const { return pieces_.size() == 1 && pieces_.front().is_zero(); }

    friend bool operator==(const PiecewisePoly&, const PiecewisePoly&) = default;

    /// DSL literal, e.g. "pp [0: x^2][1: 2*x - 1]".
    std::string str(char var = 'x') const;

private:
    friend PiecewisePoly make_pp(std::vector<Rational>, std::vector<Polynomial>);
    friend class PiecewiseBuilder;

    std::vector<Rational> breakpoints_;
    std::vector<Polynomial> pieces_;
};

/// Validates and canonicalizes. Throws ValidationError (with the offending
/// index) for empty or mismatched lists, a first breakpoint other than 0,
/// non-increasing breakpoints, or a discontinuity.
PiecewisePoly make_pp(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces);

/// pp_join/pp_meet found a sign change of f - g at an irrational point.
class IrrationalCrossing : public Error {
public:
    explicit IrrationalCrossing(const RootInterval& where);
    const RootInterval& where() const { return where_; }

private:
    RootInterval where_;
};

PiecewisePoly operator+(const PiecewisePoly& f, const PiecewisePoly& g);
PiecewisePoly operator-(const PiecewisePoly& f, const PiecewisePoly& g);
PiecewisePoly operator-(const PiecewisePoly& f);
PiecewisePoly scale(const Rational& c, const PiecewisePoly& f);

/// Pointwise maximum. Throws IrrationalCrossing when f - g changes sign at an
/// irrational point.
PiecewisePoly join(const PiecewisePoly& f, const PiecewisePoly& g);
/// Pointwise minimum.
PiecewisePoly meet(const PiecewisePoly& f, const PiecewisePoly& g);
/// |f| = f v (-f).
PiecewisePoly abs(const PiecewisePoly& f);

/// Some x >= 0 with f(x) < 0, or nothing when f >= 0. When f is eventually
/// negative the witness is the least integer beyond every root of the tail.
std::optional<Rational> find_negative(const PiecewisePoly& f);
/// f <= g pointwise on [0, inf), decided exactly.
bool leq(const PiecewisePoly& f, const PiecewisePoly& g);

/// Equal to f on [k, inf) and to the piece in force at k on [0, k].
PiecewisePoly tail_from(const PiecewisePoly& f, const Rational& k);

/// Result of testing membership in the principal ideal generated by x.
struct IdealMembership {
    /// Certified lambda with |f(x)| <= lambda * x on [0, inf), when a member.
    std::optional<Rational> lambda;
    /// Why f is not a member ("f(0) = 1 is nonzero", "last piece degree 2").
    std::string reason;

    explicit operator bool() const { return lambda.has_value(); }
};

/// Membership of f in E_x = { g : |g| <= lambda * x }. Exact: members are
/// exactly the f with f(0) = 0 and an affine last piece.
IdealMembership ideal_member_linear(const PiecewisePoly& f);

/// |f(x)| > C * x at `witness`.
class BoundViolation : public PreconditionError {
public:
    BoundViolation(const Rational& witness, const Rational& value, const Rational& bound);
    const Rational& witness() const { return witness_; }

private:
    Rational witness_;
};

struct EventualAffinity {
    /// The last breakpoint; f'' = 0 on (k, inf).
    Rational k;
    /// Second derivative of the last piece (always the zero polynomial).
    Polynomial tail_second_derivative;
};

/// Given |f(x)| <= C * x on [0, inf), returns the horizon beyond which f is
/// affine. Re-verifies the bound and throws BoundViolation with a witness when
/// it fails.
EventualAffinity eventual_affinity(const PiecewisePoly& f, const Rational& bound);

/// Piecewise polynomial that need not be continuous, e.g. a derivative. Values
/// on breakpoints are not meaningful.
struct PieceForm {
    std::vector<Rational> breakpoints;
    std::vector<Polynomial> pieces;

    /// Pieces in force somewhere on (k, inf).
    std::vector<Polynomial> pieces_beyond(const Rational& k) const;
    bool is_zero() const;
    friend bool operator==(const PieceForm&, const PieceForm&) = default;
};

PieceForm as_form(const PiecewisePoly& f);
/// Piecewise derivative of the given order, valid away from breakpoints.
PieceForm derivative(const PiecewisePoly& f, unsigned order = 1);

} // namespace riesz
