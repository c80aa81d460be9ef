#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "riesz/polynomial.hpp"
#include "riesz/rational.hpp"

namespace riesz {

/// A closed interval [lo, hi] isolating one real root. Rational roots are
/// reported as point intervals (lo == hi). For an irrational root the root lies
/// strictly inside (lo, hi) and neither endpoint is a root.
struct RootInterval {
    Rational lo;
    Rational hi;

    bool is_point() const { return lo == hi; }
    friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

/// Sturm chain of a nonzero polynomial. `count(a, b)` is the number of
/// distinct real roots in (a, b].
class SturmSequence {
public:
    explicit SturmSequence(const Polynomial& p);

    int variations(const Rational& x) const;
    int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

private:
    std::vector<Polynomial> chain_;
};

/// Isolates the distinct real roots of `p` in (lo, hi], sorted ascending.
/// Irrational roots get intervals no wider than `max_width` lying strictly
/// inside (lo, hi). Throws DomainError("indeterminate roots") for p = 0.
std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi,
                                        const Rational& max_width = Rational(1, 16));

enum class SignClass {
    strictly_positive,
    strictly_negative,
    identically_zero,
    mixed,
    /// >= 0 with at least one zero (a root of even multiplicity).
    nonnegative,
    /// <= 0 with at least one zero.
    nonpositive,
};

std::string_view to_string(SignClass s);

struct SignReport {
    SignClass kind;
    std::optional<Rational> positive_witness;
    std::optional<Rational> negative_witness;
    /// Present when a rational zero of p lies in the interval.
    std::optional<Rational> zero_witness;
};

/// Exact sign of `p` on the open interval (lo, hi); requires lo < hi.
SignReport sign_on_interval(const Polynomial& p, const Rational& lo, const Rational& hi);

} // namespace riesz
