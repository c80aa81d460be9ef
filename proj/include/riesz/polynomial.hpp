#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "riesz/rational.hpp"

namespace riesz {

/// Univariate polynomial with rational coefficients, lowest degree first.
/// Canonical: no trailing zero coefficient, so the zero polynomial is empty.
class Polynomial {
public:
    /// Degree reported for the zero polynomial.
    static constexpr int kZeroDegree = -1;

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    /// The monomial c * x^k.
    static Polynomial monomial(const Rational& c, unsigned k);
    /// The identity x.
    static Polynomial identity() { return monomial(Rational(1), 1); }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of x^k, zero beyond the degree.
    Rational coefficient(std::size_t k) const;
    const Rational& leading() const { return coeffs_.back(); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational operator()(const Rational& x) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable form in variable `var`, descending degree, e.g.
    /// "2*x^2 - 3/2*x + 1".
    std::string str(char var = 'x') const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

Polynomial scale(const Rational& c, const Polynomial& p);
Polynomial derivative(const Polynomial& p);
Polynomial nth_derivative(Polynomial p, unsigned n);

/// Euclidean division over Q: returns (quotient, remainder). Throws
/// std::domain_error when dividing by the zero polynomial.
std::pair<Polynomial, Polynomial> divide(const Polynomial& num, const Polynomial& den);

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// p divided by gcd(p, p'): same real roots, all simple.
Polynomial square_free_part(const Polynomial& p);

/// Positive rational multiple of `p` with coprime integer coefficients.
Polynomial primitive_integer_part(const Polynomial& p);

/// Bound B with |r| < B for every real root r of a nonzero polynomial.
Rational root_bound(const Polynomial& p);

} // namespace riesz
