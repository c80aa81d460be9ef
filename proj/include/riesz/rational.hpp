#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace riesz {

/// Exact arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT: implicit from integers
    Rational(long numerator, long denominator);
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rational(mpq_class value);

    /// Parses "p" or "p/q" with an optional leading '-'. Throws
    /// std::invalid_argument on malformed text or a zero denominator.
    static Rational parse(std::string_view text);

    const mpz_class& numerator() const { return value_.get_num(); }
    const mpz_class& denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return denominator() == 1; }

    Rational abs() const;
    Rational reciprocal() const;
    mpz_class floor() const;
    mpz_class ceil() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "p/q", with "/q" omitted when q = 1.
    std::string str() const;

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational midpoint(const Rational& a, const Rational& b);
Rational power(const Rational& base, unsigned exponent);

/// The rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

} // namespace riesz
