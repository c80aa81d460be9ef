#include "riesz/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace riesz {

Rational::Rational(long numerator, long denominator)
    : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw std::invalid_argument("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (negative) n = -n;
    return Rational(n, d);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    return Rational(denominator(), numerator());
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
    return q;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.is_zero()) throw std::domain_error("division by zero");
    value_ /= other.value_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

Rational power(const Rational& base, unsigned exponent) {
    Rational result(1);
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (hi < lo) return simplest_between(hi, lo);
    const Rational up(mpq_class(lo.ceil()));
    if (up <= hi) {
        // Any integer has denominator 1; prefer the one nearest zero.
        if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
        return lo.sign() > 0 ? up : Rational(mpq_class(hi.floor()));
    }
    // lo and hi share the integer part: recurse on the reciprocal fractional parts.
    const Rational base(mpq_class(lo.floor()));
    const Rational inner = simplest_between((hi - base).reciprocal(), (lo - base).reciprocal());
    return base + inner.reciprocal();
}

} // namespace riesz
