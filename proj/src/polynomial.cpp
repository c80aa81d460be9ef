#include "riesz/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace riesz {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
    trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, unsigned k) {
    std::vector<Rational> coeffs(k + 1);
    coeffs[k] = c;
    return Polynomial(std::move(coeffs));
}

Rational Polynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

std::string Polynomial::str(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (k == 0) {
            out += mag.str();
            continue;
        }
        if (mag != Rational(1)) out += mag.str() + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

Polynomial scale(const Rational& c, const Polynomial& p) {
    if (c.is_zero()) return {};
    std::vector<Rational> coeffs = p.coefficients();
    for (auto& x : coeffs) x *= c;
    return Polynomial(std::move(coeffs));
}

Polynomial derivative(const Polynomial& p) {
    if (p.degree() < 1) return {};
    std::vector<Rational> coeffs(p.coefficients().size() - 1);
    for (std::size_t k = 1; k < p.coefficients().size(); ++k)
        coeffs[k - 1] = p.coefficients()[k] * Rational(static_cast<long>(k));
    return Polynomial(std::move(coeffs));
}

Polynomial nth_derivative(Polynomial p, unsigned n) {
    for (unsigned i = 0; i < n && !p.is_zero(); ++i) p = derivative(p);
    return p;
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    if (num.degree() < den.degree()) return {Polynomial{}, num};
    std::vector<Rational> rem = num.coefficients();
    std::vector<Rational> quot(rem.size() - den.coefficients().size() + 1);
    const auto& d = den.coefficients();
    const Rational lead = den.leading();
    for (std::size_t shift = quot.size(); shift-- > 0;) {
        const Rational q = rem[shift + d.size() - 1] / lead;
        quot[shift] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < d.size(); ++j) rem[shift + j] -= q * d[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

namespace {

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return scale(p.leading().reciprocal(), p);
}

} // namespace

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divide(a, b).second;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

Polynomial square_free_part(const Polynomial& p) {
    if (p.degree() < 1) return p;
    const Polynomial g = gcd(p, derivative(p));
    return monic(divide(p, g).first);
}

Polynomial primitive_integer_part(const Polynomial& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& c : p.coefficients()) {
        const mpz_class scaled = c.numerator() * (den_lcm / c.denominator());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    return scale(Rational(den_lcm, num_gcd), p);
}

Rational root_bound(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("root bound of the zero polynomial");
    Rational largest;
    const Rational lead = p.leading().abs();
    for (int k = 0; k < p.degree(); ++k) largest = std::max(largest, p.coefficients()[static_cast<std::size_t>(k)].abs() / lead);
    return largest + Rational(1);
}

} // namespace riesz
