#include "riesz/roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "riesz/errors.hpp"

namespace riesz {

SturmSequence::SturmSequence(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("indeterminate roots");
    chain_.push_back(p);
    Polynomial next = derivative(p);
    while (!next.is_zero()) {
        // Positive rescaling keeps sign variations intact and curbs coefficient growth.
        chain_.push_back(scale(next.leading().abs().reciprocal(), next));
        next = -divide(chain_[chain_.size() - 2], chain_.back()).second;
    }
}

int SturmSequence::variations(const Rational& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& q : chain_) {
        const int s = q(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

namespace {

class Isolator {
public:
    Isolator(const Polynomial& p, Rational lo, Rational hi, Rational max_width)
        : q_(square_free_part(p)),
          sturm_(q_),
          lo_(std::move(lo)),
          hi_(std::move(hi)),
          max_width_(std::move(max_width)) {
        const mpz_class lead = abs(primitive_integer_part(q_).leading().numerator());
        // Two distinct rationals with denominators dividing `lead` are at least
        // 1/lead^2 apart, so a narrower interval holds at most one of them.
        separation_ = Rational(mpz_class(1), mpz_class(lead * lead));
    }

    std::vector<RootInterval> run() {
        split(lo_, hi_, sturm_.count(lo_, hi_));
        return std::move(out_);
    }

private:
    void split(const Rational& a, const Rational& b, int n) {
        if (n <= 0) return;
        if (n == 1) {
            emit(a, b);
            return;
        }
        const Rational m = midpoint(a, b);
        const int left = sturm_.count(a, m);
        split(a, m, left);
        split(m, b, n - left);
    }

    // Exactly one root of q in (a, b].
    void emit(Rational a, Rational b) {
        if (q_(b).is_zero()) {
            out_.push_back({b, b});
            return;
        }
        auto narrow = [&] {
            const Rational m = midpoint(a, b);
            if (q_(m).is_zero()) {
                out_.push_back({m, m});
                return false;
            }
            if (sturm_.count(a, m) == 1)
                b = m;
            else
                a = m;
            return true;
        };
        while (b - a >= separation_ || b - a > max_width_)
            if (!narrow()) return;
        const Rational candidate = simplest_between(a, b);
        if (q_(candidate).is_zero()) {
            out_.push_back({candidate, candidate});
            return;
        }
        while (a == lo_ || b == hi_ || q_(a).is_zero())
            if (!narrow()) return;
        out_.push_back({a, b});
    }

    Polynomial q_;
    SturmSequence sturm_;
    Rational lo_, hi_, max_width_, separation_;
    std::vector<RootInterval> out_;
};

} // namespace

std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi,
                                        const Rational& max_width) {
    if (p.is_zero()) throw DomainError("indeterminate roots");
    if (!(lo < hi)) throw PreconditionError("isolate_roots requires lo < hi");
    if (max_width.sign() <= 0) throw PreconditionError("isolate_roots requires a positive width");
    if (p.degree() == 0) return {};
    return Isolator(p, lo, hi, max_width).run();
}

std::string_view to_string(SignClass s) {
    switch (s) {
    case SignClass::strictly_positive: return "strictly-positive";
    case SignClass::strictly_negative: return "strictly-negative";
    case SignClass::identically_zero: return "identically-zero";
    case SignClass::mixed: return "mixed";
    case SignClass::nonnegative: return "nonnegative";
    case SignClass::nonpositive: return "nonpositive";
    }
    return "?";
}

SignReport sign_on_interval(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw PreconditionError("sign_on_interval requires lo < hi");
    if (p.is_zero()) return {SignClass::identically_zero, {}, {}, {}};

    std::vector<RootInterval> roots;
    if (p.degree() > 0) {
        roots = isolate_roots(p, lo, hi);
        if (!roots.empty() && roots.back().is_point() && roots.back().lo == hi) roots.pop_back();
    }
    if (roots.empty()) {
        const Rational m = midpoint(lo, hi);
        return p(m).sign() > 0 ? SignReport{SignClass::strictly_positive, m, {}, {}}
                               : SignReport{SignClass::strictly_negative, {}, m, {}};
    }

    // Every maximal root-free stretch of (lo, hi) contains one of these samples:
    // the endpoints of irrational isolating intervals, or the midpoint between
    // consecutive markers.
    std::vector<Rational> markers{lo};
    std::vector<Rational> samples;
    std::optional<Rational> zero;
    for (const auto& r : roots) {
        if (r.is_point()) {
            if (!zero) zero = r.lo;
            markers.push_back(r.lo);
        } else {
            markers.push_back(r.lo);
            markers.push_back(r.hi);
            samples.push_back(r.lo);
            samples.push_back(r.hi);
        }
    }
    markers.push_back(hi);
    for (std::size_t i = 0; i + 1 < markers.size(); ++i)
        if (markers[i] < markers[i + 1]) samples.push_back(midpoint(markers[i], markers[i + 1]));
    std::sort(samples.begin(), samples.end());

    SignReport report{SignClass::mixed, {}, {}, zero};
    for (const auto& s : samples) {
        const int sg = p(s).sign();
        if (sg > 0 && !report.positive_witness) report.positive_witness = s;
        if (sg < 0 && !report.negative_witness) report.negative_witness = s;
    }
    if (report.positive_witness && report.negative_witness) return report;
    report.kind = report.positive_witness ? SignClass::nonnegative : SignClass::nonpositive;
    return report;
}

} // namespace riesz
