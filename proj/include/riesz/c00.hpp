#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "riesz/expr.hpp"
#include "riesz/piecewise.hpp"
#include "riesz/rational.hpp"

namespace riesz {

/// Element of an index set I, identified by its token.
class Index {
public:
    Index() = default;
    explicit Index(std::string token) : token_(std::move(token)) {}

    const std::string& token() const { return token_; }
    friend auto operator<=>(const Index&, const Index&) = default;

private:
    std::string token_;
};

/// Riesz-space operations on the element spaces a finitely supported map may
/// take values in.
template <typename E>
struct ElementSpace;

template <>
struct ElementSpace<Rational> {
    static Rational zero() { return Rational(0); }
    static bool is_zero(const Rational& a) { return a.is_zero(); }
    static Rational add(const Rational& a, const Rational& b) { return a + b; }
    static Rational scale(const Rational& c, const Rational& a) { return c * a; }
    static Rational join(const Rational& a, const Rational& b) { return std::max(a, b); }
    static Rational meet(const Rational& a, const Rational& b) { return std::min(a, b); }
    static Rational abs(const Rational& a) { return a.abs(); }
};

template <>
struct ElementSpace<PiecewisePoly> {
    static PiecewisePoly zero() { return PiecewisePoly(); }
    static bool is_zero(const PiecewisePoly& a) { return a.is_zero(); }
    static PiecewisePoly add(const PiecewisePoly& a, const PiecewisePoly& b) { return a + b; }
    static PiecewisePoly scale(const Rational& c, const PiecewisePoly& a) { return riesz::scale(c, a); }
    static PiecewisePoly join(const PiecewisePoly& a, const PiecewisePoly& b) { return riesz::join(a, b); }
    static PiecewisePoly meet(const PiecewisePoly& a, const PiecewisePoly& b) { return riesz::meet(a, b); }
    static PiecewisePoly abs(const PiecewisePoly& a) { return riesz::abs(a); }
};

/// Finitely supported map I -> E, ordered pointwise. No entry is zero, so the
/// key set is exactly the support S(f).
template <typename E>
class FinSuppMap {
public:
    using Space = ElementSpace<E>;

    FinSuppMap() = default;

    /// Later duplicates overwrite earlier ones; zero values are dropped.
    explicit FinSuppMap(std::vector<std::pair<Index, E>> entries) {
        for (auto& [i, v] : entries) set(i, std::move(v));
    }

    void set(const Index& i, E value) {
        if (Space::is_zero(value))
            entries_.erase(i);
        else
            entries_.insert_or_assign(i, std::move(value));
    }

    /// f(i), the zero element off the support.
    E operator()(const Index& i) const {
        const auto it = entries_.find(i);
        return it == entries_.end() ? Space::zero() : it->second;
    }

    const std::map<Index, E>& entries() const { return entries_; }
    std::vector<Index> support() const {
        std::vector<Index> out;
        for (const auto& [i, v] : entries_) out.push_back(i);
        return out;
    }
    bool empty() const { return entries_.empty(); }

    friend bool operator==(const FinSuppMap&, const FinSuppMap&) = default;

private:
    std::map<Index, E> entries_;
};

enum class PointwiseOp { add, scale, join, meet, abs };

namespace detail {

template <typename E, typename Fn>
FinSuppMap<E> over_union(const FinSuppMap<E>& f, const FinSuppMap<E>& g, Fn&& fn) {
    FinSuppMap<E> out;
    for (const auto& [i, v] : f.entries()) out.set(i, fn(v, g(i)));
    for (const auto& [i, v] : g.entries())
        if (!f.entries().contains(i)) out.set(i, fn(f(i), v));
    return out;
}

} // namespace detail

template <typename E>
FinSuppMap<E> operator+(const FinSuppMap<E>& f, const FinSuppMap<E>& g) {
    return detail::over_union(f, g, ElementSpace<E>::add);
}

template <typename E>
FinSuppMap<E> scale(const Rational& c, const FinSuppMap<E>& f) {
    FinSuppMap<E> out;
    for (const auto& [i, v] : f.entries()) out.set(i, ElementSpace<E>::scale(c, v));
    return out;
}

template <typename E>
FinSuppMap<E> operator-(const FinSuppMap<E>& f) {
    return scale(Rational(-1), f);
}

template <typename E>
FinSuppMap<E> join(const FinSuppMap<E>& f, const FinSuppMap<E>& g) {
    return detail::over_union(f, g, ElementSpace<E>::join);
}

template <typename E>
FinSuppMap<E> meet(const FinSuppMap<E>& f, const FinSuppMap<E>& g) {
    return detail::over_union(f, g, ElementSpace<E>::meet);
}

template <typename E>
FinSuppMap<E> abs(const FinSuppMap<E>& f) {
    FinSuppMap<E> out;
    for (const auto& [i, v] : f.entries()) out.set(i, ElementSpace<E>::abs(v));
    return out;
}

/// Pointwise operation over S(f) u S(g). Unary operations (abs, scale) act on
/// f alone; `factor` is the scalar for scale.
template <typename E>
FinSuppMap<E> c00_pointwise(PointwiseOp op, const FinSuppMap<E>& f, const FinSuppMap<E>& g,
                            const Rational& factor = Rational(1)) {
    switch (op) {
    case PointwiseOp::add: return f + g;
    case PointwiseOp::scale: return scale(factor, f);
    case PointwiseOp::join: return join(f, g);
    case PointwiseOp::meet: return meet(f, g);
    case PointwiseOp::abs: return abs(f);
    }
    throw std::logic_error("unknown pointwise operation");
}

/// Pointwise supremum of a nonempty finite family: g(i) = sup_{h in B} h(i).
template <typename E>
FinSuppMap<E> c00_sup(const std::vector<FinSuppMap<E>>& family) {
    if (family.empty()) throw PreconditionError("supremum of an empty family");
    std::map<Index, E> acc;
    for (const auto& h : family)
        for (const auto& [i, v] : h.entries()) acc.try_emplace(i, ElementSpace<E>::zero());
    FinSuppMap<E> out;
    for (auto& [i, best] : acc) {
        best = family.front()(i);
        for (std::size_t k = 1; k < family.size(); ++k) best = ElementSpace<E>::join(best, family[k](i));
        out.set(i, best);
    }
    return out;
}

/// S(f) and S(g) are disjoint.
template <typename E>
bool c00_disjoint(const FinSuppMap<E>& f, const FinSuppMap<E>& g) {
    return std::none_of(f.entries().begin(), f.entries().end(),
                        [&](const auto& kv) { return g.entries().contains(kv.first); });
}

/// sum_k 1_{i_k} (x) v_k, duplicates allowed.
template <typename E>
struct IndicatorSum {
    std::vector<std::pair<Index, E>> terms;

    friend bool operator==(const IndicatorSum&, const IndicatorSum&) = default;
};

/// Lattice expression over indicator sums in c00(I) (x) E.
template <typename E>
using C00Expr = Expr<IndicatorSum<E>>;

namespace detail {

template <typename E>
struct C00Algebra {
    FinSuppMap<E> leaf(const IndicatorSum<E>& s) const {
        FinSuppMap<E> out;
        for (const auto& [i, v] : s.terms) out.set(i, ElementSpace<E>::add(out(i), v));
        return out;
    }
    FinSuppMap<E> add(const FinSuppMap<E>& a, const FinSuppMap<E>& b) const { return a + b; }
    FinSuppMap<E> negate(const FinSuppMap<E>& a) const { return -a; }
    FinSuppMap<E> scale(const Rational& c, const FinSuppMap<E>& a) const { return riesz::scale(c, a); }
    FinSuppMap<E> join(const FinSuppMap<E>& a, const FinSuppMap<E>& b) const { return riesz::join(a, b); }
    FinSuppMap<E> meet(const FinSuppMap<E>& a, const FinSuppMap<E>& b) const { return riesz::meet(a, b); }
};

} // namespace detail

/// The isomorphism c00(I) (x) E -> c00(I, E): 1_{i} (x) v maps to {i -> v},
/// duplicate indices add, lattice nodes act pointwise.
template <typename E>
FinSuppMap<E> c00_from_tensor(const C00Expr<E>& e) {
    detail::C00Algebra<E> alg;
    return fold(e, alg);
}

} // namespace riesz
