#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "riesz/rational.hpp"

namespace riesz {

enum class ExprKind { leaf, sum, negate, scale, join, meet, abs };

/// Immutable Riesz-space expression tree over leaves of type `Leaf`:
/// sums, negation, scalar multiples, joins, meets and absolute values.
/// Subtrees are shared, so copies are cheap.
template <typename Leaf>
class Expr {
public:
    static Expr leaf(Leaf value) { return Expr(Node{ExprKind::leaf, std::move(value), {}, {}}); }
    static Expr sum(Expr a, Expr b) { return binary(ExprKind::sum, std::move(a), std::move(b)); }
    static Expr join(Expr a, Expr b) { return binary(ExprKind::join, std::move(a), std::move(b)); }
    static Expr meet(Expr a, Expr b) { return binary(ExprKind::meet, std::move(a), std::move(b)); }
    static Expr negate(Expr a) { return Expr(Node{ExprKind::negate, {}, {}, {std::move(a)}}); }
    static Expr abs(Expr a) { return Expr(Node{ExprKind::abs, {}, {}, {std::move(a)}}); }
    static Expr scale(Rational factor, Expr a) {
        return Expr(Node{ExprKind::scale, {}, std::move(factor), {std::move(a)}});
    }

    ExprKind kind() const { return node_->kind; }
    const Leaf& value() const { return node_->value; }
    const Rational& factor() const { return node_->factor; }
    const Expr& child(std::size_t i) const { return node_->children.at(i); }
    std::size_t arity() const { return node_->children.size(); }

    friend bool operator==(const Expr& a, const Expr& b) {
        if (a.node_ == b.node_) return true;
        if (a.kind() != b.kind() || a.arity() != b.arity()) return false;
        switch (a.kind()) {
        case ExprKind::leaf: return a.value() == b.value();
        case ExprKind::scale:
            if (a.factor() != b.factor()) return false;
            break;
        default: break;
        }
        for (std::size_t i = 0; i < a.arity(); ++i)
            if (!(a.child(i) == b.child(i))) return false;
        return true;
    }

private:
    struct Node {
        ExprKind kind;
        Leaf value;
        Rational factor;
        std::vector<Expr> children;
    };

    explicit Expr(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

    static Expr binary(ExprKind kind, Expr a, Expr b) {
        return Expr(Node{kind, {}, {}, {std::move(a), std::move(b)}});
    }

    std::shared_ptr<const Node> node_;
};

/// Folds an expression bottom-up. `alg` supplies leaf, add, negate, scale,
/// join and meet; abs is evaluated as a v (-a).
template <typename Leaf, typename Algebra>
auto fold(const Expr<Leaf>& e, Algebra& alg) -> decltype(alg.leaf(e.value())) {
    switch (e.kind()) {
    case ExprKind::leaf: return alg.leaf(e.value());
    case ExprKind::sum: return alg.add(fold(e.child(0), alg), fold(e.child(1), alg));
    case ExprKind::negate: return alg.negate(fold(e.child(0), alg));
    case ExprKind::scale: return alg.scale(e.factor(), fold(e.child(0), alg));
    case ExprKind::join: return alg.join(fold(e.child(0), alg), fold(e.child(1), alg));
    case ExprKind::meet: return alg.meet(fold(e.child(0), alg), fold(e.child(1), alg));
    case ExprKind::abs: {
        auto v = fold(e.child(0), alg);
        auto n = alg.negate(v);
        return alg.join(std::move(v), std::move(n));
    }
    }
    throw std::logic_error("unknown expression kind");
}

/// Binding strength used by the printer and parser, loosest first.
enum class Precedence { join = 1, meet = 2, sum = 3, unary = 4, scale = 5, primary = 6 };

/// Printed leaf text together with how tightly it binds.
struct LeafText {
    std::string text;
    Precedence precedence = Precedence::primary;
};

/// Canonical text with the fewest parentheses that parse back to the same tree.
template <typename Leaf, typename LeafPrinter>
std::string print_expr(const Expr<Leaf>& e, LeafPrinter&& leaf_text) {
    struct Printer {
        LeafPrinter& leaf_text;

        static std::string wrap(std::pair<std::string, Precedence> s, Precedence need) {
            return s.second < need ? "(" + s.first + ")" : s.first;
        }

        std::pair<std::string, Precedence> go(const Expr<Leaf>& e) {
            switch (e.kind()) {
            case ExprKind::leaf: {
                LeafText t = leaf_text(e.value());
                return {t.text, t.precedence};
            }
            case ExprKind::join:
                return {wrap(go(e.child(0)), Precedence::join) + " \\/ " + wrap(go(e.child(1)), Precedence::meet),
                        Precedence::join};
            case ExprKind::meet:
                return {wrap(go(e.child(0)), Precedence::meet) + " /\\ " + wrap(go(e.child(1)), Precedence::sum),
                        Precedence::meet};
            case ExprKind::sum: {
                const auto& rhs = e.child(1);
                if (rhs.kind() == ExprKind::negate)
                    return {wrap(go(e.child(0)), Precedence::sum) + " - " + wrap(go(rhs.child(0)), Precedence::unary),
                            Precedence::sum};
                return {wrap(go(e.child(0)), Precedence::sum) + " + " + wrap(go(rhs), Precedence::unary),
                        Precedence::sum};
            }
            case ExprKind::negate: {
                // "-2 * a" reads as a negative scale, so keep a scaled operand parenthesized.
                const Precedence need =
                    e.child(0).kind() == ExprKind::scale ? Precedence::primary : Precedence::unary;
                return {"-" + wrap(go(e.child(0)), need), Precedence::unary};
            }
            case ExprKind::scale: {
                const Rational& c = e.factor();
                std::string body = wrap(go(e.child(0)), Precedence::scale);
                if (c.sign() < 0) return {"-" + c.abs().str() + " * " + body, Precedence::unary};
                return {c.str() + " * " + body, Precedence::scale};
            }
            case ExprKind::abs: return {"|" + go(e.child(0)).first + "|", Precedence::primary};
            }
            throw std::logic_error("unknown expression kind");
        }
    };
    Printer p{leaf_text};
    return p.go(e).first;
}

} // namespace riesz
