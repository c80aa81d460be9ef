#include <map>
#include <optional>
#include <set>
#include <utility>

#include "lexer.hpp"
#include "riesz/dsl.hpp"

namespace riesz::dsl {

namespace {

using PPExpr = Expr<PiecewisePoly>;
using RatC00 = C00Expr<Rational>;
using PPC00 = C00Expr<PiecewisePoly>;

/// An expression while it is being parsed; the alternative is fixed by its leaves.
using Typed = std::variant<PPExpr, LatticeExpr, RatC00, PPC00>;

std::string typed_name(const Typed& t) {
    switch (t.index()) {
    case 0: return "piecewise polynomial";
    case 1: return "tensor expression";
    case 2: return "rational c00 expression";
    default: return "piecewise c00 expression";
    }
}

const std::set<std::string, std::less<>> kKeywords = {"let", "pp", "ox", "ind", "c00", "vec", "mat", "psi", "h"};

struct PPAlgebra {
    PiecewisePoly leaf(const PiecewisePoly& f) const { return f; }
    PiecewisePoly add(const PiecewisePoly& a, const PiecewisePoly& b) const { return a + b; }
    PiecewisePoly negate(const PiecewisePoly& a) const { return -a; }
    PiecewisePoly scale(const Rational& c, const PiecewisePoly& a) const { return riesz::scale(c, a); }
    PiecewisePoly join(const PiecewisePoly& a, const PiecewisePoly& b) const { return riesz::join(a, b); }
    PiecewisePoly meet(const PiecewisePoly& a, const PiecewisePoly& b) const { return riesz::meet(a, b); }
};

class Parser {
public:
    Parser(std::vector<Token> tokens, const Program* env) : toks_(std::move(tokens)), env_(env) {}

    Program program() {
        Program prog;
        env_ = &prog;
        while (true) {
            skip_newlines();
            if (peek().kind == TokenKind::end) break;
            const Token& let = peek();
            expect_ident("let");
            const Token name = next();
            if (name.kind != TokenKind::ident) fail("expected a binding name", name);
            if (kKeywords.contains(name.text)) fail("'" + name.text + "' is reserved", name);
            if (prog.find(name.text)) fail("'" + name.text + "' is already bound", name);
            expect_symbol("=");
            binding_name_ = name.text;
            Value v = value();
            end_of_line();
            prog.add({name.text, std::move(v), let.line});
        }
        return prog;
    }

    Value single_value() {
        skip_newlines();
        Value v = value();
        skip_newlines();
        if (peek().kind != TokenKind::end) fail("unexpected '" + peek().text + "'", peek());
        return v;
    }

private:
    // ---- token plumbing ----
    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    Token next() {
        Token t = peek();
        if (pos_ < toks_.size() - 1) ++pos_;
        return t;
    }
    [[noreturn]] void fail(const std::string& msg, const Token& at) const {
        throw ParseError(msg, at.line, at.column);
    }
    void expect_symbol(std::string_view s) {
        if (!peek().is_symbol(s)) fail("expected '" + std::string(s) + "' but found " + describe(peek()), peek());
        next();
    }
    void expect_ident(std::string_view s) {
        if (!peek().is_ident(s)) fail("expected '" + std::string(s) + "' but found " + describe(peek()), peek());
        next();
    }
    static std::string describe(const Token& t) {
        switch (t.kind) {
        case TokenKind::newline: return "end of line";
        case TokenKind::end: return "end of input";
        default: return "'" + t.text + "'";
        }
    }
    void skip_newlines() {
        while (peek().kind == TokenKind::newline) next();
    }
    void end_of_line() {
        if (peek().kind != TokenKind::newline && peek().kind != TokenKind::end)
            fail("unexpected " + describe(peek()) + " after binding", peek());
    }

    /// Runs a semantic constructor, re-reporting failures against the binding.
    template <typename Fn>
    auto checked(const Token& at, Fn&& fn) -> decltype(fn()) {
        try {
            return fn();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            const std::string where = binding_name_.empty() ? "" : "binding '" + binding_name_ + "': ";
            throw ParseError(where + e.what(), at.line, at.column);
        }
    }

    // ---- literals ----
    std::size_t integer() {
        const Token t = next();
        if (t.kind != TokenKind::integer) fail("expected an integer but found " + describe(t), t);
        return static_cast<std::size_t>(std::stoull(t.text));
    }

    bool rat_ahead(std::size_t offset) const { return peek(offset).kind == TokenKind::integer; }

    /// INT ("/" POSINT)?
    Rational unsigned_rat() {
        const Token t = next();
        if (t.kind != TokenKind::integer) fail("expected a number but found " + describe(t), t);
        std::string text = t.text;
        if (peek().is_symbol("/") && peek(1).kind == TokenKind::integer) {
            next();
            text += "/" + next().text;
        }
        return checked(t, [&] {
            try {
                return Rational::parse(text);
            } catch (const std::invalid_argument& e) {
                throw Error(e.what());
            }
        });
    }

    Rational signed_rat() {
        if (peek().is_symbol("-")) {
            next();
            return -unsigned_rat();
        }
        return unsigned_rat();
    }

    /// Polynomial inside a pp bracket. `var` is 'x', 'y' or 0 for either; the
    /// letter seen is written back so a term stays in one variable.
    Polynomial poly(char& var) {
        Polynomial out;
        bool first = true;
        while (true) {
            int sign = 1;
            if (peek().is_symbol("-")) {
                next();
                sign = -1;
            } else if (!first) {
                if (!peek().is_symbol("+")) break;
                next();
            }
            out += scale(Rational(sign), term(var));
            first = false;
            if (!peek().is_symbol("+") && !peek().is_symbol("-")) break;
        }
        return out;
    }

    Polynomial term(char& var) {
        Rational coeff(1);
        bool have_coeff = false;
        if (peek().kind == TokenKind::integer) {
            coeff = unsigned_rat();
            have_coeff = true;
            if (!peek().is_symbol("*")) return Polynomial::constant(coeff);
            next();
        }
        const Token v = next();
        if (v.kind != TokenKind::ident || v.text.size() != 1 || (v.text[0] != 'x' && v.text[0] != 'y'))
            fail(std::string(have_coeff ? "expected a variable" : "expected a term") + " but found " + describe(v), v);
        if (var == 0) var = v.text[0];
        if (v.text[0] != var) fail(std::string("expected variable '") + var + "' but found '" + v.text + "'", v);
        unsigned degree = 1;
        if (peek().is_symbol("^")) {
            next();
            degree = static_cast<unsigned>(integer());
        }
        return Polynomial::monomial(coeff, degree);
    }

    /// "pp" ("[" rat ":" poly "]")+
    PiecewisePoly ppterm(char var) {
        const Token head = peek();
        expect_ident("pp");
        std::vector<Rational> bps;
        std::vector<Polynomial> pieces;
        if (!peek().is_symbol("[")) fail("expected '[' after pp", peek());
        while (peek().is_symbol("[")) {
            next();
            bps.push_back(signed_rat());
            expect_symbol(":");
            pieces.push_back(poly(var));
            expect_symbol("]");
        }
        last_var_ = var;
        return checked(head, [&] { return make_pp(std::move(bps), std::move(pieces)); });
    }

    std::variant<Rational, PiecewisePoly> element() {
        if (peek().is_symbol("(")) {
            next();
            PiecewisePoly f = ppterm(0);
            expect_symbol(")");
            return f;
        }
        if (peek().is_ident("pp")) return ppterm(0);
        return signed_rat();
    }

    Index index_token() {
        const Token t = next();
        if (t.kind != TokenKind::ident && t.kind != TokenKind::integer) fail("expected an index but found " + describe(t), t);
        return Index(t.text);
    }

    Typed indicator_sum(std::vector<std::pair<Index, std::variant<Rational, PiecewisePoly>>> terms, bool pp_hint,
                        const Token& at) {
        bool any_pp = pp_hint, any_rat = false;
        for (const auto& [i, v] : terms) (v.index() == 0 ? any_rat : any_pp) = true;
        if (any_pp && any_rat) fail("c00 literal mixes rational and piecewise values", at);
        if (any_pp) {
            IndicatorSum<PiecewisePoly> s;
            for (auto& [i, v] : terms) s.terms.emplace_back(i, std::get<PiecewisePoly>(std::move(v)));
            return PPC00::leaf(std::move(s));
        }
        IndicatorSum<Rational> s;
        for (auto& [i, v] : terms) s.terms.emplace_back(i, std::get<Rational>(std::move(v)));
        return RatC00::leaf(std::move(s));
    }

    // ---- values ----
    Value value() {
        const Token& t = peek();
        if (t.is_ident("vec")) return vec();
        if (t.is_ident("mat")) return mat();
        if (t.is_ident("psi")) return psi();
        const Token start = t;
        Typed e = join();
        return std::visit(
            [&](auto&& x) -> Value {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, PPExpr>) {
                    PPAlgebra alg;
                    return checked(start, [&] { return fold(x, alg); });
                } else {
                    return x;
                }
            },
            std::move(e));
    }

    std::vector<Rational> rat_list() {
        expect_symbol("[");
        std::vector<Rational> out;
        if (!peek().is_symbol("]")) {
            out.push_back(signed_rat());
            while (peek().is_symbol(",")) {
                next();
                out.push_back(signed_rat());
            }
        }
        expect_symbol("]");
        return out;
    }

    FiniteVector vec() {
        expect_ident("vec");
        return FiniteVector(rat_list());
    }

    FiniteMatrix mat() {
        const Token head = peek();
        expect_ident("mat");
        expect_symbol("[");
        std::vector<std::vector<Rational>> grid;
        if (!peek().is_symbol("]")) {
            grid.push_back(rat_list());
            while (peek().is_symbol(",")) {
                next();
                grid.push_back(rat_list());
            }
        }
        expect_symbol("]");
        return checked(head, [&] { return FiniteMatrix(std::move(grid)); });
    }

    BimorphismTable psi() {
        const Token head = peek();
        expect_ident("psi");
        const std::size_t rows = integer();
        expect_ident("x");
        const std::size_t cols = integer();
        BimorphismTable table(rows, cols);
        expect_symbol("{");
        bool first = true;
        while (!peek().is_symbol("}")) {
            if (!first) expect_symbol(",");
            first = false;
            const Token at = peek();
            expect_symbol("(");
            const std::size_t i = integer();
            expect_symbol(",");
            const std::size_t j = integer();
            expect_symbol(")");
            expect_symbol("=>");
            FiniteMatrix m = mat();
            checked(at, [&] { table.set(i, j, std::move(m)); });
        }
        expect_symbol("}");
        (void)head;
        return table;
    }

    // ---- expressions ----
    template <typename Make>
    Typed combine(const Typed& a, const Typed& b, const Token& op, Make&& make) {
        if (a.index() != b.index()) fail("cannot combine " + typed_name(a) + " with " + typed_name(b), op);
        return std::visit(
            [&](const auto& x) -> Typed {
                using T = std::decay_t<decltype(x)>;
                return make(x, std::get<T>(b));
            },
            a);
    }

    template <typename Make>
    static Typed map(const Typed& a, Make&& make) {
        return std::visit([&](const auto& x) -> Typed { return make(x); }, a);
    }

    Typed join() {
        Typed lhs = meet();
        while (peek().is_symbol("\\/")) {
            const Token op = next();
            Typed rhs = meet();
            lhs = combine(lhs, rhs, op, [](const auto& a, const auto& b) { return std::decay_t<decltype(a)>::join(a, b); });
        }
        return lhs;
    }

    Typed meet() {
        Typed lhs = additive();
        while (peek().is_symbol("/\\")) {
            const Token op = next();
            Typed rhs = additive();
            lhs = combine(lhs, rhs, op, [](const auto& a, const auto& b) { return std::decay_t<decltype(a)>::meet(a, b); });
        }
        return lhs;
    }

    Typed additive() {
        Typed lhs = unary();
        while (peek().is_symbol("+") || peek().is_symbol("-")) {
            const Token op = next();
            Typed rhs = unary();
            const bool minus = op.text == "-";
            lhs = combine(lhs, rhs, op, [minus](const auto& a, const auto& b) {
                using E = std::decay_t<decltype(a)>;
                return E::sum(a, minus ? E::negate(b) : b);
            });
        }
        return lhs;
    }

    Typed unary() {
        if (!peek().is_symbol("-")) return scaled();
        // "-" rat "*" is a negative scale; any other "-" negates.
        const bool fraction = peek(2).is_symbol("/") && peek(3).kind == TokenKind::integer;
        if (rat_ahead(1) && peek(fraction ? 4 : 2).is_symbol("*")) {
            next();
            const Rational c = -unsigned_rat();
            expect_symbol("*");
            return map(scaled(), [&](const auto& a) { return std::decay_t<decltype(a)>::scale(c, a); });
        }
        next();
        return map(unary(), [](const auto& a) { return std::decay_t<decltype(a)>::negate(a); });
    }

    Typed scaled() {
        if (peek().kind != TokenKind::integer) return primary();
        const Rational c = unsigned_rat();
        expect_symbol("*");
        return map(scaled(), [&](const auto& a) { return std::decay_t<decltype(a)>::scale(c, a); });
    }

    Typed primary() {
        const Token t = peek();
        if (t.is_symbol("|")) {
            next();
            Typed inner = join();
            expect_symbol("|");
            return map(inner, [](const auto& a) { return std::decay_t<decltype(a)>::abs(a); });
        }
        if (t.is_symbol("(")) {
            next();
            if (peek().is_ident("pp")) {
                PiecewisePoly left = ppterm(0);
                expect_symbol(")");
                if (!peek().is_ident("ox")) return PPExpr::leaf(std::move(left));
                if (last_var_ == 'y') fail("left tensor factor must be written in x", t);
                next();
                expect_symbol("(");
                PiecewisePoly right = ppterm('y');
                expect_symbol(")");
                return LatticeExpr::leaf(TensorSum::elementary(std::move(left), std::move(right)));
            }
            Typed inner = join();
            expect_symbol(")");
            return inner;
        }
        if (t.is_ident("pp")) return PPExpr::leaf(ppterm(0));
        if (t.is_ident("ind")) {
            next();
            expect_symbol("(");
            Index i = index_token();
            expect_symbol(")");
            expect_ident("ox");
            std::vector<std::pair<Index, std::variant<Rational, PiecewisePoly>>> terms;
            terms.emplace_back(std::move(i), element());
            return indicator_sum(std::move(terms), false, t);
        }
        if (t.is_ident("c00")) {
            next();
            bool pp_hint = false;
            if (peek().is_ident("pp")) {
                next();
                pp_hint = true;
            }
            expect_symbol("{");
            std::vector<std::pair<Index, std::variant<Rational, PiecewisePoly>>> terms;
            while (!peek().is_symbol("}")) {
                if (!terms.empty()) expect_symbol(",");
                Index i = index_token();
                expect_symbol("=>");
                terms.emplace_back(std::move(i), element());
            }
            expect_symbol("}");
            return indicator_sum(std::move(terms), pp_hint, t);
        }
        if (t.kind == TokenKind::ident) {
            next();
            if (t.text == "h") return counterexample_h();
            if (kKeywords.contains(t.text)) fail("unexpected '" + t.text + "'", t);
            const Value* v = env_ ? env_->find(t.text) : nullptr;
            if (!v) fail("unknown name '" + t.text + "'", t);
            return std::visit(
                [&](const auto& x) -> Typed {
                    using T = std::decay_t<decltype(x)>;
                    if constexpr (std::is_same_v<T, PiecewisePoly>)
                        return PPExpr::leaf(x);
                    else if constexpr (std::is_same_v<T, LatticeExpr> || std::is_same_v<T, RatC00> ||
                                       std::is_same_v<T, PPC00>)
                        return x;
                    else
                        fail("'" + t.text + "' is a " + kind_name(*v) + " and cannot appear in an expression", t);
                },
                *v);
        }
        fail("expected an expression but found " + describe(t), t);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const Program* env_;
    std::string binding_name_;
    char last_var_ = 0;
};

} // namespace

const Value* Program::find(std::string_view name) const {
    for (const auto& b : bindings_)
        if (b.name == name) return &b.value;
    return nullptr;
}

const Value& Program::at(std::string_view name) const {
    if (const Value* v = find(name)) return *v;
    throw Error("unknown name '" + std::string(name) + "'");
}

void Program::add(Binding b) { bindings_.push_back(std::move(b)); }

Program parse(std::string_view text) { return Parser(tokenize(text), nullptr).program(); }

Value parse_value(std::string_view text) { return Parser(tokenize(text), nullptr).single_value(); }

std::string kind_name(const Value& v) {
    switch (v.index()) {
    case 0: return "piecewise polynomial";
    case 1: return "tensor expression";
    case 2: return "rational c00 expression";
    case 3: return "piecewise c00 expression";
    case 4: return "vector";
    case 5: return "matrix";
    default: return "bimorphism table";
    }
}

} // namespace riesz::dsl
