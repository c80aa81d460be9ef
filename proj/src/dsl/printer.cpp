#include <sstream>

#include "riesz/dsl.hpp"

namespace riesz::dsl {

namespace {

std::string pp_text(const PiecewisePoly& f, char var = 'x') { return f.str(var); }

LeafText tensor_leaf(const TensorSum& t) {
    if (t.empty()) return {"(pp [0: 0]) ox (pp [0: 0])", Precedence::primary};
    std::string out;
    for (const auto& term : t.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + pp_text(term.left, 'x') + ") ox (" + pp_text(term.right, 'y') + ")";
    }
    return {out, t.terms().size() == 1 ? Precedence::primary : Precedence::sum};
}

std::string element_text(const Rational& r) { return r.str(); }
std::string element_text(const PiecewisePoly& f) { return "(" + pp_text(f) + ")"; }

template <typename E>
std::string c00_literal(const std::vector<std::pair<Index, E>>& terms) {
    std::string out = std::is_same_v<E, PiecewisePoly> && terms.empty() ? "c00 pp {" : "c00 {";
    for (std::size_t k = 0; k < terms.size(); ++k)
        out += (k ? ", " : " ") + terms[k].first.token() + " => " + element_text(terms[k].second);
    return out + (terms.empty() ? "}" : " }");
}

template <typename E>
LeafText indicator_leaf(const IndicatorSum<E>& s) {
    if (s.terms.size() == 1)
        return {"ind(" + s.terms[0].first.token() + ") ox " + element_text(s.terms[0].second), Precedence::primary};
    return {c00_literal(s.terms), Precedence::primary};
}

template <typename E>
std::string map_text(const FinSuppMap<E>& m) {
    std::vector<std::pair<Index, E>> terms(m.entries().begin(), m.entries().end());
    return c00_literal(terms);
}

std::string row_text(const std::vector<Rational>& xs) {
    std::string out = "[";
    for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? ", " : "") + xs[k].str();
    return out + "]";
}

std::string matrix_text(const FiniteMatrix& m) {
    std::string out = "mat [";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Rational> row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        out += (i ? ", " : "") + row_text(row);
    }
    return out + "]";
}

std::string table_text(const BimorphismTable& t) {
    std::string out = "psi " + std::to_string(t.x_size()) + " x " + std::to_string(t.y_size()) + " {";
    bool first = true;
    for (const auto& [ij, m] : t.entries()) {
        out += first ? " " : ", ";
        first = false;
        out += "(" + std::to_string(ij.first) + ", " + std::to_string(ij.second) + ") => " + matrix_text(m);
    }
    return out + (first ? "}" : " }");
}

} // namespace

LatticeExpr to_expr(const SupInfForm& s) {
    std::optional<LatticeExpr> out;
    for (const auto& row : s.rows) {
        std::optional<LatticeExpr> inf;
        for (const auto& entry : row) {
            auto leaf = LatticeExpr::leaf(entry);
            inf = inf ? LatticeExpr::meet(*inf, leaf) : leaf;
        }
        if (!inf) throw ValidationError("empty row in sup-inf form", 0);
        out = out ? LatticeExpr::join(*out, *inf) : *inf;
    }
    if (!out) throw ValidationError("sup-inf form has no rows", 0);
    return *out;
}

std::string print(const TensorSum& t) { return tensor_leaf(t).text; }
std::string print(const SupInfForm& s) { return print_expr(to_expr(s), tensor_leaf); }
std::string print(const FinSuppMap<Rational>& m) { return map_text(m); }
std::string print(const FinSuppMap<PiecewisePoly>& m) { return map_text(m); }
std::string print(const FiniteVector& v) { return "vec " + row_text(v.coords()); }
std::string print(const FiniteMatrix& m) { return matrix_text(m); }

std::string print(const Value& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, PiecewisePoly>)
                return pp_text(x);
            else if constexpr (std::is_same_v<T, LatticeExpr>)
                return print_expr(x, tensor_leaf);
            else if constexpr (std::is_same_v<T, C00Expr<Rational>>)
                return print_expr(x, indicator_leaf<Rational>);
            else if constexpr (std::is_same_v<T, C00Expr<PiecewisePoly>>)
                return print_expr(x, indicator_leaf<PiecewisePoly>);
            else if constexpr (std::is_same_v<T, BimorphismTable>)
                return table_text(x);
            else
                return print(x);
        },
        v);
}

std::string print(const Program& p) {
    std::string out;
    for (const auto& b : p.bindings()) out += "let " + b.name + " = " + print(b.value) + "\n";
    return out;
}

std::string print(const RefutationCertificate& c) {
    std::ostringstream os;
    os << "horizon " << c.horizon << "\n"
       << "line x = " << c.line << "\n"
       << "witness y = " << c.witness << "\n"
       << "candidate(" << c.line << ", " << c.witness << ") = " << c.candidate_value << "\n"
       << "h(" << c.line << ", " << c.witness << ") = " << c.h_value << "\n"
       << "candidate on line: " << c.restricted_candidate.str('y') << "\n"
       << "h on line: " << c.restricted_h.str('y') << "\n";
    if (!c.window_start.is_zero()) os << "candidate restriction exact from y = " << c.window_start << "\n";
    return os.str();
}

} // namespace riesz::dsl
