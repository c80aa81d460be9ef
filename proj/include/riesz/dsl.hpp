#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "riesz/c00.hpp"
#include "riesz/errors.hpp"
#include "riesz/finitedim.hpp"
#include "riesz/piecewise.hpp"
#include "riesz/refute.hpp"
#include "riesz/tensor.hpp"

namespace riesz::dsl {

/// Syntax error at a 1-based line and column.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Anything a binding can hold. Piecewise-polynomial expressions are evaluated
/// when bound; tensor and c00 expressions keep their tree.
using Value = std::variant<PiecewisePoly, LatticeExpr, C00Expr<Rational>, C00Expr<PiecewisePoly>, FiniteVector,
                           FiniteMatrix, BimorphismTable>;

/// Human-readable name of the alternative held by `v`.
std::string kind_name(const Value& v);

struct Binding {
    std::string name;
    Value value;
    std::size_t line = 0;
};

/// Ordered bindings; later bindings may refer to earlier ones by name.
class Program {
public:
    const std::vector<Binding>& bindings() const { return bindings_; }
    const Value* find(std::string_view name) const;
    /// Throws Error for an unknown name.
    const Value& at(std::string_view name) const;

    void add(Binding b);

private:
    std::vector<Binding> bindings_;
};

/// Parses a definition file. Syntax errors throw ParseError; validation
/// failures (discontinuities, irrational crossings, ...) are rethrown as
/// Error naming the binding.
Program parse(std::string_view text);

/// Parses a single value (the right-hand side of a binding). `h` is the only
/// name in scope.
Value parse_value(std::string_view text);

std::string print(const Value& v);
std::string print(const Program& p);
std::string print(const TensorSum& t);
std::string print(const SupInfForm& s);
std::string print(const FinSuppMap<Rational>& m);
std::string print(const FinSuppMap<PiecewisePoly>& m);
std::string print(const FiniteVector& v);
std::string print(const FiniteMatrix& m);
std::string print(const RefutationCertificate& c);

/// Builds the expression tree sup over rows of inf over entries.
LatticeExpr to_expr(const SupInfForm& s);

} // namespace riesz::dsl
