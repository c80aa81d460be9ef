// Command-line front end: evaluates, normalizes and certifies values from
// definition files. Exit status 0 ok, 1 input error, 2 internal-consistency alarm.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "riesz/check.hpp"
#include "riesz/dsl.hpp"

namespace {

using namespace riesz;
using dsl::Value;

/// Input rejected for a reason the user can fix.
class UsageError : public Error {
public:
    using Error::Error;
};

dsl::Program load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return dsl::parse(text.str());
}

Rational rat(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw UsageError("'" + text + "' is not a rational number");
    }
}

std::vector<Rational> rat_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(rat(item));
    return out;
}

std::size_t position(const Rational& r) {
    if (!r.is_integer() || r.sign() < 0) throw UsageError("index " + r.str() + " is not a natural number");
    return r.numerator().get_ui();
}

template <typename T>
const T& expect(const Value& v, const std::string& name, const char* wanted) {
    if (const T* t = std::get_if<T>(&v)) return *t;
    throw UsageError("'" + name + "' is a " + dsl::kind_name(v) + ", expected a " + wanted);
}

struct Context {
    std::string file;
    std::string name;
    std::vector<std::string> names;
    std::string at;
    std::string axis = "x";
    std::string c;
    std::string bound;
    std::string line;
    std::string lines;
    std::string corpus = RIESZ_CORPUS_DIR;
    std::uint32_t seed = check::Options{}.seed;
};

int cmd_eval(const Context& cx) {
    const dsl::Program p = load(cx.file);
    const Value& v = p.at(cx.name);
    const std::vector<Rational> pt = rat_list(cx.at);
    auto need = [&](std::size_t n) {
        if (pt.size() != n) throw UsageError("--at needs " + std::to_string(n) + " coordinate(s) for a " + dsl::kind_name(v));
    };
    if (const auto* f = std::get_if<PiecewisePoly>(&v)) {
        need(1);
        std::cout << (*f)(pt[0]) << "\n";
    } else if (const auto* e = std::get_if<LatticeExpr>(&v)) {
        need(2);
        std::cout << sif_eval(normalize(*e), pt[0], pt[1]) << "\n";
    } else if (const auto* u = std::get_if<FiniteVector>(&v)) {
        need(1);
        std::cout << (*u)[position(pt[0])] << "\n";
    } else if (const auto* m = std::get_if<FiniteMatrix>(&v)) {
        need(2);
        std::cout << (*m)(position(pt[0]), position(pt[1])) << "\n";
    } else {
        throw UsageError("cannot evaluate a " + dsl::kind_name(v) + " at a point");
    }
    return 0;
}

int cmd_normalize(const Context& cx) {
    const dsl::Program p = load(cx.file);
    const Value& v = p.at(cx.name);
    if (const auto* e = std::get_if<LatticeExpr>(&v))
        std::cout << dsl::print(normalize(*e)) << "\n";
    else if (const auto* r = std::get_if<C00Expr<Rational>>(&v))
        std::cout << dsl::print(c00_from_tensor(*r)) << "\n";
    else if (const auto* q = std::get_if<C00Expr<PiecewisePoly>>(&v))
        std::cout << dsl::print(c00_from_tensor(*q)) << "\n";
    else
        std::cout << dsl::print(v) << "\n";
    return 0;
}

int cmd_restrict(const Context& cx) {
    const dsl::Program p = load(cx.file);
    const LatticeExpr& e = expect<LatticeExpr>(p.at(cx.name), cx.name, "tensor expression");
    if (cx.axis != "x" && cx.axis != "y") throw UsageError("--axis must be x or y");
    const Axis axis = cx.axis == "x" ? Axis::x : Axis::y;
    const Rational c = rat(cx.c);
    if (c.sign() < 0) throw UsageError("--c must be nonnegative");
    std::cout << restrict_line(normalize(e), axis, c).str(axis == Axis::x ? 'y' : 'x') << "\n";
    return 0;
}

int cmd_ideal_check(const Context& cx) {
    const dsl::Program p = load(cx.file);
    const Value& v = p.at(cx.name);
    IdealMembership result;
    if (const auto* f = std::get_if<PiecewisePoly>(&v)) {
        result = ideal_member_linear(*f);
    } else {
        const SupInfForm s = normalize(expect<LatticeExpr>(v, cx.name, "piecewise polynomial or tensor expression"));
        Rational lambda;
        for (const auto& row : s.rows)
            for (const auto& entry : row) {
                const IdealMembership m = generators_in_ideal(entry);
                if (!m) {
                    std::cout << "not a member: " << m.reason << "\n";
                    return 0;
                }
                lambda = std::max(lambda, *m.lambda);
            }
        result.lambda = lambda;
    }
    if (result)
        std::cout << "member lambda=" << *result.lambda << "\n";
    else
        std::cout << "not a member: " << result.reason << "\n";
    return 0;
}

int cmd_affinity(const Context& cx) {
    const dsl::Program p = load(cx.file);
    const PiecewisePoly& f = expect<PiecewisePoly>(p.at(cx.name), cx.name, "piecewise polynomial");
    const EventualAffinity a = eventual_affinity(f, rat(cx.bound));
    std::cout << a.k << "\n";
    return 0;
}

int cmd_refute_h(const Context& cx) {
    const dsl::Program p = load(cx.file);
    const SupInfForm s = normalize(expect<LatticeExpr>(p.at(cx.name), cx.name, "tensor expression"));
    std::optional<Rational> line;
    if (!cx.line.empty()) line = rat(cx.line);
    std::cout << dsl::print(refute_h(s, line));
    return 0;
}

int cmd_dominate_h(const Context& cx) {
    const std::vector<Rational> lines = rat_list(cx.lines);
    for (const auto& c : lines)
        if (c.sign() < 0) throw UsageError("line " + c.str() + " is negative");
    bool all = true;
    for (const DominationLine& d : verify_h_dominated(lines)) {
        std::cout << "x = " << d.line << ": ";
        if (d.holds)
            std::cout << "h <= x*y holds; h = " << d.restricted_h.str('y') << "\n";
        else
            std::cout << "fails at y = " << *d.witness << "\n";
        all = all && d.holds;
    }
    return all ? 0 : 2;
}

template <typename E>
std::vector<FinSuppMap<E>> maps(const dsl::Program& p, const std::vector<std::string>& names) {
    std::vector<FinSuppMap<E>> out;
    const char* wanted = std::is_same_v<E, Rational> ? "rational c00 expression" : "piecewise c00 expression";
    for (const auto& n : names) out.push_back(c00_from_tensor(expect<C00Expr<E>>(p.at(n), n, wanted)));
    return out;
}

template <typename E>
FinSuppMap<E> c00_apply(const std::string& op, const std::vector<FinSuppMap<E>>& ms) {
    if (ms.empty()) throw UsageError("c00 " + op + " needs at least one name");
    if (op == "sup") return c00_sup(ms);
    if (op == "from-tensor") {
        if (ms.size() != 1) throw UsageError("c00 from-tensor takes one name");
        return ms.front();
    }
    FinSuppMap<E> acc = ms.front();
    for (std::size_t k = 1; k < ms.size(); ++k) {
        if (op == "join") acc = join(acc, ms[k]);
        else if (op == "meet") acc = meet(acc, ms[k]);
        else acc = acc + ms[k];
    }
    return acc;
}

int cmd_c00(const std::string& op, const Context& cx) {
    const dsl::Program p = load(cx.file);
    if (cx.names.empty()) throw UsageError("c00 " + op + " needs at least one name");
    if (std::holds_alternative<C00Expr<PiecewisePoly>>(p.at(cx.names.front())))
        std::cout << dsl::print(c00_apply(op, maps<PiecewisePoly>(p, cx.names))) << "\n";
    else
        std::cout << dsl::print(c00_apply(op, maps<Rational>(p, cx.names))) << "\n";
    return 0;
}

int cmd_fin(const std::string& op, const Context& cx) {
    const dsl::Program p = load(cx.file);
    const auto& n = cx.names;
    if (op == "outer") {
        if (n.size() != 2) throw UsageError("fin outer takes two vector names");
        std::cout << dsl::print(outer(expect<FiniteVector>(p.at(n[0]), n[0], "vector"),
                                      expect<FiniteVector>(p.at(n[1]), n[1], "vector")))
                  << "\n";
    } else if (op == "sup") {
        std::vector<FiniteMatrix> family;
        for (const auto& m : n) family.push_back(expect<FiniteMatrix>(p.at(m), m, "matrix"));
        if (family.empty()) throw UsageError("fin sup needs at least one matrix");
        std::cout << dsl::print(matrix_sup(family)) << "\n";
    } else {
        if (n.empty()) throw UsageError("fin factor takes a table name and matrix names");
        const FactoredMap t = factor_bimorphism(expect<BimorphismTable>(p.at(n[0]), n[0], "bimorphism table"));
        std::cout << "factored: target " << t.target_rows() << " x " << t.target_cols() << "\n";
        for (std::size_t k = 1; k < n.size(); ++k)
            std::cout << "T(" << n[k] << ") = " << dsl::print(t(expect<FiniteMatrix>(p.at(n[k]), n[k], "matrix"))) << "\n";
    }
    return 0;
}

int cmd_selftest(const Context& cx) {
    check::Options opt;
    opt.seed = cx.seed;
    opt.corpus = check::load_corpus(cx.corpus);
    if (opt.corpus.empty()) throw UsageError("no corpus files in " + cx.corpus);
    bool ok = true;
    for (const auto& o : check::run_all(opt)) {
        std::cout << check::format(o) << std::endl;
        ok = ok && o.passed;
    }
    return ok ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation in piecewise-polynomial Riesz spaces and their tensor products", "riesz"};
    app.require_subcommand(1);
    Context cx;
    std::function<int()> run;

    auto file_name = [&](CLI::App* sub) {
        sub->add_option("file", cx.file, "definition file")->required();
        sub->add_option("name", cx.name, "binding name")->required();
    };

    auto* eval = app.add_subcommand("eval", "evaluate a binding at a point");
    file_name(eval);
    eval->add_option("--at", cx.at, "x or x,y")->required();
    eval->callback([&] { run = [&] { return cmd_eval(cx); }; });

    auto* norm = app.add_subcommand("normalize", "print the sup-inf normal form");
    file_name(norm);
    norm->callback([&] { run = [&] { return cmd_normalize(cx); }; });

    auto* restrict = app.add_subcommand("restrict", "restrict a tensor expression to a line");
    file_name(restrict);
    restrict->add_option("--axis", cx.axis, "coordinate held fixed (x or y)")->default_val("x");
    restrict->add_option("--c", cx.c, "value of the fixed coordinate")->required();
    restrict->callback([&] { run = [&] { return cmd_restrict(cx); }; });

    auto* ideal = app.add_subcommand("ideal-check", "test membership in the ideal generated by x (or x*y)");
    file_name(ideal);
    ideal->callback([&] { run = [&] { return cmd_ideal_check(cx); }; });

    auto* aff = app.add_subcommand("affinity", "horizon beyond which f is affine, given |f| <= C*x");
    file_name(aff);
    aff->add_option("--bound", cx.bound, "the constant C")->required();
    aff->callback([&] { run = [&] { return cmd_affinity(cx); }; });

    auto* refute = app.add_subcommand("refute-h", "certify that a candidate differs from h");
    file_name(refute);
    refute->add_option("--line", cx.line, "abscissa of the vertical line (default horizon + 2)");
    refute->callback([&] { run = [&] { return cmd_refute_h(cx); }; });

    auto* dominate = app.add_subcommand("dominate-h", "check h <= x*y along vertical lines");
    dominate->add_option("--lines", cx.lines, "comma-separated abscissae")->required();
    dominate->callback([&] { run = [&] { return cmd_dominate_h(cx); }; });

    auto* c00 = app.add_subcommand("c00", "operations on finitely supported maps");
    c00->require_subcommand(1);
    for (const char* op : {"sup", "join", "meet", "add", "from-tensor"}) {
        auto* sub = c00->add_subcommand(op, std::string("c00 ") + op);
        sub->add_option("file", cx.file, "definition file")->required();
        sub->add_option("names", cx.names, "binding names")->required();
        sub->callback([&, op] { run = [&, op] { return cmd_c00(op, cx); }; });
    }

    auto* fin = app.add_subcommand("fin", "finite-dimensional C(X) (x) C(Y)");
    fin->require_subcommand(1);
    for (const char* op : {"outer", "sup", "factor"}) {
        auto* sub = fin->add_subcommand(op, std::string("fin ") + op);
        sub->add_option("file", cx.file, "definition file")->required();
        sub->add_option("names", cx.names, "binding names")->required();
        sub->callback([&, op] { run = [&, op] { return cmd_fin(op, cx); }; });
    }

    auto* self = app.add_subcommand("selftest", "run the invariant suite");
    self->add_option("--corpus", cx.corpus, "directory of .rz files for the parser checks");
    self->add_option("--seed", cx.seed, "random seed");
    self->callback([&] { run = [&] { return cmd_selftest(cx); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    try {
        return run();
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
