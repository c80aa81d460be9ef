#include "riesz/finitedim.hpp"

#include <algorithm>
#include <tuple>

#include "riesz/errors.hpp"

namespace riesz {

FiniteVector FiniteVector::indicator(std::size_t n, std::size_t i) {
    std::vector<Rational> coords(n);
    coords.at(i) = Rational(1);
    return FiniteVector(std::move(coords));
}

FiniteVector abs(const FiniteVector& v) {
    std::vector<Rational> coords;
    for (const auto& c : v.coords()) coords.push_back(c.abs());
    return FiniteVector(std::move(coords));
}

FiniteMatrix::FiniteMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}

FiniteMatrix::FiniteMatrix(std::vector<std::vector<Rational>> grid) {
    rows_ = grid.size();
    cols_ = grid.empty() ? 0 : grid.front().size();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i].size() != cols_)
            throw ValidationError("matrix row " + std::to_string(i) + " has " + std::to_string(grid[i].size()) +
                                      " entries, expected " + std::to_string(cols_),
                                  i);
        for (auto& c : grid[i]) cells_.push_back(std::move(c));
    }
}

FiniteVector FiniteMatrix::column(std::size_t j) const {
    std::vector<Rational> coords;
    for (std::size_t i = 0; i < rows_; ++i) coords.push_back((*this)(i, j));
    return FiniteVector(std::move(coords));
}

namespace {

void require_shape(const FiniteMatrix& a, const FiniteMatrix& b) {
    if (!a.same_shape(b))
        throw ValidationError("dimension mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                  " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()),
                              0);
}

template <typename Fn>
FiniteMatrix zip(const FiniteMatrix& a, const FiniteMatrix& b, Fn&& fn) {
    require_shape(a, b);
    FiniteMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = fn(a(i, j), b(i, j));
    return out;
}

} // namespace

FiniteMatrix operator+(const FiniteMatrix& a, const FiniteMatrix& b) {
    return zip(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

FiniteMatrix scale(const Rational& c, const FiniteMatrix& a) {
    return zip(a, a, [&](const Rational& x, const Rational&) { return c * x; });
}

FiniteMatrix join(const FiniteMatrix& a, const FiniteMatrix& b) {
    return zip(a, b, [](const Rational& x, const Rational& y) { return std::max(x, y); });
}

FiniteMatrix meet(const FiniteMatrix& a, const FiniteMatrix& b) {
    return zip(a, b, [](const Rational& x, const Rational& y) { return std::min(x, y); });
}

FiniteMatrix abs(const FiniteMatrix& a) {
    return zip(a, a, [](const Rational& x, const Rational&) { return x.abs(); });
}

FiniteMatrix outer(const FiniteVector& u, const FiniteVector& v) {
    FiniteMatrix out(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = u[i] * v[j];
    return out;
}

FiniteMatrix column_sup_reconstruction(const std::vector<FiniteMatrix>& family) {
    if (family.empty()) throw PreconditionError("supremum of an empty family");
    const std::size_t rows = family.front().rows();
    const std::size_t cols = family.front().cols();
    FiniteMatrix out(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<Rational> g = family.front().column(j).coords();
        for (const auto& h : family) {
            require_shape(family.front(), h);
            for (std::size_t x = 0; x < rows; ++x) g[x] = std::max(g[x], h(x, j));
        }
        out = out + outer(FiniteVector(std::move(g)), FiniteVector::indicator(cols, j));
    }
    return out;
}

FiniteMatrix matrix_sup(const std::vector<FiniteMatrix>& family) {
    if (family.empty()) throw PreconditionError("supremum of an empty family");
    FiniteMatrix sup = family.front();
    for (std::size_t k = 1; k < family.size(); ++k) sup = join(sup, family[k]);
    if (!(column_sup_reconstruction(family) == sup))
        throw ConsistencyError("pointwise supremum differs from the column-wise reconstruction");
    return sup;
}

void BimorphismTable::set(std::size_t i, std::size_t j, FiniteMatrix value) {
    if (i >= x_size_ || j >= y_size_)
        throw ValidationError("basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range", i);
    entries_.insert_or_assign({i, j}, std::move(value));
}

const FiniteMatrix* BimorphismTable::find(std::size_t i, std::size_t j) const {
    const auto it = entries_.find({i, j});
    return it == entries_.end() ? nullptr : &it->second;
}

FactoredMap::FactoredMap(BimorphismTable table) : table_(std::move(table)) {
    std::optional<std::pair<std::size_t, std::size_t>> shape;
    for (std::size_t i = 0; i < table_.x_size(); ++i)
        for (std::size_t j = 0; j < table_.y_size(); ++j) {
            const FiniteMatrix* m = table_.find(i, j);
            const std::string pair = "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
            if (!m) throw ValidationError("missing table entry " + pair, i * table_.y_size() + j);
            if (!shape) shape.emplace(m->rows(), m->cols());
            if (m->rows() != shape->first || m->cols() != shape->second)
                throw ValidationError("table entry " + pair + " has the wrong shape", i * table_.y_size() + j);
        }
    if (shape) std::tie(target_rows_, target_cols_) = *shape;
}

FiniteMatrix FactoredMap::operator()(const FiniteMatrix& m) const {
    if (m.rows() != table_.x_size() || m.cols() != table_.y_size())
        throw ValidationError("argument is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                  ", expected " + std::to_string(table_.x_size()) + "x" +
                                  std::to_string(table_.y_size()),
                              0);
    FiniteMatrix out(target_rows_, target_cols_);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out = out + scale(m(i, j), *table_.find(i, j));
    return out;
}

FactoredMap factor_bimorphism(const BimorphismTable& psi) {
    FactoredMap t(psi);
    for (std::size_t i = 0; i < psi.x_size(); ++i)
        for (std::size_t j = 0; j < psi.y_size(); ++j) {
            const FiniteMatrix image = t(outer(FiniteVector::indicator(psi.x_size(), i),
                                               FiniteVector::indicator(psi.y_size(), j)));
            if (!(image == *psi.find(i, j)))
                throw ConsistencyError("factored map disagrees with psi on (" + std::to_string(i) + ", " +
                                       std::to_string(j) + ")");
        }
    return t;
}

} // namespace riesz
