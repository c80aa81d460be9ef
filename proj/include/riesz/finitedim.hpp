#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riesz/rational.hpp"

namespace riesz {

/// Element of C(X) for a finite X = {0, ..., n-1}, ordered pointwise.
class FiniteVector {
public:
    FiniteVector() = default;
    explicit FiniteVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    static FiniteVector zero(std::size_t n) { return FiniteVector(std::vector<Rational>(n)); }
    /// Indicator 1_{i} of a singleton.
    static FiniteVector indicator(std::size_t n, std::size_t i);

    std::size_t size() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_.at(i); }
    const std::vector<Rational>& coords() const { return coords_; }

    friend bool operator==(const FiniteVector&, const FiniteVector&) = default;

private:
    std::vector<Rational> coords_;
};

/// Element of C(X x Y) = C(X) (x) C(Y) for finite X, Y: a |X| x |Y| grid.
class FiniteMatrix {
public:
    FiniteMatrix() = default;
    FiniteMatrix(std::size_t rows, std::size_t cols);
    /// Throws ValidationError for ragged input.
    explicit FiniteMatrix(std::vector<std::vector<Rational>> grid);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return cells_.at(i * cols_ + j); }
    Rational& operator()(std::size_t i, std::size_t j) { return cells_.at(i * cols_ + j); }
    FiniteVector column(std::size_t j) const;
    bool same_shape(const FiniteMatrix& other) const { return rows_ == other.rows_ && cols_ == other.cols_; }

    friend bool operator==(const FiniteMatrix&, const FiniteMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> cells_;
};

FiniteMatrix operator+(const FiniteMatrix& a, const FiniteMatrix& b);
FiniteMatrix scale(const Rational& c, const FiniteMatrix& a);
FiniteMatrix join(const FiniteMatrix& a, const FiniteMatrix& b);
FiniteMatrix meet(const FiniteMatrix& a, const FiniteMatrix& b);
FiniteMatrix abs(const FiniteMatrix& a);
FiniteVector abs(const FiniteVector& v);

/// Elementary tensor: (u (x) v)(i, j) = u_i * v_j.
FiniteMatrix outer(const FiniteVector& u, const FiniteVector& v);

/// sum_j g_j (x) 1_{j}, where g_j(x) = sup_{h in B} h(x, j) is the column-wise
/// supremum of the family.
FiniteMatrix column_sup_reconstruction(const std::vector<FiniteMatrix>& family);

/// Pointwise supremum of a nonempty family of same-shape matrices. Also
/// assembles the column-wise reconstruction and throws ConsistencyError if the
/// two disagree; ValidationError on shape mismatch.
FiniteMatrix matrix_sup(const std::vector<FiniteMatrix>& family);

/// A map psi on basis pairs (i, j) of X x Y into a target matrix space.
class BimorphismTable {
public:
    BimorphismTable(std::size_t x_size, std::size_t y_size) : x_size_(x_size), y_size_(y_size) {}

    void set(std::size_t i, std::size_t j, FiniteMatrix value);
    const FiniteMatrix* find(std::size_t i, std::size_t j) const;

    std::size_t x_size() const { return x_size_; }
    std::size_t y_size() const { return y_size_; }
    const std::map<std::pair<std::size_t, std::size_t>, FiniteMatrix>& entries() const { return entries_; }

    friend bool operator==(const BimorphismTable&, const BimorphismTable&) = default;

private:
    std::size_t x_size_;
    std::size_t y_size_;
    std::map<std::pair<std::size_t, std::size_t>, FiniteMatrix> entries_;
};

/// T(M) = sum_{i,j} M(i, j) * psi(i, j), the linear map factoring psi through
/// the tensor product.
class FactoredMap {
public:
    explicit FactoredMap(BimorphismTable table);

    FiniteMatrix operator()(const FiniteMatrix& m) const;
    std::size_t target_rows() const { return target_rows_; }
    std::size_t target_cols() const { return target_cols_; }

private:
    BimorphismTable table_;
    std::size_t target_rows_ = 0;
    std::size_t target_cols_ = 0;
};

/// Builds T from psi. Throws ValidationError naming the first missing basis
/// pair or a target of the wrong shape, and ConsistencyError unless
/// T(outer(e_i, f_j)) = psi(i, j) for every basis pair.
FactoredMap factor_bimorphism(const BimorphismTable& psi);

} // namespace riesz
