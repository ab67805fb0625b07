#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "coralg/field.hpp"

namespace coralg {

using Vec = std::vector<Scalar>;

/// Dense exact matrix over a Field. Entries are kept in canonical form.
class Matrix {
  public:
    Matrix(Field f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

    static Matrix identity(Field f, std::size_t n);
    static Matrix from_rows(Field f, const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const Scalar& v) { data_[r * cols_ + c] = field_.norm(v); }

    Vec row(std::size_t r) const;
    void set_row(std::size_t r, const Vec& v);

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const;
    bool is_zero() const;

  private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/// v·M for a row vector v of length M.rows().
Vec row_apply(const Vec& v, const Matrix& m);

Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, const Scalar& c, const Vec& v);
bool vec_is_zero(const Field& f, const Vec& v);
Vec unit_vec(std::size_t n, std::size_t i);

/// Kronecker product; with row vectors, (u⊗v)·kron(F,G) = (u·F)⊗(v·G)
/// under the index convention (p,q) ↦ p·cols(G)+q.
Matrix kron(const Matrix& a, const Matrix& b);
Vec kron_vec(const Field& f, const Vec& u, const Vec& v);
/// a · kron(f, g) computed rowwise by reshaping; never materializes the
/// Kronecker product.
Matrix kron_mult(const Matrix& a, const Matrix& f, const Matrix& g);

/// Unique reduced row-echelon form and rank.
std::pair<Matrix, std::size_t> rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Some x with m·x = b (column convention), or nullopt if inconsistent.
/// Free variables are set to 0 in RREF order.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Basis rows of {v : m·v = 0} ⊆ k^cols (column-vector kernel), in RREF.
Matrix kernel_basis(const Matrix& m);

/// Two-sided inverse; throws if the matrix is not square invertible.
Matrix inverse(const Matrix& m);

/// Incremental row-space builder: rows stay reduced, inserts keep RREF shape.
class RowSpace {
  public:
    RowSpace(Field f, std::size_t ambient);
    /// Returns true if the row enlarged the span.
    bool insert(const Vec& v);
    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }
    bool contains(const Vec& v) const;
    /// v minus its projection onto the span (pivot elimination).
    Vec reduce(Vec v) const;
    /// Rows in canonical RREF order.
    Matrix to_matrix() const;

  private:
    Field field_;
    std::size_t ambient_;
    std::vector<Vec> rows_;          // reduced, pivot-normalized
    std::vector<std::size_t> pivots_; // sorted pivot columns, parallel after to_matrix
};

} // namespace coralg
