#include "coralg/matrix.hpp"

#include <algorithm>

namespace coralg {

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, f.one());
    return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

Vec Matrix::row(std::size_t r) const {
    return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void Matrix::set_row(std::size_t r, const Vec& v) {
    if (v.size() != cols_) throw error("set_row: length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) data_[r * cols_ + c] = field_.norm(v[c]);
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || field_ != o.field_) throw error("matrix product: shape/field mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.data_[i * o.cols_ + j] += a * o.at(k, j);
        }
    for (auto& x : r.data_) x = field_.norm(x);
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix sum: shape mismatch");
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.norm(data_[i] + o.data_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix difference: shape mismatch");
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.norm(data_[i] - o.data_[i]);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x == 0; });
}

Vec row_apply(const Vec& v, const Matrix& m) {
    if (v.size() != m.rows()) throw error("apply: length mismatch");
    Vec r(m.cols(), Scalar(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m.at(i, j);
    }
    for (auto& x : r) x = m.field().norm(x);
    return r;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw error("vec_add: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.norm(a[i] + b[i]);
    return r;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw error("vec_sub: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.norm(a[i] - b[i]);
    return r;
}

Vec vec_scale(const Field& f, const Scalar& c, const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = f.norm(c * v[i]);
    return r;
}

bool vec_is_zero(const Field&, const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n, Scalar(0));
    v[i] = 1;
    return v;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r.set(i * b.rows() + k, j * b.cols() + l, a.at(i, j) * b.at(k, l));
        }
    return r;
}

Vec kron_vec(const Field& f, const Vec& u, const Vec& v) {
    Vec r(u.size() * v.size(), Scalar(0));
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i * v.size() + j] = f.norm(u[i] * v[j]);
    return r;
}

Matrix kron_mult(const Matrix& a, const Matrix& f, const Matrix& g) {
    std::size_t fr = f.rows(), fc = f.cols(), gr = g.rows(), gc = g.cols();
    if (a.cols() != fr * gr) throw error("kron_mult: shape mismatch");
    const Field& fld = a.field();
    Matrix out(fld, a.rows(), fc * gc);
    std::vector<Scalar> t(fr * gc); // T = V·g for the reshaped row V (fr × gr)
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::fill(t.begin(), t.end(), Scalar(0));
        for (std::size_t p = 0; p < fr; ++p)
            for (std::size_t q = 0; q < gr; ++q) {
                const Scalar& v = a.at(r, p * gr + q);
                if (v == 0) continue;
                for (std::size_t l = 0; l < gc; ++l) {
                    const Scalar& gq = g.at(q, l);
                    if (gq != 0) t[p * gc + l] += v * gq;
                }
            }
        // out(r, j·gc + l) = Σ_p f(p,j)·T(p,l)
        Vec row(fc * gc, Scalar(0));
        for (std::size_t p = 0; p < fr; ++p)
            for (std::size_t j = 0; j < fc; ++j) {
                const Scalar& fp = f.at(p, j);
                if (fp == 0) continue;
                for (std::size_t l = 0; l < gc; ++l) {
                    const Scalar& tp = t[p * gc + l];
                    if (tp != 0) row[j * gc + l] += fp * tp;
                }
            }
        out.set_row(r, row);
    }
    return out;
}

std::pair<Matrix, std::size_t> rref(const Matrix& m) {
    const Field& f = m.field();
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));

    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Scalar inv = f.inv(rows[r][c]);
        for (auto& x : rows[r]) x = f.norm(x * inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Scalar factor = rows[i][c];
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (rows[r][j] == 0) continue;
                rows[i][j] = f.norm(rows[i][j] - factor * rows[r][j]);
            }
        }
        ++r;
    }
    Matrix out = Matrix::from_rows(f, rows, m.cols());
    return {out, r};
}

std::size_t rank(const Matrix& m) { return rref(m).second; }

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw error("solve: rhs length mismatch");
    const Field& f = m.field();
    Matrix aug(f, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
        aug.set(i, m.cols(), b[i]);
    }
    auto [red, rk] = rref(aug);
    Vec x(m.cols(), Scalar(0));
    for (std::size_t i = 0; i < rk; ++i) {
        std::size_t piv = 0;
        while (piv <= m.cols() && red.at(i, piv) == 0) ++piv;
        if (piv == m.cols()) return std::nullopt; // row [0 … 0 | 1]
        x[piv] = red.at(i, m.cols());
    }
    return x;
}

Matrix kernel_basis(const Matrix& m) {
    const Field& f = m.field();
    auto [red, rk] = rref(m);
    std::vector<std::size_t> pivots;
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t i = 0; i < rk; ++i) {
        std::size_t piv = 0;
        while (red.at(i, piv) == 0) ++piv;
        pivots.push_back(piv);
        is_pivot[piv] = true;
    }
    std::vector<Vec> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v(m.cols(), Scalar(0));
        v[c] = 1;
        for (std::size_t i = 0; i < rk; ++i) v[pivots[i]] = f.neg(red.at(i, c));
        basis.push_back(v);
    }
    return rref(Matrix::from_rows(f, basis, m.cols())).first;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw error("inverse: matrix not square");
    const Field& f = m.field();
    std::size_t n = m.rows();
    Matrix aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
        aug.set(i, n + i, f.one());
    }
    auto [red, rk] = rref(aug);
    if (rk != n) throw error("inverse: matrix singular");
    Matrix out(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, red.at(i, n + j));
    // rank n forces the left block of the RREF to be the identity
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (red.at(i, j) != (i == j ? 1 : 0)) throw error("inverse: matrix singular");
    return out;
}

RowSpace::RowSpace(Field f, std::size_t ambient) : field_(f), ambient_(ambient) {}

Vec RowSpace::reduce(Vec v) const {
    if (v.size() != ambient_) throw error("RowSpace: ambient mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& c = v[pivots_[k]];
        if (c == 0) continue;
        Scalar factor = field_.norm(c);
        for (std::size_t j = 0; j < ambient_; ++j) {
            const Scalar& rkj = rows_[k][j];
            if (rkj == 0) continue;
            v[j] = field_.norm(v[j] - factor * rkj);
        }
    }
    return v;
}

bool RowSpace::contains(const Vec& v) const { return vec_is_zero(field_, reduce(v)); }

bool RowSpace::insert(const Vec& v) {
    Vec r = reduce(v);
    std::size_t piv = 0;
    while (piv < ambient_ && r[piv] == 0) ++piv;
    if (piv == ambient_) return false;
    Scalar inv = field_.inv(r[piv]);
    for (auto& x : r) x = field_.norm(x * inv);
    // eliminate the new pivot from existing rows
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar c = rows_[k][piv];
        if (c == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) {
            if (r[j] == 0) continue;
            rows_[k][j] = field_.norm(rows_[k][j] - c * r[j]);
        }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    std::size_t idx = std::size_t(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + idx, std::move(r));
    return true;
}

Matrix RowSpace::to_matrix() const { return Matrix::from_rows(field_, rows_, ambient_); }

} // namespace coralg
