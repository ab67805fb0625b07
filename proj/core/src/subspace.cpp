#include "coralg/subspace.hpp"

namespace coralg {

Subspace Subspace::zero(Field f, std::size_t ambient) { return Subspace(Matrix(f, 0, ambient)); }

Subspace Subspace::full(Field f, std::size_t ambient) {
    return Subspace(Matrix::identity(f, ambient));
}

Subspace Subspace::span(const Matrix& m) {
    auto [red, rk] = rref(m);
    Matrix basis(m.field(), rk, m.cols());
    for (std::size_t i = 0; i < rk; ++i) basis.set_row(i, red.row(i));
    return Subspace(std::move(basis));
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient()) throw error("Subspace::reduce: ambient mismatch");
    const Field& f = field();
    Vec r = v;
    for (std::size_t k = 0; k < dim(); ++k) {
        std::size_t piv = 0;
        while (basis_.at(k, piv) == 0) ++piv;
        Scalar c = r[piv];
        if (c == 0) continue;
        for (std::size_t j = 0; j < ambient(); ++j)
            r[j] = f.norm(r[j] - c * basis_.at(k, j));
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(field(), reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (!contains(v)) return std::nullopt;
    // RREF basis: the coefficient of row k is v's value at row k's pivot.
    Vec c(dim(), Scalar(0));
    for (std::size_t k = 0; k < dim(); ++k) {
        std::size_t piv = 0;
        while (basis_.at(k, piv) == 0) ++piv;
        c[k] = v[piv];
    }
    // v may have non-pivot support from other rows; the pivot trick is exact
    // because RREF rows vanish at each other's pivots.
    return c;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient() || u.field() != v.field())
        throw error("subspace_sum: ambient mismatch");
    Matrix stacked(u.field(), u.dim() + v.dim(), u.ambient());
    for (std::size_t i = 0; i < u.dim(); ++i) stacked.set_row(i, u.basis().row(i));
    for (std::size_t i = 0; i < v.dim(); ++i) stacked.set_row(u.dim() + i, v.basis().row(i));
    return Subspace::span(stacked);
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient() || u.field() != v.field())
        throw error("subspace_intersect: ambient mismatch");
    const Field& f = u.field();
    // Solutions (x,y) of x·U − y·V = 0; the intersection is {x·U}.
    Matrix stacked(f, u.dim() + v.dim(), u.ambient());
    for (std::size_t i = 0; i < u.dim(); ++i) stacked.set_row(i, u.basis().row(i));
    for (std::size_t i = 0; i < v.dim(); ++i)
        stacked.set_row(u.dim() + i, vec_scale(f, f.of(-1), v.basis().row(i)));
    Matrix null = kernel_basis(stacked.transpose());
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < null.rows(); ++i) {
        Vec xy = null.row(i);
        Vec x(xy.begin(), xy.begin() + u.dim());
        gens.push_back(row_apply(x, u.basis()));
    }
    return Subspace::span(Matrix::from_rows(f, gens, u.ambient()));
}

QuotientSpace::QuotientSpace(std::size_t ambient, Subspace killed)
    : ambient_(ambient),
      killed_(std::move(killed)),
      project_(killed_.field(), 0, 0),
      lift_(killed_.field(), 0, 0) {
    if (killed_.ambient() != ambient) throw error("QuotientSpace: ambient mismatch");
    const Field& f = killed_.field();
    std::vector<bool> is_pivot(ambient, false);
    for (std::size_t k = 0; k < killed_.dim(); ++k) {
        std::size_t piv = 0;
        while (killed_.basis().at(k, piv) == 0) ++piv;
        is_pivot[piv] = true;
    }
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < ambient; ++c)
        if (!is_pivot[c]) free.push_back(c);

    std::size_t q = free.size();
    project_ = Matrix(f, ambient, q);
    for (std::size_t i = 0; i < ambient; ++i) {
        Vec r = killed_.reduce(unit_vec(ambient, i));
        for (std::size_t t = 0; t < q; ++t) project_.set(i, t, r[free[t]]);
    }
    lift_ = Matrix(f, q, ambient);
    for (std::size_t t = 0; t < q; ++t) lift_.set(t, free[t], f.one());
}

} // namespace coralg
