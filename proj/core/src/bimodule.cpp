#include "coralg/bimodule.hpp"

namespace coralg {

Vec Bimodule::lapply(const Vec& a, const Vec& v) const {
    if (a.size() != left.dim() || v.size() != dim) throw error("Bimodule::lapply: length mismatch");
    Vec r(dim, left.field().zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        r = vec_add(left.field(), r, vec_scale(left.field(), a[i], row_apply(v, lact[i])));
    }
    return r;
}

Vec Bimodule::rapply(const Vec& v, const Vec& a) const {
    if (a.size() != right.dim() || v.size() != dim)
        throw error("Bimodule::rapply: length mismatch");
    Vec r(dim, right.field().zero());
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0) continue;
        r = vec_add(right.field(), r, vec_scale(right.field(), a[j], row_apply(v, ract[j])));
    }
    return r;
}

Verdict Bimodule::validate() const {
    const Field& f = left.field();
    for (std::size_t v = 0; v < dim; ++v) {
        Vec ev = unit_vec(dim, v);
        if (lapply(left.unit(), ev) != ev) return Verdict::fail("left action not unital");
        if (rapply(ev, right.unit()) != ev) return Verdict::fail("right action not unital");
    }
    for (std::size_t i = 0; i < left.dim(); ++i)
        for (std::size_t j = 0; j < left.dim(); ++j)
            for (std::size_t v = 0; v < dim; ++v) {
                Vec ev = unit_vec(dim, v);
                Vec ei = unit_vec(left.dim(), i), ej = unit_vec(left.dim(), j);
                if (lapply(ei, lapply(ej, ev)) != lapply(left.mul(ei, ej), ev))
                    return Verdict::fail("left action not a representation");
            }
    for (std::size_t i = 0; i < right.dim(); ++i)
        for (std::size_t j = 0; j < right.dim(); ++j)
            for (std::size_t v = 0; v < dim; ++v) {
                Vec ev = unit_vec(dim, v);
                Vec ei = unit_vec(right.dim(), i), ej = unit_vec(right.dim(), j);
                if (rapply(rapply(ev, ei), ej) != rapply(ev, right.mul(ei, ej)))
                    return Verdict::fail("right action not a representation");
            }
    for (std::size_t i = 0; i < left.dim(); ++i)
        for (std::size_t j = 0; j < right.dim(); ++j)
            for (std::size_t v = 0; v < dim; ++v) {
                Vec ev = unit_vec(dim, v);
                Vec ei = unit_vec(left.dim(), i), ej = unit_vec(right.dim(), j);
                if (lapply(ei, rapply(ev, ej)) != rapply(lapply(ei, ev), ej))
                    return Verdict::fail("actions do not commute");
            }
    (void)f;
    return Verdict::pass();
}

Bimodule regular_bimodule(const Algebra& a) {
    Bimodule m{a, a, a.dim(), {}, {}};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        m.lact.push_back(a.left_mult(unit_vec(a.dim(), i)));
        m.ract.push_back(a.right_mult(unit_vec(a.dim(), i)));
    }
    return m;
}

Bimodule pullback_left(const Bimodule& m, const Algebra& l2, const Matrix& f) {
    if (f.rows() != l2.dim() || f.cols() != m.left.dim())
        throw error("pullback_left: map shape mismatch");
    Bimodule r{l2, m.right, m.dim, {}, m.ract};
    for (std::size_t i = 0; i < l2.dim(); ++i) {
        Matrix act(m.left.field(), m.dim, m.dim);
        Vec img = f.row(i);
        for (std::size_t k = 0; k < m.left.dim(); ++k)
            if (img[k] != 0) {
                Matrix scaled(m.left.field(), m.dim, m.dim);
                for (std::size_t a = 0; a < m.dim; ++a)
                    scaled.set_row(a, vec_scale(m.left.field(), img[k], m.lact[k].row(a)));
                act = act + scaled;
            }
        r.lact.push_back(std::move(act));
    }
    return r;
}

Bimodule pullback_right(const Bimodule& m, const Algebra& r2, const Matrix& f) {
    if (f.rows() != r2.dim() || f.cols() != m.right.dim())
        throw error("pullback_right: map shape mismatch");
    Bimodule r{m.left, r2, m.dim, m.lact, {}};
    for (std::size_t j = 0; j < r2.dim(); ++j) {
        Matrix act(m.right.field(), m.dim, m.dim);
        Vec img = f.row(j);
        for (std::size_t k = 0; k < m.right.dim(); ++k)
            if (img[k] != 0) {
                Matrix scaled(m.right.field(), m.dim, m.dim);
                for (std::size_t a = 0; a < m.dim; ++a)
                    scaled.set_row(a, vec_scale(m.right.field(), img[k], m.ract[k].row(a)));
                act = act + scaled;
            }
        r.ract.push_back(std::move(act));
    }
    return r;
}

Bimodule quotient_bimodule(const Algebra& b, const QuotientAlgebra& q) {
    Bimodule m{b, b, q.quotient.dim(), {}, {}};
    for (std::size_t i = 0; i < b.dim(); ++i) {
        Vec e = unit_vec(b.dim(), i);
        m.lact.push_back(q.lift() * b.left_mult(e) * q.proj());
        m.ract.push_back(q.lift() * b.right_mult(e) * q.proj());
    }
    return m;
}

Verdict BimoduleMorphism::check(const Bimodule& source, const Bimodule& target) const {
    if (map.rows() != source.dim || map.cols() != target.dim)
        return Verdict::fail("bimodule morphism shape mismatch");
    for (std::size_t i = 0; i < source.left.dim(); ++i)
        if (source.lact[i] * map != map * target.lact[i])
            return Verdict::fail("left linearity fails at basis " + std::to_string(i));
    for (std::size_t j = 0; j < source.right.dim(); ++j)
        if (source.ract[j] * map != map * target.ract[j])
            return Verdict::fail("right linearity fails at basis " + std::to_string(j));
    return Verdict::pass();
}

QuotientSpace balanced_carrier(const Bimodule& m, const Bimodule& n) {
    if (m.right != n.left) throw error("balanced_tensor: middle algebras differ");
    const Algebra& mid = m.right;
    const Field& f = mid.field();
    std::size_t md = m.dim, nd = n.dim;
    RowSpace rel(f, md * nd);
    for (std::size_t r = 0; r < mid.dim(); ++r) {
        Vec er = unit_vec(mid.dim(), r);
        std::vector<Vec> rn;
        for (std::size_t b = 0; b < nd; ++b) rn.push_back(n.lapply(er, unit_vec(nd, b)));
        for (std::size_t a = 0; a < md; ++a) {
            Vec mr = m.rapply(unit_vec(md, a), er);
            for (std::size_t b = 0; b < nd; ++b) {
                Vec gen = vec_sub(f, kron_vec(f, mr, unit_vec(nd, b)),
                                  kron_vec(f, unit_vec(md, a), rn[b]));
                rel.insert(gen);
            }
        }
    }
    return QuotientSpace(md * nd, Subspace::span(rel.to_matrix()));
}

BalancedTensor balanced_tensor(const Bimodule& m, const Bimodule& n) {
    const Field& f = m.right.field();
    std::size_t md = m.dim, nd = n.dim;
    QuotientSpace carrier = balanced_carrier(m, n);
    std::size_t t = carrier.dim();
    Bimodule outer{m.left, n.right, t, {}, {}};
    Matrix in = Matrix::identity(f, nd), im = Matrix::identity(f, md);
    for (std::size_t i = 0; i < m.left.dim(); ++i)
        outer.lact.push_back(kron_mult(carrier.lift(), m.lact[i], in) * carrier.project());
    for (std::size_t j = 0; j < n.right.dim(); ++j)
        outer.ract.push_back(kron_mult(carrier.lift(), im, n.ract[j]) * carrier.project());
    return BalancedTensor{m, n, std::move(carrier), std::move(outer)};
}

Vec BalancedTensor::pure(const Vec& u, const Vec& v) const {
    return row_apply(kron_vec(carrier.killed().field(), u, v), carrier.project());
}

Matrix induced_map(const QuotientSpace& from, const QuotientSpace& to, const Matrix& f,
                   const Matrix& g, bool check_well_defined) {
    if (check_well_defined) {
        const Matrix& rel = from.killed().basis();
        Matrix img = kron_mult(rel, f, g) * to.project();
        if (!img.is_zero())
            throw error("induced_on_tensor: map does not respect balancing relations");
    }
    return kron_mult(from.lift(), f, g) * to.project();
}

Matrix induced_on_tensor(const BalancedTensor& from, const BalancedTensor& to, const Matrix& f,
                         const Matrix& g, bool check_well_defined) {
    return induced_map(from.carrier, to.carrier, f, g, check_well_defined);
}

TripleTensor triple_tensor(const Bimodule& m, const Bimodule& n, const Bimodule& p) {
    BalancedTensor mn = balanced_tensor(m, n);
    BalancedTensor ln = balanced_tensor(mn.outer, p);
    BalancedTensor np = balanced_tensor(n, p);
    BalancedTensor rn = balanced_tensor(m, np.outer);
    const Field& f = m.left.field();
    Matrix im = Matrix::identity(f, m.dim), ip = Matrix::identity(f, p.dim);
    Matrix rl = kron_mult(kron_mult(rn.carrier.lift(), im, np.carrier.lift()),
                          mn.carrier.project(), ip) *
                ln.carrier.project();
    Matrix lr = kron_mult(kron_mult(ln.carrier.lift(), mn.carrier.lift(), ip), im,
                          np.carrier.project()) *
                rn.carrier.project();
    return TripleTensor{std::move(mn), std::move(ln), std::move(np), std::move(rn),
                        std::move(rl), std::move(lr)};
}

} // namespace coralg
