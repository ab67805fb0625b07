#include "coralg/algebra.hpp"

namespace coralg {

Algebra::Algebra(Field f, std::size_t dim, Matrix table, Vec unit,
                 std::vector<std::string> labels)
    : field_(f), dim_(dim), table_(std::move(table)), unit_(std::move(unit)),
      labels_(std::move(labels)) {
    if (table_.rows() != dim * dim || table_.cols() != dim)
        throw error("Algebra: table shape mismatch");
    if (unit_.size() != dim) throw error("Algebra: unit length mismatch");
    for (auto& x : unit_) x = field_.norm(x);
}

Algebra Algebra::ground_field(Field f) { return functions(f, 1); }

Algebra Algebra::functions(Field f, std::size_t n) {
    Matrix table(f, n * n, n);
    for (std::size_t i = 0; i < n; ++i) table.set(i * n + i, i, f.one());
    Vec unit(n, f.one());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
    return Algebra(f, n, std::move(table), std::move(unit), std::move(labels));
}

Algebra Algebra::matrix_algebra(Field f, std::size_t n) {
    std::size_t d = n * n;
    Matrix table(f, d * d, d);
    auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
    // E_ij · E_kl = δ_jk E_il
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    if (j == k) table.set(idx(i, j) * d + idx(k, l), idx(i, l), f.one());
    Vec unit(d, f.zero());
    for (std::size_t i = 0; i < n; ++i) unit[idx(i, i)] = f.one();
    return Algebra(f, d, std::move(table), std::move(unit));
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw error("Algebra::mul: length mismatch");
    Vec r(dim_, field_.zero());
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) r[k] += c * table_.at(i * dim_ + j, k);
        }
    }
    for (auto& v : r) v = field_.norm(v);
    return r;
}

Matrix Algebra::left_mult(const Vec& x) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) m.set_row(j, mul(x, unit_vec(dim_, j)));
    return m;
}

Matrix Algebra::right_mult(const Vec& x) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) m.set_row(j, mul(unit_vec(dim_, j), x));
    return m;
}

Verdict Algebra::validate() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        Vec ei = unit_vec(dim_, i);
        if (mul(unit_, ei) != ei || mul(ei, unit_) != ei)
            return Verdict::fail("unit law fails on basis element " + std::to_string(i));
    }
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k) {
                Vec ei = unit_vec(dim_, i), ej = unit_vec(dim_, j), ek = unit_vec(dim_, k);
                if (mul(mul(ei, ej), ek) != mul(ei, mul(ej, ek)))
                    return Verdict::fail("associativity fails on triple (" + std::to_string(i) +
                                         "," + std::to_string(j) + "," + std::to_string(k) + ")");
            }
    return Verdict::pass();
}

bool Algebra::operator==(const Algebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && table_ == o.table_ && unit_ == o.unit_;
}

bool is_two_sided_ideal(const Algebra& a, const Subspace& s) {
    if (s.ambient() != a.dim()) return false;
    for (std::size_t r = 0; r < s.dim(); ++r) {
        Vec v = s.basis().row(r);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            Vec e = unit_vec(a.dim(), i);
            if (!s.contains(a.mul(e, v)) || !s.contains(a.mul(v, e))) return false;
        }
    }
    return true;
}

Subspace ideal_closure(const Algebra& a, const std::vector<Vec>& generators) {
    RowSpace span(a.field(), a.dim());
    std::vector<Vec> work;
    for (const Vec& g : generators)
        if (span.insert(g)) work.push_back(g);
    // saturate: multiply new elements on both sides by all basis elements
    while (!work.empty()) {
        std::vector<Vec> next;
        for (const Vec& v : work) {
            for (std::size_t i = 0; i < a.dim(); ++i) {
                Vec e = unit_vec(a.dim(), i);
                for (Vec w : {a.mul(e, v), a.mul(v, e)})
                    if (span.insert(w)) next.push_back(std::move(w));
            }
        }
        work = std::move(next);
    }
    return Subspace::span(span.to_matrix());
}

Subspace sum_ideals(const Algebra& a, const std::vector<Subspace>& ideals) {
    Subspace s = Subspace::zero(a.field(), a.dim());
    for (const auto& j : ideals) s = subspace_sum(s, j);
    if (!is_two_sided_ideal(a, s)) throw error("sum_ideals: result is not an ideal");
    return s;
}

Subspace intersect_ideals(const Algebra& a, const std::vector<Subspace>& ideals) {
    Subspace s = Subspace::full(a.field(), a.dim());
    for (const auto& j : ideals) s = subspace_intersect(s, j);
    return s;
}

QuotientAlgebra quotient_algebra(const Algebra& b, const Subspace& ideal) {
    if (!is_two_sided_ideal(b, ideal)) throw error("quotient_algebra: subspace is not an ideal");
    QuotientSpace qs(b.dim(), ideal);
    std::size_t q = qs.dim();
    Matrix table(b.field(), q * q, q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            Vec prod = b.mul(qs.lift().row(i), qs.lift().row(j));
            table.set_row(i * q + j, row_apply(prod, qs.project()));
        }
    Vec unit = row_apply(b.unit(), qs.project());
    return QuotientAlgebra{Algebra(b.field(), q, std::move(table), std::move(unit)), std::move(qs)};
}

Verdict AlgebraMorphism::check(const Algebra& source, const Algebra& target) const {
    if (map.rows() != source.dim() || map.cols() != target.dim())
        return Verdict::fail("morphism matrix shape mismatch");
    if (row_apply(source.unit(), map) != target.unit()) return Verdict::fail("morphism is not unital");
    for (std::size_t i = 0; i < source.dim(); ++i)
        for (std::size_t j = 0; j < source.dim(); ++j) {
            Vec ei = unit_vec(source.dim(), i), ej = unit_vec(source.dim(), j);
            if (row_apply(source.mul(ei, ej), map) != target.mul(row_apply(ei, map), row_apply(ej, map)))
                return Verdict::fail("morphism not multiplicative on pair (" + std::to_string(i) +
                                     "," + std::to_string(j) + ")");
        }
    return Verdict::pass();
}

Matrix connecting_projection(const QuotientAlgebra& source, const QuotientAlgebra& target) {
    if (!target.space.killed().contains(source.space.killed()))
        throw error("connecting_projection: source ideal not contained in target ideal");
    return source.lift() * target.proj();
}

DirectSum direct_sum(const std::vector<Algebra>& parts) {
    if (parts.empty()) throw error("direct_sum: no summands");
    const Field& f = parts[0].field();
    std::size_t total = 0;
    std::vector<std::size_t> offset;
    for (const auto& p : parts) {
        if (p.field() != f) throw error("direct_sum: field mismatch");
        offset.push_back(total);
        total += p.dim();
    }
    Matrix table(f, total * total, total);
    Vec unit(total, f.zero());
    for (std::size_t b = 0; b < parts.size(); ++b) {
        std::size_t d = parts[b].dim(), off = offset[b];
        for (std::size_t i = 0; i < d; ++i) {
            unit[off + i] = parts[b].unit()[i];
            for (std::size_t j = 0; j < d; ++j) {
                Vec prod = parts[b].table().row(i * d + j);
                for (std::size_t k = 0; k < d; ++k)
                    table.set((off + i) * total + (off + j), off + k, prod[k]);
            }
        }
    }
    DirectSum ds{Algebra(f, total, std::move(table), std::move(unit)), {}, {}, offset};
    for (std::size_t b = 0; b < parts.size(); ++b) {
        std::size_t d = parts[b].dim(), off = offset[b];
        Matrix inj(f, d, total), prj(f, total, d);
        for (std::size_t i = 0; i < d; ++i) {
            inj.set(i, off + i, f.one());
            prj.set(off + i, i, f.one());
        }
        ds.inject.push_back(std::move(inj));
        ds.project.push_back(std::move(prj));
    }
    return ds;
}

Algebra opposite(const Algebra& a) {
    std::size_t n = a.dim();
    Matrix table(a.field(), n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table.set_row(i * n + j, a.table().row(j * n + i));
    return Algebra(a.field(), n, std::move(table), a.unit(), a.labels());
}

Subspace vanishing_ideal(const Algebra& b, const std::vector<std::size_t>& u) {
    if (u.empty()) throw error("vanishing_ideal: empty subset");
    std::vector<bool> in_u(b.dim(), false);
    for (std::size_t x : u) {
        if (x >= b.dim()) throw error("vanishing_ideal: point index out of range");
        in_u[x] = true;
    }
    std::vector<Vec> gens;
    for (std::size_t x = 0; x < b.dim(); ++x)
        if (!in_u[x]) gens.push_back(unit_vec(b.dim(), x));
    return Subspace::span(Matrix::from_rows(b.field(), gens, b.dim()));
}

} // namespace coralg
