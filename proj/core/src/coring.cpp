#include "coralg/coring.hpp"

namespace coralg {

Verdict verify_coring(const Coring& c) {
    const Field& f = c.base.field();
    std::size_t cd = c.carrier.dim, ad = c.base.dim();

    Verdict bil = BimoduleMorphism{c.coproduct}.check(c.carrier, c.cc.outer);
    if (!bil) return Verdict::fail("coproduct not A-bilinear: " + bil.what);
    for (std::size_t i = 0; i < ad; ++i) {
        Vec e = unit_vec(ad, i);
        if (c.carrier.lact[i] * c.counit != c.counit * c.base.left_mult(e))
            return Verdict::fail("counit not left A-linear at basis " + std::to_string(i));
        if (c.carrier.ract[i] * c.counit != c.counit * c.base.right_mult(e))
            return Verdict::fail("counit not right A-linear at basis " + std::to_string(i));
    }

    // counit laws through the identifications A⊗_A C ≅ C ≅ C⊗_A A
    Matrix contract_left(f, cd * cd, cd), contract_right(f, cd * cd, cd);
    for (std::size_t p = 0; p < cd; ++p) {
        Vec eps_p = c.counit.row(p);
        for (std::size_t q = 0; q < cd; ++q) {
            contract_left.set_row(p * cd + q, c.carrier.lapply(eps_p, unit_vec(cd, q)));
            contract_right.set_row(p * cd + q,
                                   c.carrier.rapply(unit_vec(cd, p), c.counit.row(q)));
        }
    }
    Matrix id_c = Matrix::identity(f, cd);
    if (c.coproduct * (c.cc.carrier.lift() * contract_left) != id_c)
        return Verdict::fail("left counit law fails");
    if (c.coproduct * (c.cc.carrier.lift() * contract_right) != id_c)
        return Verdict::fail("right counit law fails");

    // coassociativity, compared on the left-nested carrier
    QuotientSpace tl = balanced_carrier(c.cc.outer, c.carrier);
    QuotientSpace tr = balanced_carrier(c.carrier, c.cc.outer);
    Matrix d_left = induced_map(c.cc.carrier, tl, c.coproduct, id_c);
    Matrix d_right = induced_map(c.cc.carrier, tr, id_c, c.coproduct);
    Matrix assoc = kron_mult(kron_mult(tr.lift(), id_c, c.cc.carrier.lift()),
                             c.cc.carrier.project(), id_c) *
                   tl.project();
    if (c.coproduct * d_left != c.coproduct * d_right * assoc)
        return Verdict::fail("coassociativity fails");
    return Verdict::pass();
}

SweedlerCoring sweedler_coring(const Algebra& b, const Algebra& a, const Matrix& iota) {
    Verdict mor = AlgebraMorphism{iota}.check(b, a);
    if (!mor) throw error("sweedler_coring: iota is not an algebra map: " + mor.what);
    const Field& f = a.field();
    Bimodule left_factor = pullback_right(regular_bimodule(a), b, iota);  // (A,B)
    Bimodule right_factor = pullback_left(regular_bimodule(a), b, iota);  // (B,A)
    BalancedTensor t = balanced_tensor(left_factor, right_factor);
    Bimodule carrier = t.outer;
    BalancedTensor cc = balanced_tensor(carrier, carrier);

    std::size_t ad = a.dim(), td = t.dim();
    std::vector<Vec> with_unit_right, with_unit_left;
    for (std::size_t p = 0; p < ad; ++p) {
        with_unit_right.push_back(t.pure(unit_vec(ad, p), a.unit()));
        with_unit_left.push_back(t.pure(a.unit(), unit_vec(ad, p)));
    }
    Matrix delta(f, td, cc.dim());
    Matrix counit(f, td, ad);
    for (std::size_t w = 0; w < td; ++w) {
        Vec rep = t.carrier.lift().row(w);
        Vec d(cc.dim(), f.zero()), e(ad, f.zero());
        for (std::size_t p = 0; p < ad; ++p)
            for (std::size_t q = 0; q < ad; ++q) {
                const Scalar& coeff = rep[p * ad + q];
                if (coeff == 0) continue;
                Vec term = cc.pure(with_unit_right[p], with_unit_left[q]);
                d = vec_add(f, d, vec_scale(f, coeff, term));
                e = vec_add(f, e, vec_scale(f, coeff,
                                            a.mul(unit_vec(ad, p), unit_vec(ad, q))));
            }
        delta.set_row(w, d);
        counit.set_row(w, e);
    }
    return SweedlerCoring{Coring{a, carrier, std::move(cc), std::move(delta), std::move(counit)},
                          std::move(t)};
}

Verdict is_grouplike(const Coring& c, const Vec& g) {
    if (g.size() != c.carrier.dim) throw error("is_grouplike: element not in carrier");
    if (row_apply(g, c.coproduct) != c.cc.pure(g, g))
        return Verdict::fail("coproduct of g is not g⊗g");
    if (row_apply(g, c.counit) != c.base.unit()) return Verdict::fail("counit of g is not 1");
    return Verdict::pass();
}

CoinvariantAlgebra coinvariants(const Coring& c, const Vec& g) {
    Verdict grp = is_grouplike(c, g);
    if (!grp) throw error("coinvariants: element is not grouplike: " + grp.what);
    const Field& f = c.base.field();
    std::size_t ad = c.base.dim();
    Matrix comm(f, ad, c.carrier.dim);
    for (std::size_t i = 0; i < ad; ++i) {
        Vec e = unit_vec(ad, i);
        comm.set_row(i, vec_sub(f, c.carrier.lapply(e, g), c.carrier.rapply(g, e)));
    }
    Subspace w = Subspace::span(kernel_basis(comm.transpose()));
    std::size_t d = w.dim();
    Matrix table(f, d * d, d);
    for (std::size_t s = 0; s < d; ++s)
        for (std::size_t t = 0; t < d; ++t) {
            Vec prod = c.base.mul(w.basis().row(s), w.basis().row(t));
            auto coords = w.coordinates(prod);
            if (!coords) throw error("coinvariants: subspace not closed under product");
            table.set_row(s * d + t, *coords);
        }
    auto unit = w.coordinates(c.base.unit());
    if (!unit) throw error("coinvariants: unit not contained in the subspace");
    Matrix inclusion = w.basis();
    return CoinvariantAlgebra{Algebra(f, d, std::move(table), std::move(*unit)), std::move(w),
                              std::move(inclusion)};
}

GaloisVerdict galois_verdict(const Coring& c, const Vec& g) {
    CoinvariantAlgebra coinv = coinvariants(c, g);
    SweedlerCoring sw = sweedler_coring(coinv.algebra, c.base, coinv.inclusion);
    const Field& f = c.base.field();
    std::size_t ad = c.base.dim(), sd = sw.tensor.dim();

    Matrix rule(f, ad * ad, c.carrier.dim);
    for (std::size_t p = 0; p < ad; ++p) {
        Vec pg = c.carrier.lapply(unit_vec(ad, p), g);
        for (std::size_t q = 0; q < ad; ++q)
            rule.set_row(p * ad + q, c.carrier.rapply(pg, unit_vec(ad, q)));
    }
    Matrix can = sw.tensor.carrier.lift() * rule;

    GaloisVerdict v{false, false, false, coinv.algebra.dim(), can, ""};
    v.can_bijective = (sd == c.carrier.dim) && rank(can) == sd;
    if (!v.can_bijective)
        v.detail = "canonical map has rank " + std::to_string(rank(can)) + " on " +
                   std::to_string(sd) + " → " + std::to_string(c.carrier.dim);
    Matrix tens = induced_on_tensor(sw.coring.cc, c.cc, can, can);
    bool delta_ok = sw.coring.coproduct * tens == can * c.coproduct;
    bool counit_ok = can * c.counit == sw.coring.counit;
    v.can_coring_map = delta_ok && counit_ok;
    if (!v.can_coring_map)
        v.detail += std::string(v.detail.empty() ? "" : "; ") + "canonical map is not a coring map";
    v.is_galois = v.can_bijective;
    return v;
}

} // namespace coralg
