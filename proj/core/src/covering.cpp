#include "coralg/covering.hpp"

namespace coralg {

namespace {

std::string vec_str(const Field& f, const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + f.str(v[i]);
    return s + ")";
}

Matrix kappa_matrix(const Covering& cov, const DirectSum& a) {
    Matrix k(cov.base.field(), cov.base.dim(), a.sum.dim());
    for (std::size_t i = 0; i < cov.count; ++i)
        k = k + cov.single[i].proj() * a.inject[i];
    return k;
}

} // namespace

Matrix Covering::conn_single_pair(std::size_t i, std::size_t j) const {
    return connecting_projection(single[i], pair[i][j]);
}

Matrix Covering::conn_pair_triple(std::size_t i, std::size_t j, std::size_t k) const {
    return connecting_projection(pair[i][k], triple[i][j][k]);
}

Matrix Covering::conn_single_triple(std::size_t i, std::size_t j, std::size_t k) const {
    return connecting_projection(single[i], triple[i][j][k]);
}

Covering validate_covering(const Algebra& b, const std::vector<Subspace>& ideals) {
    if (ideals.empty()) throw error("covering: at least one ideal required");
    for (std::size_t i = 0; i < ideals.size(); ++i)
        if (!is_two_sided_ideal(b, ideals[i]))
            throw error("covering: member " + std::to_string(i) + " is not a two-sided ideal");
    Subspace inter = intersect_ideals(b, ideals);
    if (inter.dim() != 0)
        throw error("covering: nonzero intersection, witness " +
                    vec_str(b.field(), inter.basis().row(0)));

    Covering cov{b, ideals, ideals.size(), {}, {}, {}};
    std::size_t n = ideals.size();
    for (std::size_t i = 0; i < n; ++i) cov.single.push_back(quotient_algebra(b, ideals[i]));
    cov.pair.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cov.pair[i].push_back(quotient_algebra(b, subspace_sum(ideals[i], ideals[j])));
    cov.triple.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        cov.triple[i].resize(n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                cov.triple[i][j].push_back(quotient_algebra(
                    b, subspace_sum(subspace_sum(ideals[i], ideals[j]), ideals[k])));
    }
    return cov;
}

CoveringCompletion covering_completion(const Covering& cov) {
    const Field& f = cov.base.field();
    std::vector<Algebra> parts;
    for (const auto& q : cov.single) parts.push_back(q.quotient);
    DirectSum a = direct_sum(parts);

    // B_c = kernel of (a_i) ↦ (π^i_j(a_i) − π^j_i(a_j)) over unordered pairs
    std::size_t total_cols = 0;
    for (std::size_t i = 0; i < cov.count; ++i)
        for (std::size_t j = i + 1; j < cov.count; ++j)
            total_cols += cov.pair[i][j].quotient.dim();
    Matrix glue(f, a.sum.dim(), total_cols);
    std::size_t off = 0;
    for (std::size_t i = 0; i < cov.count; ++i)
        for (std::size_t j = i + 1; j < cov.count; ++j) {
            Matrix pij = cov.conn_single_pair(i, j);
            Matrix pji = cov.conn_single_pair(j, i);
            std::size_t d = cov.pair[i][j].quotient.dim();
            for (std::size_t s = 0; s < cov.single[i].quotient.dim(); ++s) {
                Vec row = pij.row(s);
                for (std::size_t c = 0; c < d; ++c)
                    glue.set(a.offset[i] + s, off + c, row[c]);
            }
            for (std::size_t s = 0; s < cov.single[j].quotient.dim(); ++s) {
                Vec row = pji.row(s);
                for (std::size_t c = 0; c < d; ++c)
                    glue.set(a.offset[j] + s, off + c, f.neg(row[c]));
            }
            off += d;
        }
    Subspace bc = Subspace::span(kernel_basis(glue.transpose()));

    std::size_t d = bc.dim();
    Matrix table(f, d * d, d);
    for (std::size_t s = 0; s < d; ++s)
        for (std::size_t t = 0; t < d; ++t) {
            auto coords = bc.coordinates(a.sum.mul(bc.basis().row(s), bc.basis().row(t)));
            if (!coords) throw error("covering_completion: B_c not closed under product");
            table.set_row(s * d + t, *coords);
        }
    auto unit = bc.coordinates(a.sum.unit());
    if (!unit) throw error("covering_completion: unit of A not in B_c");
    Algebra bc_alg(f, d, std::move(table), std::move(*unit));

    Matrix kappa = kappa_matrix(cov, a);
    Matrix kappa_bc(f, cov.base.dim(), d);
    for (std::size_t r = 0; r < cov.base.dim(); ++r) {
        auto coords = bc.coordinates(kappa.row(r));
        if (!coords) throw error("covering_completion: image of κ not inside B_c");
        kappa_bc.set_row(r, *coords);
    }
    return CoveringCompletion{std::move(a), std::move(bc), std::move(bc_alg), std::move(kappa),
                              std::move(kappa_bc)};
}

bool is_complete(const Covering& cov) {
    return covering_completion(cov).bc.dim() == cov.base.dim();
}

Vec CoveringCoring::block(const Vec& c, std::size_t i, std::size_t j) const {
    std::size_t d = cov.pair[i][j].quotient.dim();
    return Vec(c.begin() + pair_offset[i][j], c.begin() + pair_offset[i][j] + d);
}

CoveringCoring covering_coring(const Covering& cov) {
    const Field& f = cov.base.field();
    std::size_t n = cov.count;
    std::vector<Algebra> parts;
    for (const auto& q : cov.single) parts.push_back(q.quotient);
    DirectSum a = direct_sum(parts);
    std::size_t ad = a.sum.dim();

    std::vector<std::vector<std::size_t>> po(n, std::vector<std::size_t>(n, 0));
    std::size_t cd = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            po[i][j] = cd;
            cd += cov.pair[i][j].quotient.dim();
        }

    // bimodule actions: (a_i)·(c_jk)·(a'_l) = (π^j_k(a_j) c_jk π^k_j(a'_k))
    Bimodule carrier{a.sum, a.sum, cd, {}, {}};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Matrix> conn_i;
        for (std::size_t k = 0; k < n; ++k) conn_i.push_back(cov.conn_single_pair(i, k));
        for (std::size_t s = 0; s < cov.single[i].quotient.dim(); ++s) {
            Matrix lact(f, cd, cd), ract(f, cd, cd);
            for (std::size_t k = 0; k < n; ++k) {
                const Algebra& bik = cov.pair[i][k].quotient;
                Matrix lm = bik.left_mult(conn_i[k].row(s));
                for (std::size_t r = 0; r < bik.dim(); ++r)
                    for (std::size_t c = 0; c < bik.dim(); ++c)
                        lact.set(po[i][k] + r, po[i][k] + c, lm.at(r, c));
                const Algebra& bki = cov.pair[k][i].quotient;
                Matrix rm = bki.right_mult(conn_i[k].row(s)); // π^i_k lands in B_ki = B_ik
                for (std::size_t r = 0; r < bki.dim(); ++r)
                    for (std::size_t c = 0; c < bki.dim(); ++c)
                        ract.set(po[k][i] + r, po[k][i] + c, rm.at(r, c));
            }
            carrier.lact.push_back(std::move(lact));
            carrier.ract.push_back(std::move(ract));
        }
    }

    BalancedTensor cc = balanced_tensor(carrier, carrier);

    // D = ⊕ B_ijk and Δ_D((a_ij)) = (π^{ik}_j(a_ik))
    std::vector<std::vector<std::vector<std::size_t>>> to(
        n, std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n, 0)));
    std::size_t dd = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                to[i][j][k] = dd;
                dd += cov.triple[i][j][k].quotient.dim();
            }
    Matrix delta_d(f, cd, dd);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                Matrix conn = cov.conn_pair_triple(i, j, k);
                for (std::size_t s = 0; s < cov.pair[i][k].quotient.dim(); ++s) {
                    Vec row = conn.row(s);
                    for (std::size_t c = 0; c < row.size(); ++c)
                        delta_d.set(po[i][k] + s, to[i][j][k] + c, row[c]);
                }
            }
        }

    // ν : D → C⊗_A C, per block (i,j,k):
    //   π_ijk(b) ↦ class( ρ_ij(π_ij(b)) ⊗ Σ_p ρ_pk(π_pk(1)) )
    Matrix nu(f, dd, cc.dim());
    for (std::size_t k = 0; k < n; ++k) {
        Vec unit_col(cd, f.zero());
        for (std::size_t p = 0; p < n; ++p) {
            const Vec& u = cov.pair[p][k].quotient.unit();
            for (std::size_t c = 0; c < u.size(); ++c) unit_col[po[p][k] + c] = u[c];
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const QuotientAlgebra& t = cov.triple[i][j][k];
                for (std::size_t s = 0; s < t.quotient.dim(); ++s) {
                    Vec rep = t.lift().row(s);
                    Vec left(cd, f.zero());
                    Vec img = row_apply(rep, cov.pair[i][j].proj());
                    for (std::size_t c = 0; c < img.size(); ++c) left[po[i][j] + c] = img[c];
                    nu.set_row(to[i][j][k] + s, cc.pure(left, unit_col));
                }
            }
    }

    Matrix coproduct = delta_d * nu;

    Matrix counit(f, cd, ad);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix m = cov.pair[i][i].lift() * cov.single[i].proj() * a.inject[i];
        for (std::size_t s = 0; s < cov.pair[i][i].quotient.dim(); ++s)
            counit.set_row(po[i][i] + s, m.row(s));
    }

    Vec g(cd, f.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& u = cov.pair[i][j].quotient.unit();
            for (std::size_t c = 0; c < u.size(); ++c) g[po[i][j] + c] = u[c];
        }

    Coring coring{a.sum, std::move(carrier), std::move(cc), std::move(coproduct),
                  std::move(counit)};
    return CoveringCoring{cov,      std::move(a),  std::move(coring), std::move(g),
                          std::move(po), dd, std::move(delta_d), std::move(nu)};
}

std::array<Vec, 4> coproduct_four_forms(const CoveringCoring& cc, const Vec& element) {
    const Covering& cov = cc.cov;
    const Field& f = cov.base.field();
    std::size_t n = cov.count;
    std::size_t cd = cc.coring.carrier.dim, ad = cc.a.sum.dim();
    if (element.size() != cd) throw error("coproduct_four_forms: element not in carrier");

    // representatives b_ij ∈ B with π_ij(b_ij) = component (i,j)
    std::vector<std::vector<Vec>> rep(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rep[i][j] = row_apply(cc.block(element, i, j), cov.pair[i][j].lift());

    auto embed_pair = [&](std::size_t i, std::size_t j, const Vec& v, Vec& out) {
        for (std::size_t c = 0; c < v.size(); ++c) out[cc.pair_offset[i][j] + c] = f.norm(out[cc.pair_offset[i][j] + c] + v[c]);
    };

    std::array<Vec, 4> forms;
    forms.fill(Vec(cc.coring.cc.dim(), f.zero()));
    for (std::size_t k = 0; k < n; ++k) {
        // U_k = (π_mj(δ_kj 1)) — units in column k; E_k — units in row k
        Vec ucol(cd, f.zero()), erow(cd, f.zero());
        for (std::size_t m = 0; m < n; ++m) {
            embed_pair(m, k, cov.pair[m][k].quotient.unit(), ucol);
            embed_pair(k, m, cov.pair[k][m].quotient.unit(), erow);
        }
        // form 1: (π_il(b_ik))_{i,l} ⊗ U_k
        Vec lk(cd, f.zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                embed_pair(i, l, row_apply(rep[i][k], cov.pair[i][l].proj()), lk);
        forms[0] = vec_add(f, forms[0], cc.coring.cc.pure(lk, ucol));
        // form 2: ((π_n(b_nk))_n · g) ⊗ U_k
        Vec nk(ad, f.zero());
        for (std::size_t m = 0; m < n; ++m) {
            Vec img = row_apply(rep[m][k], cov.single[m].proj());
            for (std::size_t c = 0; c < img.size(); ++c) nk[cc.a.offset[m] + c] = img[c];
        }
        forms[1] = vec_add(f, forms[1],
                           cc.coring.cc.pure(cc.coring.carrier.lapply(nk, cc.grouplike), ucol));
        // form 3: E_k ⊗ (π_mj(b_kj))_{m,j}
        Vec rk(cd, f.zero());
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t j = 0; j < n; ++j)
                embed_pair(m, j, row_apply(rep[k][j], cov.pair[m][j].proj()), rk);
        forms[2] = vec_add(f, forms[2], cc.coring.cc.pure(erow, rk));
        // form 4: E_k ⊗ (g · (π_n(b_kn))_n)
        Vec mk(ad, f.zero());
        for (std::size_t m = 0; m < n; ++m) {
            Vec img = row_apply(rep[k][m], cov.single[m].proj());
            for (std::size_t c = 0; c < img.size(); ++c) mk[cc.a.offset[m] + c] = img[c];
        }
        forms[3] = vec_add(f, forms[3],
                           cc.coring.cc.pure(erow, cc.coring.carrier.rapply(cc.grouplike, mk)));
    }
    return forms;
}

PhiData phi(const Covering& cov, std::size_t i, std::size_t j) {
    const Field& f = cov.base.field();
    Bimodule bi = quotient_bimodule(cov.base, cov.single[i]);
    Bimodule bj = quotient_bimodule(cov.base, cov.single[j]);
    BalancedTensor t = balanced_tensor(bi, bj);
    const Algebra& bij = cov.pair[i][j].quotient;
    Matrix pij = cov.conn_single_pair(i, j);
    Matrix pji = cov.conn_single_pair(j, i);

    Matrix rule(f, bi.dim * bj.dim, bij.dim());
    for (std::size_t s = 0; s < bi.dim; ++s)
        for (std::size_t u = 0; u < bj.dim; ++u)
            rule.set_row(s * bj.dim + u, bij.mul(pij.row(s), pji.row(u)));
    Matrix fwd = t.carrier.lift() * rule;

    Matrix inv(f, bij.dim(), t.dim());
    for (std::size_t u = 0; u < bij.dim(); ++u) {
        Vec b = cov.pair[i][j].lift().row(u);
        inv.set_row(u, t.pure(row_apply(cov.base.unit(), cov.single[i].proj()),
                              row_apply(b, cov.single[j].proj())));
    }
    return PhiData{std::move(t), std::move(fwd), std::move(inv)};
}

GluingMaps gluing_maps(const Covering& cov) {
    const Field& f = cov.base.field();
    std::size_t n = cov.count;
    std::vector<Algebra> parts;
    for (const auto& q : cov.single) parts.push_back(q.quotient);
    DirectSum a = direct_sum(parts);
    Matrix kappa = kappa_matrix(cov, a);
    std::size_t ad = a.sum.dim();

    Bimodule a_ab = pullback_right(regular_bimodule(a.sum), cov.base, kappa);
    Bimodule a_ba = pullback_left(regular_bimodule(a.sum), cov.base, kappa);
    BalancedTensor taa = balanced_tensor(a_ab, a_ba);

    GluingMaps g{std::move(taa), {}, {}, Matrix(f, 0, 0), Matrix(f, 0, 0),
                 Matrix(f, 0, 0), Matrix(f, 0, 0)};
    g.phis.resize(n);
    g.theta_offset.assign(n, std::vector<std::size_t>(n, 0));
    std::size_t td = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            g.phis[i].push_back(phi(cov, i, j));
            g.theta_offset[i][j] = td;
            td += g.phis[i][j].tensor.dim();
        }

    // Θ on pure tensors: (a_i)⊗(a'_j) ↦ (a_i ⊗ a'_j)_{i,j}
    Matrix theta_rule(f, ad * ad, td);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const BalancedTensor& tij = g.phis[i][j].tensor;
            std::size_t di = cov.single[i].quotient.dim(), dj = cov.single[j].quotient.dim();
            for (std::size_t s = 0; s < di; ++s)
                for (std::size_t u = 0; u < dj; ++u) {
                    Vec cls = tij.pure(unit_vec(di, s), unit_vec(dj, u));
                    std::size_t p = a.offset[i] + s, q = a.offset[j] + u;
                    for (std::size_t c = 0; c < cls.size(); ++c)
                        theta_rule.set(p * ad + q, g.theta_offset[i][j] + c, cls[c]);
                }
        }
    g.theta_fwd = g.tensor_aa.carrier.lift() * theta_rule;

    Matrix theta_inv(f, td, g.tensor_aa.dim());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const BalancedTensor& tij = g.phis[i][j].tensor;
            std::size_t di = cov.single[i].quotient.dim(), dj = cov.single[j].quotient.dim();
            for (std::size_t w = 0; w < tij.dim(); ++w) {
                Vec rep = tij.carrier.lift().row(w);
                Vec out(g.tensor_aa.dim(), f.zero());
                for (std::size_t s = 0; s < di; ++s)
                    for (std::size_t u = 0; u < dj; ++u) {
                        const Scalar& coeff = rep[s * dj + u];
                        if (coeff == 0) continue;
                        Vec cls = g.tensor_aa.pure(a.inject[i].row(s), a.inject[j].row(u));
                        out = vec_add(f, out, vec_scale(f, coeff, cls));
                    }
                theta_inv.set_row(g.theta_offset[i][j] + w, out);
            }
        }
    g.theta_inv = std::move(theta_inv);

    // χ = Φ∘Θ ; Φ is blockwise
    std::size_t cd = 0;
    std::vector<std::vector<std::size_t>> po(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            po[i][j] = cd;
            cd += cov.pair[i][j].quotient.dim();
        }
    Matrix phi_block(f, td, cd), phi_block_inv(f, cd, td);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const PhiData& p = g.phis[i][j];
            for (std::size_t r = 0; r < p.fwd.rows(); ++r)
                for (std::size_t c = 0; c < p.fwd.cols(); ++c)
                    phi_block.set(g.theta_offset[i][j] + r, po[i][j] + c, p.fwd.at(r, c));
            for (std::size_t r = 0; r < p.inv.rows(); ++r)
                for (std::size_t c = 0; c < p.inv.cols(); ++c)
                    phi_block_inv.set(po[i][j] + r, g.theta_offset[i][j] + c, p.inv.at(r, c));
        }
    g.chi_fwd = g.theta_fwd * phi_block;

    // explicit χ⁻¹: (π_ij(b_ij)) ↦ Σ_k (π_i(b_ik)) ⊗ (π_j(δ_jk))
    Matrix chi_inv(f, cd, g.tensor_aa.dim());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t u = 0; u < cov.pair[i][k].quotient.dim(); ++u) {
                Vec b = cov.pair[i][k].lift().row(u);
                Vec left(ad, f.zero());
                Vec img = row_apply(b, cov.single[i].proj());
                for (std::size_t c = 0; c < img.size(); ++c) left[a.offset[i] + c] = img[c];
                Vec right(ad, f.zero());
                const Vec& uk = cov.single[k].quotient.unit();
                for (std::size_t c = 0; c < uk.size(); ++c) right[a.offset[k] + c] = uk[c];
                chi_inv.set_row(po[i][k] + u, g.tensor_aa.pure(left, right));
            }
        }
    g.chi_inv = std::move(chi_inv);
    return g;
}

Verdict sweedler_transport_check(const CoveringCoring& cc, const GluingMaps& glue) {
    const Covering& cov = cc.cov;
    Matrix kappa = kappa_matrix(cov, cc.a);
    SweedlerCoring sw = sweedler_coring(cov.base, cc.a.sum, kappa);
    if (sw.tensor.dim() != glue.tensor_aa.dim())
        return Verdict::fail("Sweedler carrier and A⊗_B A carrier disagree");
    Matrix tens = induced_on_tensor(sw.coring.cc, cc.coring.cc, glue.chi_fwd, glue.chi_fwd);
    if (sw.coring.coproduct * tens != glue.chi_fwd * cc.coring.coproduct)
        return Verdict::fail("χ does not intertwine the coproducts");
    if (glue.chi_fwd * cc.coring.counit != sw.coring.counit)
        return Verdict::fail("χ does not intertwine the counits");
    return Verdict::pass();
}

namespace {

} // namespace

KappaTensorCheck kappa_tensor_isos(const Covering& cov) {
    const Field& f = cov.base.field();
    CoveringCompletion comp = covering_completion(cov);
    const Algebra& a = comp.a.sum;
    const Algebra& b = cov.base;
    const Matrix& emb = comp.bc.basis(); // B_c ⊆ A

    Bimodule b_reg = regular_bimodule(b);
    Bimodule a_ba = pullback_left(regular_bimodule(a), b, comp.kappa);  // (B,A)
    Bimodule a_ab = pullback_right(regular_bimodule(a), b, comp.kappa); // (A,B)
    Bimodule bc_bb = pullback_left(
        pullback_right(regular_bimodule(comp.bc_algebra), b, comp.kappa_to_bc), b,
        comp.kappa_to_bc);

    Matrix id_a = Matrix::identity(f, a.dim());
    std::size_t ad = a.dim(), bcd = comp.bc.dim();
    KappaTensorCheck res;

    {
        QuotientSpace t_ba = balanced_carrier(b_reg, a_ba);   // B ⊗_B A
        QuotientSpace t_bca = balanced_carrier(bc_bb, a_ba);  // B_c ⊗_B A
        Matrix map = induced_map(t_ba, t_bca, comp.kappa_to_bc, id_a);
        res.left_bijective = t_ba.dim() == t_bca.dim() && rank(map) == t_ba.dim();
        // a ↦ 1⊗a, then κ⊗A, then multiplication b⊗a ↦ ba — must be id_A
        Matrix unit_in(f, ad, t_ba.dim());
        for (std::size_t q = 0; q < ad; ++q)
            unit_in.set_row(q, row_apply(kron_vec(f, b.unit(), unit_vec(ad, q)),
                                         t_ba.project()));
        Matrix mult(f, t_bca.dim(), ad);
        for (std::size_t w = 0; w < t_bca.dim(); ++w) {
            Vec rep = t_bca.lift().row(w);
            Vec out(ad, f.zero());
            for (std::size_t p = 0; p < bcd; ++p)
                for (std::size_t q = 0; q < ad; ++q) {
                    const Scalar& c = rep[p * ad + q];
                    if (c == 0) continue;
                    out = vec_add(f, out,
                                  vec_scale(f, c, a.mul(emb.row(p), unit_vec(ad, q))));
                }
            mult.set_row(w, out);
        }
        res.left_split = unit_in * map * mult == id_a;
    }
    {
        QuotientSpace t_ab = balanced_carrier(a_ab, b_reg);   // A ⊗_B B
        QuotientSpace t_abc = balanced_carrier(a_ab, bc_bb);  // A ⊗_B B_c
        Matrix map = induced_map(t_ab, t_abc, id_a, comp.kappa_to_bc);
        res.right_bijective = t_ab.dim() == t_abc.dim() && rank(map) == t_ab.dim();
        Matrix unit_in(f, ad, t_ab.dim());
        for (std::size_t q = 0; q < ad; ++q)
            unit_in.set_row(q, row_apply(kron_vec(f, unit_vec(ad, q), b.unit()),
                                         t_ab.project()));
        Matrix mult(f, t_abc.dim(), ad);
        for (std::size_t w = 0; w < t_abc.dim(); ++w) {
            Vec rep = t_abc.lift().row(w);
            Vec out(ad, f.zero());
            for (std::size_t p = 0; p < ad; ++p)
                for (std::size_t q = 0; q < bcd; ++q) {
                    const Scalar& c = rep[p * bcd + q];
                    if (c == 0) continue;
                    out = vec_add(f, out,
                                  vec_scale(f, c, a.mul(unit_vec(ad, p), emb.row(q))));
                }
            mult.set_row(w, out);
        }
        res.right_split = unit_in * map * mult == id_a;
    }
    return res;
}

Verdict kappa_tensor_check(const Covering& cov) {
    KappaTensorCheck k = kappa_tensor_isos(cov);
    if (!k.left_split) return Verdict::fail("κ⊗_B A is not split by the multiplication map");
    if (!k.right_split) return Verdict::fail("A⊗_B κ is not split by the multiplication map");
    if (is_complete(cov) && !(k.left_bijective && k.right_bijective))
        return Verdict::fail("covering is complete but κ⊗_B A or A⊗_B κ is not bijective");
    return Verdict::pass();
}

Verdict is_projective(const Algebra& b, const std::vector<Matrix>& action) {
    const Field& f = b.field();
    std::size_t n = b.dim();
    if (action.size() != n) throw error("is_projective: one action matrix per basis required");
    std::size_t m = action.empty() ? 0 : action[0].rows();
    if (m == 0) return Verdict::pass(); // zero module

    std::size_t fd = m * n; // free cover B^m, basis f_(u,s)
    // surjection p: f_(u,s) ↦ e_s·m_u
    Matrix p(f, fd, m);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t s = 0; s < n; ++s) p.set_row(u * n + s, action[s].row(u));

    // unknown section σ: S (m × fd); x index = k·fd + t
    std::size_t unknowns = m * fd;
    std::vector<Vec> eq_rows;
    Vec rhs_all;
    // p∘σ = id
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t c = 0; c < m; ++c) {
            Vec row(unknowns, f.zero());
            for (std::size_t t = 0; t < fd; ++t) row[j * fd + t] = p.at(t, c);
            eq_rows.push_back(std::move(row));
            rhs_all.push_back(j == c ? f.one() : f.zero());
        }
    // σ(e_s·m_j) = e_s·σ(m_j)
    for (std::size_t s = 0; s < n; ++s) {
        Matrix lf = kron(Matrix::identity(f, m), b.left_mult(unit_vec(n, s)));
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t c = 0; c < fd; ++c) {
                Vec row(unknowns, f.zero());
                for (std::size_t k = 0; k < m; ++k)
                    row[k * fd + c] = f.add(row[k * fd + c], action[s].at(j, k));
                for (std::size_t t = 0; t < fd; ++t)
                    row[j * fd + t] = f.sub(row[j * fd + t], lf.at(t, c));
                eq_rows.push_back(std::move(row));
                rhs_all.push_back(f.zero());
            }
    }
    Matrix sys = Matrix::from_rows(f, eq_rows, unknowns);
    if (solve(sys, rhs_all)) return Verdict::pass();
    return Verdict::fail("no module-map splitting of the free cover exists");
}

std::vector<Matrix> left_action_on_a(const Covering& cov) {
    std::vector<Algebra> parts;
    for (const auto& q : cov.single) parts.push_back(q.quotient);
    DirectSum a = direct_sum(parts);
    Matrix kappa = kappa_matrix(cov, a);
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < cov.base.dim(); ++i)
        act.push_back(a.sum.left_mult(kappa.row(i)));
    return act;
}

std::vector<Matrix> right_action_on_a(const Covering& cov) {
    std::vector<Algebra> parts;
    for (const auto& q : cov.single) parts.push_back(q.quotient);
    DirectSum a = direct_sum(parts);
    Matrix kappa = kappa_matrix(cov, a);
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < cov.base.dim(); ++i)
        act.push_back(a.sum.right_mult(kappa.row(i)));
    return act;
}

Theorem3Report theorem3_report(const Covering& cov, bool skip_projectivity) {
    Theorem3Report rep;
    const Field& f = cov.base.field();
    rep.dim_b = cov.base.dim();

    CoveringCompletion comp = covering_completion(cov);
    rep.dim_a = comp.a.sum.dim();
    rep.dim_bc = comp.bc.dim();
    rep.complete = rep.dim_bc == rep.dim_b;

    CoveringCoring cc = covering_coring(cov);
    rep.dim_c = cc.coring.carrier.dim;
    rep.coring_axioms_ok = verify_coring(cc.coring).ok;

    rep.four_forms_ok = true;
    for (std::size_t e = 0; e < cc.coring.carrier.dim && rep.four_forms_ok; ++e) {
        Vec el = unit_vec(cc.coring.carrier.dim, e);
        auto forms = coproduct_four_forms(cc, el);
        Vec viaDelta = row_apply(el, cc.coring.coproduct);
        for (const Vec& fm : forms)
            if (fm != viaDelta) rep.four_forms_ok = false;
    }

    GluingMaps glue = gluing_maps(cov);
    rep.phi_dims_ok = true;
    for (std::size_t i = 0; i < cov.count; ++i)
        for (std::size_t j = 0; j < cov.count; ++j) {
            const PhiData& p = glue.phis[i][j];
            std::size_t dij = cov.pair[i][j].quotient.dim();
            bool ok = p.tensor.dim() == dij &&
                      p.fwd * p.inv == Matrix::identity(f, p.tensor.dim()) &&
                      p.inv * p.fwd == Matrix::identity(f, dij);
            if (!ok) rep.phi_dims_ok = false;
        }
    std::size_t taa = glue.tensor_aa.dim();
    rep.chi_bijective = glue.chi_fwd.rows() == taa && glue.chi_fwd.cols() == rep.dim_c &&
                        taa == rep.dim_c && rank(glue.chi_fwd) == taa;
    rep.chi_inverses_ok =
        glue.chi_fwd * glue.chi_inv == Matrix::identity(f, taa) &&
        glue.chi_inv * glue.chi_fwd == Matrix::identity(f, rep.dim_c) &&
        glue.theta_fwd * glue.theta_inv == Matrix::identity(f, taa) &&
        glue.theta_inv * glue.theta_fwd == Matrix::identity(f, glue.theta_inv.rows());
    rep.chi_unit_to_grouplike =
        row_apply(glue.tensor_aa.pure(comp.a.sum.unit(), comp.a.sum.unit()), glue.chi_fwd) ==
        cc.grouplike;
    rep.transport_ok = sweedler_transport_check(cc, glue).ok;

    rep.grouplike_ok = is_grouplike(cc.coring, cc.grouplike).ok;
    CoinvariantAlgebra coin = coinvariants(cc.coring, cc.grouplike);
    rep.coinvariant_dim = coin.algebra.dim();
    rep.coinvariants_equal_kappa_image = Subspace::span(comp.kappa) == coin.space;
    GaloisVerdict gal = galois_verdict(cc.coring, cc.grouplike);
    rep.galois = gal.is_galois;
    rep.can_coring_map = gal.can_coring_map;

    rep.kappa = kappa_tensor_isos(cov);

    if (!skip_projectivity) {
        rep.projective_left = is_projective(cov.base, left_action_on_a(cov)).ok;
        // a right module is a left module over the opposite algebra
        rep.projective_right = is_projective(opposite(cov.base), right_action_on_a(cov)).ok;
    }
    return rep;
}

} // namespace coralg
