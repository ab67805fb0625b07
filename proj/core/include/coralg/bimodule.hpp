#pragma once

#include "coralg/algebra.hpp"

namespace coralg {

/// (L,R)-bimodule given by one action matrix per algebra basis element.
/// e_i·v = v·lact[i] and v·e_j = v·ract[j] for row vectors v.
struct Bimodule {
    Algebra left;
    Algebra right;
    std::size_t dim;
    std::vector<Matrix> lact;
    std::vector<Matrix> ract;

    Vec lapply(const Vec& a, const Vec& v) const;
    Vec rapply(const Vec& v, const Vec& a) const;
    /// Unital representations on both sides and commuting actions.
    Verdict validate() const;
};

/// A as an (A,A)-bimodule via multiplication.
Bimodule regular_bimodule(const Algebra& a);

/// Restrict the left action along f: L2 → m.left.
Bimodule pullback_left(const Bimodule& m, const Algebra& l2, const Matrix& f);
Bimodule pullback_right(const Bimodule& m, const Algebra& r2, const Matrix& f);

/// B/J as a (B,B)-bimodule through the projection.
Bimodule quotient_bimodule(const Algebra& b, const QuotientAlgebra& q);

/// Map between bimodules over the same pair; intertwines both actions.
struct BimoduleMorphism {
    Matrix map;
    Verdict check(const Bimodule& source, const Bimodule& target) const;
};

/// M ⊗_R N: the quotient of M⊗N by span{m·r⊗n − m⊗r·n}. The carrier
/// gives canonical coordinates; `outer` is the induced (M.left, N.right)
/// bimodule on the carrier.
struct BalancedTensor {
    Bimodule factor_m;
    Bimodule factor_n;
    QuotientSpace carrier;
    Bimodule outer;

    std::size_t dim() const { return carrier.dim(); }
    /// class(u ⊗ v)
    Vec pure(const Vec& u, const Vec& v) const;
};

BalancedTensor balanced_tensor(const Bimodule& m, const Bimodule& n);

/// Carrier of M⊗_R N only, without the induced outer actions; much cheaper
/// when the bimodule structure on the tensor is not needed.
QuotientSpace balanced_carrier(const Bimodule& m, const Bimodule& n);

/// The map f⊗g between balanced carriers; see induced_on_tensor.
Matrix induced_map(const QuotientSpace& from, const QuotientSpace& to, const Matrix& f,
                   const Matrix& g, bool check_well_defined = true);

/// The map f⊗g on balanced carriers, for f: from.M → to.M right-linear and
/// g: from.N → to.N left-linear over the (common) middle algebra. Checks
/// that the relation span is preserved and returns an error verdict via
/// exception otherwise.
Matrix induced_on_tensor(const BalancedTensor& from, const BalancedTensor& to, const Matrix& f,
                         const Matrix& g, bool check_well_defined = true);

/// Canonical associativity data for M ⊗ N ⊗ P (middle algebras as carried
/// by the factors): both nestings plus the mutually inverse re-association
/// isomorphisms between them.
struct TripleTensor {
    BalancedTensor inner_mn;     // M⊗N
    BalancedTensor left_nested;  // (M⊗N)⊗P — the canonical carrier
    BalancedTensor inner_np;     // N⊗P
    BalancedTensor right_nested; // M⊗(N⊗P)
    Matrix right_to_left;        // class(m⊗class(n⊗p)) ↦ class(class(m⊗n)⊗p)
    Matrix left_to_right;
};

TripleTensor triple_tensor(const Bimodule& m, const Bimodule& n, const Bimodule& p);

} // namespace coralg
