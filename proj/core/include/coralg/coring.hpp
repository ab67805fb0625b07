#pragma once

#include "coralg/bimodule.hpp"

namespace coralg {

/// A-coring: an (A,A)-bimodule C with coproduct Δ: C → C⊗_A C and counit
/// ε: C → A, both A-bilinear, Δ coassociative and counital.
struct Coring {
    Algebra base;       // A
    Bimodule carrier;   // C over (A,A)
    BalancedTensor cc;  // C ⊗_A C
    Matrix coproduct;   // dim C × cc.dim()
    Matrix counit;      // dim C × dim A
};

/// Checks A-bilinearity of Δ and ε, both counit laws and coassociativity
/// (after re-association to the left-nested canonical carrier).
Verdict verify_coring(const Coring& c);

struct SweedlerCoring {
    Coring coring;
    BalancedTensor tensor; // A⊗_B A with its carrier coordinates
};

/// The canonical coring A⊗_B A of an extension ι: B → A, with
/// Δ(a⊗a') = (a⊗1) ⊗_A (1⊗a') and ε(a⊗a') = a·a'.
SweedlerCoring sweedler_coring(const Algebra& b, const Algebra& a, const Matrix& iota);

/// Δ(g) = class(g⊗g) and ε(g) = 1.
Verdict is_grouplike(const Coring& c, const Vec& g);

struct CoinvariantAlgebra {
    Algebra algebra;   // induced structure on the coinvariants
    Subspace space;    // subspace of A
    Matrix inclusion;  // algebra dim × dim A
};

/// {b ∈ A : b·g = g·b} with its induced algebra structure.
CoinvariantAlgebra coinvariants(const Coring& c, const Vec& g);

struct GaloisVerdict {
    bool is_galois = false;
    bool can_bijective = false;
    bool can_coring_map = false;
    std::size_t coinvariant_dim = 0;
    Matrix can;        // carrier of A⊗_{B'}A → C
    std::string detail;
};

/// Builds B' = g-coinvariants, the Sweedler coring A⊗_{B'}A and the
/// canonical map a⊗a' ↦ a·g·a'; Galois iff that map is bijective. The
/// verdict also certifies that the map intertwines coproducts and counits.
GaloisVerdict galois_verdict(const Coring& c, const Vec& g);

} // namespace coralg
