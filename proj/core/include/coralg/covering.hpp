#pragma once

#include <array>
#include <optional>

#include "coralg/coring.hpp"

namespace coralg {

/// A finite family of two-sided ideals of B with zero intersection,
/// together with all single/double/triple quotients and access to the
/// connecting projections between them.
struct Covering {
    Algebra base;
    std::vector<Subspace> ideals;
    std::size_t count = 0;

    std::vector<QuotientAlgebra> single;                          // B_i
    std::vector<std::vector<QuotientAlgebra>> pair;               // B_ij
    std::vector<std::vector<std::vector<QuotientAlgebra>>> triple; // B_ijk

    /// π^i_j : B_i → B_ij
    Matrix conn_single_pair(std::size_t i, std::size_t j) const;
    /// π^{ik}_j : B_ik → B_ijk
    Matrix conn_pair_triple(std::size_t i, std::size_t j, std::size_t k) const;
    /// π^i_{jk} : B_i → B_ijk
    Matrix conn_single_triple(std::size_t i, std::size_t j, std::size_t k) const;
};

/// Checks that every member is a two-sided ideal and that the family has
/// zero intersection; throws with a witness vector otherwise.
Covering validate_covering(const Algebra& b, const std::vector<Subspace>& ideals);

struct CoveringCompletion {
    DirectSum a;         // A = ⊕ B_i
    Subspace bc;         // B_c as a subspace of A
    Algebra bc_algebra;  // induced algebra structure
    Matrix kappa;        // B → A, b ↦ (π_i(b))
    Matrix kappa_to_bc;  // B → B_c in B_c coordinates
};

CoveringCompletion covering_completion(const Covering& cov);

/// dim B = dim B_c; κ is automatically injective, so this decides
/// surjectivity.
bool is_complete(const Covering& cov);

/// The coring of a covering: carrier ⊕_{i,j} B_ij over A = ⊕ B_i,
/// coproduct defined through the triple-intersection module
/// D = ⊕_{i,j,k} B_ijk, counit (b_ij) ↦ (π_i(b_ii)).
struct CoveringCoring {
    Covering cov;
    DirectSum a;
    Coring coring;
    Vec grouplike;                                   // g = (π_ij(1))
    std::vector<std::vector<std::size_t>> pair_offset; // blocks of the carrier
    std::size_t triple_dim = 0;                      // dim D
    Matrix delta_d;                                  // C → D, (a_ij) ↦ (π^{ik}_j(a_ik))
    Matrix nu;                                       // D → carrier of C⊗_A C

    Vec block(const Vec& c, std::size_t i, std::size_t j) const;
};

CoveringCoring covering_coring(const Covering& cov);

/// The four displayed expressions for Δ of one carrier element, evaluated
/// independently; a valid covering coring makes all four agree.
std::array<Vec, 4> coproduct_four_forms(const CoveringCoring& cc, const Vec& element);

/// Φ_ij : B_i ⊗_B B_j → B_ij, a⊗a' ↦ π^i_j(a)π^j_i(a'), with the explicit
/// inverse π_ij(b) ↦ π_i(1)⊗π_j(b).
struct PhiData {
    BalancedTensor tensor; // B_i ⊗_B B_j
    Matrix fwd;
    Matrix inv;
};

PhiData phi(const Covering& cov, std::size_t i, std::size_t j);

/// Θ: A⊗_B A → ⊕_{i,j} B_i⊗_B B_j and χ = Φ∘Θ : A⊗_B A → C, with the
/// explicit inverses.
struct GluingMaps {
    BalancedTensor tensor_aa; // A ⊗_B A
    std::vector<std::vector<PhiData>> phis;
    std::vector<std::vector<std::size_t>> theta_offset;
    Matrix theta_fwd;
    Matrix theta_inv;
    Matrix chi_fwd;
    Matrix chi_inv;
};

GluingMaps gluing_maps(const Covering& cov);

/// χ transports the Sweedler coring of ι: B→A onto the covering coring:
/// (χ⊗χ)∘Δ_{A⊗A} = Δ_C∘χ and ε_C∘χ = ε_{A⊗A}.
Verdict sweedler_transport_check(const CoveringCoring& cc, const GluingMaps& glue);

/// κ⊗_B id_A : B⊗_B A → B_c⊗_B A and id_A⊗_B κ. The multiplication map
/// B_c⊗_B A → A retracts κ⊗A onto the identity of A on every covering,
/// so κ⊗A is always a split injection; it is bijective exactly when the
/// retraction is injective, which completeness guarantees.
struct KappaTensorCheck {
    bool left_split = false;
    bool right_split = false;
    bool left_bijective = false;
    bool right_bijective = false;
};

KappaTensorCheck kappa_tensor_isos(const Covering& cov);

/// Passes when both factorizations of id_A hold and, for a complete
/// covering, both maps are bijective.
Verdict kappa_tensor_check(const Covering& cov);

/// Left module given by action matrices over b; decides existence of a
/// module-map splitting of the free cover on a basis of the module.
Verdict is_projective(const Algebra& b, const std::vector<Matrix>& action);

/// A as a left (resp. right) B-module along ι = κ.
std::vector<Matrix> left_action_on_a(const Covering& cov);
std::vector<Matrix> right_action_on_a(const Covering& cov);

struct Theorem3Report {
    std::size_t dim_b = 0, dim_a = 0, dim_c = 0, dim_bc = 0;
    bool complete = false;
    bool coring_axioms_ok = false;
    bool four_forms_ok = false;
    bool phi_dims_ok = false;
    bool chi_bijective = false;
    bool chi_inverses_ok = false;
    bool chi_unit_to_grouplike = false;
    bool transport_ok = false;
    bool grouplike_ok = false;
    std::size_t coinvariant_dim = 0;
    bool coinvariants_equal_kappa_image = false;
    bool galois = false;
    bool can_coring_map = false;
    KappaTensorCheck kappa;
    std::optional<bool> projective_left;
    std::optional<bool> projective_right;
};

Theorem3Report theorem3_report(const Covering& cov, bool skip_projectivity = false);

} // namespace coralg
