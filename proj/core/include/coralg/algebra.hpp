#pragma once

#include <string>
#include <vector>

#include "coralg/subspace.hpp"

namespace coralg {

/// Finite-dimensional associative unital algebra given by structure
/// constants. Elements are row coordinate vectors in the chosen basis.
/// Zero-dimensional algebras are legal (empty unit, all maps zero).
class Algebra {
  public:
    Algebra(Field f, std::size_t dim, Matrix table, Vec unit,
            std::vector<std::string> labels = {});

    static Algebra ground_field(Field f);
    /// k^X with pointwise product.
    static Algebra functions(Field f, std::size_t point_count);
    /// Full n×n matrix algebra, basis E_{ij} in row-major order.
    static Algebra matrix_algebra(Field f, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    /// (dim·dim) × dim table; row i·dim+j holds the coordinates of e_i·e_j.
    const Matrix& table() const { return table_; }
    const Vec& unit() const { return unit_; }
    const std::vector<std::string>& labels() const { return labels_; }

    Vec mul(const Vec& x, const Vec& y) const;
    /// Matrix of v ↦ x·v (apply as v·left_mult(x)).
    Matrix left_mult(const Vec& x) const;
    Matrix right_mult(const Vec& x) const;

    /// Associativity on all basis triples and both unit laws.
    Verdict validate() const;

    bool operator==(const Algebra& o) const;
    bool operator!=(const Algebra& o) const { return !(*this == o); }

  private:
    Field field_;
    std::size_t dim_;
    Matrix table_;
    Vec unit_;
    std::vector<std::string> labels_;
};

/// Subspace of an algebra closed under multiplication on both sides.
bool is_two_sided_ideal(const Algebra& a, const Subspace& s);

/// Smallest two-sided ideal containing the generators: the span is
/// saturated by multiplying on both sides by all basis elements until
/// it stabilizes.
Subspace ideal_closure(const Algebra& a, const std::vector<Vec>& generators);

Subspace sum_ideals(const Algebra& a, const std::vector<Subspace>& ideals);
Subspace intersect_ideals(const Algebra& a, const std::vector<Subspace>& ideals);

/// B/J with the induced product and the canonical surjection.
struct QuotientAlgebra {
    Algebra quotient;    // the factor algebra
    QuotientSpace space; // carries project (= matrix of π) and the section
    const Matrix& proj() const { return space.project(); }
    const Matrix& lift() const { return space.lift(); }
};

QuotientAlgebra quotient_algebra(const Algebra& b, const Subspace& ideal);

/// Linear map between algebras, checked to be unital and multiplicative.
struct AlgebraMorphism {
    Matrix map; // source dim × target dim, applied as v·map
    Verdict check(const Algebra& source, const Algebra& target) const;
};

/// The unique map B/J_S → B/J_T with π_T = (map)∘π_S; requires J_S ⊆ J_T.
Matrix connecting_projection(const QuotientAlgebra& source, const QuotientAlgebra& target);

struct DirectSum {
    Algebra sum;
    std::vector<Matrix> inject; // component dim × sum dim
    std::vector<Matrix> project; // sum dim × component dim
    std::vector<std::size_t> offset;
};

DirectSum direct_sum(const std::vector<Algebra>& parts);

/// Same space with reversed multiplication; right modules over A are left
/// modules over opposite(A).
Algebra opposite(const Algebra& a);

/// {f : f|_U = 0} in k^X: the span of indicator functions of points
/// outside U, so that B/J_U is the algebra of functions on U and the
/// projection is restriction. U must be a nonempty subset of the points.
Subspace vanishing_ideal(const Algebra& functions_on_x, const std::vector<std::size_t>& u);

} // namespace coralg
