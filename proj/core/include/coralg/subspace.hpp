#pragma once

#include "coralg/matrix.hpp"

namespace coralg {

/// Subspace of k^n with a canonical RREF basis, so equality of subspaces
/// is equality of representations.
class Subspace {
  public:
    static Subspace zero(Field f, std::size_t ambient);
    static Subspace full(Field f, std::size_t ambient);
    /// Span of the rows of m.
    static Subspace span(const Matrix& m);

    std::size_t ambient() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const Field& field() const { return basis_.field(); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    /// v with all pivot coordinates of the basis eliminated.
    Vec reduce(const Vec& v) const;
    /// Coordinates of v in the basis, if v lies in the subspace.
    std::optional<Vec> coordinates(const Vec& v) const;

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

  private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
    Matrix basis_; // RREF, no zero rows
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);

/// k^n / killed, with a fixed section. Coordinates on the quotient are the
/// non-pivot coordinates of the reduction modulo the killed subspace, in
/// index order; lift sends them back on those coordinates.
class QuotientSpace {
  public:
    QuotientSpace(std::size_t ambient, Subspace killed);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return project_.cols(); }
    const Subspace& killed() const { return killed_; }
    /// ambient × dim matrix; project(v) = v · project().
    const Matrix& project() const { return project_; }
    /// dim × ambient section; project ∘ lift = id.
    const Matrix& lift() const { return lift_; }

  private:
    std::size_t ambient_;
    Subspace killed_;
    Matrix project_, lift_;
};

} // namespace coralg
