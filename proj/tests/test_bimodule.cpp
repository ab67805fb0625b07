#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coralg/bimodule.hpp"

using namespace coralg;

namespace {

struct Fn3 {
    Algebra b;
    Subspace j1, j2;
    QuotientAlgebra b1, b2;

    Fn3()
        : b(Algebra::functions(Field::rationals(), 3)),
          j1(vanishing_ideal(b, {0, 1})),
          j2(vanishing_ideal(b, {1, 2})),
          b1(quotient_algebra(b, j1)),
          b2(quotient_algebra(b, j2)) {}

    // B_i as a (B,B)-bimodule
    Bimodule mod1() const { return quotient_bimodule(b, b1); }
    Bimodule mod2() const { return quotient_bimodule(b, b2); }
};

} // namespace

TEST_CASE("regular bimodule validates") {
    Field q = Field::rationals();
    CHECK(regular_bimodule(Algebra::matrix_algebra(q, 2)).validate().ok);
    CHECK(regular_bimodule(Algebra::functions(q, 3)).validate().ok);
}

TEST_CASE("quotient bimodules validate") {
    Fn3 f;
    CHECK(f.mod1().validate().ok);
    CHECK(f.mod2().validate().ok);
}

TEST_CASE("tensor over the base algebra collapses to the double quotient") {
    Fn3 f;
    BalancedTensor t = balanced_tensor(f.mod1(), f.mod2());
    CHECK(t.dim() == 1); // B_1 ⊗_B B_2 ≅ B/(J_1+J_2), one point overlap
    CHECK(t.outer.validate().ok);
    // class(π_1(e2) ⊗ π_2(e2)) is nonzero, class(π_1(e1) ⊗ π_2(e3)) is zero
    Vec p1e2 = row_apply(unit_vec(3, 1), f.b1.proj());
    Vec p2e2 = row_apply(unit_vec(3, 1), f.b2.proj());
    CHECK(!vec_is_zero(f.b.field(), t.pure(p1e2, p2e2)));
    Vec p1e1 = row_apply(unit_vec(3, 0), f.b1.proj());
    Vec p2e3 = row_apply(unit_vec(3, 2), f.b2.proj());
    CHECK(vec_is_zero(f.b.field(), t.pure(p1e1, p2e3)));
}

TEST_CASE("balancing relation holds in the quotient") {
    Fn3 f;
    BalancedTensor t = balanced_tensor(f.mod1(), f.mod2());
    Bimodule m1 = f.mod1(), m2 = f.mod2();
    for (std::size_t r = 0; r < 3; ++r) {
        Vec er = unit_vec(3, r);
        for (std::size_t a = 0; a < m1.dim; ++a)
            for (std::size_t c = 0; c < m2.dim; ++c) {
                Vec left = t.pure(m1.rapply(unit_vec(m1.dim, a), er), unit_vec(m2.dim, c));
                Vec right = t.pure(unit_vec(m1.dim, a), m2.lapply(er, unit_vec(m2.dim, c)));
                CHECK(left == right);
            }
    }
}

TEST_CASE("tensor with the regular bimodule is the identity functor") {
    Field q = Field::rationals();
    Algebra m2 = Algebra::matrix_algebra(q, 2);
    Bimodule reg = regular_bimodule(m2);
    BalancedTensor t = balanced_tensor(reg, reg); // A ⊗_A A ≅ A
    CHECK(t.dim() == m2.dim());
}

TEST_CASE("A tensor_B A over the function-algebra covering has dimension 6") {
    Fn3 f;
    DirectSum a = direct_sum({f.b1.quotient, f.b2.quotient});
    Matrix kappa = f.b1.proj() * a.inject[0] + f.b2.proj() * a.inject[1];
    Bimodule a_ba = pullback_left(regular_bimodule(a.sum), f.b, kappa);
    Bimodule a_ab = pullback_right(regular_bimodule(a.sum), f.b, kappa);
    BalancedTensor t = balanced_tensor(a_ab, a_ba);
    CHECK(t.dim() == 6);

    // the triple product A⊗_B A⊗_B A
    TripleTensor t3 = triple_tensor(a_ab, pullback_left(a_ab, f.b, kappa), a_ba);
    CHECK(t3.left_nested.dim() == 10);
    CHECK(t3.right_nested.dim() == 10);
    Matrix idl = Matrix::identity(f.b.field(), t3.left_nested.dim());
    CHECK(t3.left_to_right * t3.right_to_left == idl);
    CHECK(t3.right_to_left * t3.left_to_right ==
          Matrix::identity(f.b.field(), t3.right_nested.dim()));
}

TEST_CASE("induced maps must respect the balancing relations") {
    Fn3 f;
    Bimodule m1 = f.mod1(), m2 = f.mod2();
    BalancedTensor t = balanced_tensor(m1, m2);
    Matrix id1 = Matrix::identity(f.b.field(), m1.dim);
    Matrix id2 = Matrix::identity(f.b.field(), m2.dim);
    CHECK(induced_on_tensor(t, t, id1, id2) == Matrix::identity(f.b.field(), t.dim()));
    // swapping the two coordinates of B_1 is not right B-linear
    Matrix swap(f.b.field(), 2, 2);
    swap.set(0, 1, 1);
    swap.set(1, 0, 1);
    CHECK_THROWS_AS((void)induced_on_tensor(t, t, swap, id2), error);
}

TEST_CASE("bimodule morphism check") {
    Fn3 f;
    Bimodule m1 = f.mod1();
    Matrix id(f.b.field(), m1.dim, m1.dim);
    for (std::size_t i = 0; i < m1.dim; ++i) id.set(i, i, 1);
    CHECK(BimoduleMorphism{id}.check(m1, m1).ok);
    Matrix skew(f.b.field(), m1.dim, m1.dim);
    skew.set(0, 1, 1);
    CHECK(!BimoduleMorphism{skew}.check(m1, m1).ok);
}
