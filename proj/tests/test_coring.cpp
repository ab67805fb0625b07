#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coralg/coring.hpp"
#include "coralg/fixtures.hpp"

using namespace coralg;

namespace {

SweedlerCoring fn3_sweedler() {
    // B = functions on {1,2,3}, A = B_1 ⊕ B_2 for the cover {1,2},{2,3},
    // ι = κ: b ↦ (π_1(b), π_2(b))
    Field q = Field::rationals();
    Algebra b = Algebra::functions(q, 3);
    QuotientAlgebra b1 = quotient_algebra(b, vanishing_ideal(b, {0, 1}));
    QuotientAlgebra b2 = quotient_algebra(b, vanishing_ideal(b, {1, 2}));
    DirectSum a = direct_sum({b1.quotient, b2.quotient});
    Matrix kappa = b1.proj() * a.inject[0] + b2.proj() * a.inject[1];
    return sweedler_coring(b, a.sum, kappa);
}

} // namespace

TEST_CASE("Sweedler coring of a trivial extension") {
    // B = A = k^2: A⊗_A A ≅ A, Δ and ε are the canonical identifications
    Field q = Field::rationals();
    Algebra a = Algebra::functions(q, 2);
    SweedlerCoring sw = sweedler_coring(a, a, Matrix::identity(q, 2));
    CHECK(sw.coring.carrier.dim == 2);
    CHECK(verify_coring(sw.coring).ok);
    Vec g = sw.tensor.pure(a.unit(), a.unit());
    CHECK(is_grouplike(sw.coring, g).ok);
    CHECK(coinvariants(sw.coring, g).algebra.dim() == 2);
}

TEST_CASE("Sweedler coring over the function-algebra cover") {
    SweedlerCoring sw = fn3_sweedler();
    CHECK(sw.coring.carrier.dim == 6); // dim A⊗_B A
    CHECK(verify_coring(sw.coring).ok);

    Vec g = sw.tensor.pure(sw.coring.base.unit(), sw.coring.base.unit());
    CHECK(is_grouplike(sw.coring, g).ok);

    // coinvariants of 1⊗1 recover κ(B) ≅ B, dimension 3
    CoinvariantAlgebra coin = coinvariants(sw.coring, g);
    CHECK(coin.algebra.dim() == 3);
    CHECK(coin.algebra.validate().ok);

    GaloisVerdict v = galois_verdict(sw.coring, g);
    CHECK(v.is_galois);
    CHECK(v.can_bijective);
    CHECK(v.can_coring_map);
}

TEST_CASE("grouplike rejects non-grouplike elements") {
    SweedlerCoring sw = fn3_sweedler();
    Vec g = sw.tensor.pure(sw.coring.base.unit(), sw.coring.base.unit());
    Vec twice = vec_scale(sw.coring.base.field(), Scalar(2), g);
    CHECK(!is_grouplike(sw.coring, twice).ok);
    CHECK_THROWS_AS((void)coinvariants(sw.coring, twice), error);
}

TEST_CASE("perturbed coproduct fails the axioms") {
    SweedlerCoring sw = fn3_sweedler();
    Coring broken = sw.coring;
    // scale one row of Δ: counit laws break
    Vec row = broken.coproduct.row(0);
    broken.coproduct.set_row(0, vec_scale(broken.base.field(), Scalar(2), row));
    CHECK(!verify_coring(broken).ok);
}

TEST_CASE("perturbed counit fails the axioms") {
    SweedlerCoring sw = fn3_sweedler();
    Coring broken = sw.coring;
    Matrix eps = broken.counit;
    eps.set(0, 0, eps.at(0, 0) + 1);
    broken.counit = eps;
    CHECK(!verify_coring(broken).ok);
}

TEST_CASE("Sweedler coring rejects non-morphisms") {
    Field q = Field::rationals();
    Algebra b = Algebra::functions(q, 2);
    Algebra a = Algebra::functions(q, 3);
    Matrix not_unital(q, 2, 3); // zero map
    CHECK_THROWS_AS((void)sweedler_coring(b, a, not_unital), error);
}

TEST_CASE("coinvariants over the incomplete nil covering have dimension 4") {
    // the covering coring of the nil fixture via its Sweedler presentation
    FixtureDocument doc = build_nil3_fixture();
    Covering cov = doc.covering();
    CoveringCoring cc = covering_coring(cov);
    CHECK(verify_coring(cc.coring).ok);
    CHECK(is_grouplike(cc.coring, cc.grouplike).ok);
    CoinvariantAlgebra coin = coinvariants(cc.coring, cc.grouplike);
    CHECK(coin.algebra.dim() == 4); // strictly larger than dim B = 3
}
