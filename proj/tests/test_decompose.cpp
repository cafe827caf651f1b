#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bs/decompose.hpp"
#include "helpers.hpp"

using namespace bs;
using namespace bs::testing;

TEST_CASE("decomposition identity of B11") {
    BettiDecomposition dec = decompose_betti(make_bx(11));
    REQUIRE(dec.parts.size() == 3);
    CHECK(dec.parts[0].coeff == Rational(11, 90));
    CHECK(dec.parts[0].skeleton == DegreeSequence{0, 2, 3, 4, 6, 8});
    CHECK(dec.parts[1].coeff == Rational(1, 45));
    CHECK(dec.parts[1].skeleton == DegreeSequence{0, 2, 3, 5, 6, 8});
    CHECK(dec.parts[2].coeff == Rational(11, 90));
    CHECK(dec.parts[2].skeleton == DegreeSequence{0, 2, 4, 5, 6, 8});
    CHECK(verify_betti_decomposition(make_bx(11), dec));
}

TEST_CASE("B12 is outside the cone") {
    CHECK_THROWS_AS(decompose_betti(make_bx(12)), NotInCone);
    BettiConeResult r = is_in_cone(make_bx(12));
    CHECK_FALSE(r.in_cone);
    CHECK_FALSE(r.evidence.empty());
    CHECK_FALSE(r.certificate.has_value());
}

TEST_CASE("boundary members of the family") {
    for (long x : {0L, 9L, 11L}) {
        BettiConeResult r = is_in_cone(make_bx(x));
        CHECK(r.in_cone);
        REQUIRE(r.certificate.has_value());
        CHECK(verify_betti_decomposition(make_bx(x), *r.certificate));
    }
    // B0 itself is pure: one part, coefficient 1/gcd-scaled.
    BettiDecomposition dec = decompose_betti(make_bx(0));
    REQUIRE(dec.parts.size() == 1);
    CHECK(dec.parts[0].skeleton == DegreeSequence{0, 2, 3, 5, 6, 8});
    CHECK(dec.parts[0].coeff == 1); // B0 is already primitive
}

TEST_CASE("zeroed cells are tracked per step") {
    BettiDecomposition dec = decompose_betti(make_bx(11));
    // The first step must zero at least one cell, and every input cell is
    // eventually zeroed exactly once.
    size_t total = 0;
    for (const auto& p : dec.parts) {
        CHECK_FALSE(p.zeroed.empty());
        total += p.zeroed.size();
    }
    CHECK(total >= make_bx(11).nnz());
}

TEST_CASE("negative or invalid tables fail NotInCone") {
    BettiTable neg = make_betti(3, {{0, 0, 1}, {1, 2, 3}});
    neg.add(1, 1, Rational(-1, 7));
    CHECK_THROWS_AS(decompose_betti(neg), NotInCone);
    BettiTable gap = make_betti(3, {{0, 0, 1}, {2, 4, 3}});
    CHECK_THROWS_AS(decompose_betti(gap), NotInCone);
}

TEST_CASE("betti round-trip on randomized cone points") {
    Rng rng(61803398);
    for (int t = 0; t < 60; ++t) {
        BettiConePoint p = random_betti_cone_point(rng, 6, 5);
        BettiDecomposition dec = decompose_betti(p.table);
        REQUIRE(dec.parts.size() == p.coeffs.size());
        for (size_t k = 0; k < p.coeffs.size(); ++k) {
            CHECK(dec.parts[k].coeff == p.coeffs[k]);
            CHECK(dec.parts[k].skeleton == p.skeletons[k]);
        }
        CHECK(verify_betti_decomposition(p.table, dec));
    }
}

TEST_CASE("cohomology decomposition of a single supernatural table") {
    CohomologyTable c = supernatural_table({3, -1, -4}, Rational(3), -7, 5);
    CohomologyDecomposition dec = decompose_cohomology(c);
    REQUIRE(dec.parts.size() == 1);
    CHECK(dec.parts[0].skeleton == RootSequence{3, -1, -4});
    CHECK(rank_gcd_bound({3, -1, -4}) == 3);
    CHECK(dec.parts[0].coeff == 1);
    CHECK(verify_cohomology_decomposition(c, dec));
}

TEST_CASE("cohomology round-trip on randomized cone points") {
    Rng rng(16180339);
    for (int t = 0; t < 40; ++t) {
        CohomologyConePoint p = random_cohomology_cone_point(rng, 5, 4);
        CohomologyDecomposition dec = decompose_cohomology(p.table);
        REQUIRE(dec.parts.size() == p.coeffs.size());
        for (size_t k = 0; k < p.coeffs.size(); ++k) {
            CHECK(dec.parts[k].coeff == p.coeffs[k]);
            CHECK(dec.parts[k].skeleton == p.skeletons[k]);
        }
        CHECK(verify_cohomology_decomposition(p.table, dec));
    }
}

TEST_CASE("cohomology decomposition failure modes") {
    CohomologyTable c = supernatural_table({2, -2}, Rational(1), -4, 4);
    c.complete = false;
    CHECK_THROWS_AS(decompose_cohomology(c), IncompleteTable);

    // Perturbing one staircase value off the cone fails.
    CohomologyTable bad = supernatural_table({2, -2}, Rational(1), -4, 4);
    bad.add(0, 4, Rational(1, 3));
    CohomologyConeResult r = is_in_cone(bad);
    CHECK_FALSE(r.in_cone);
    CHECK_FALSE(r.evidence.empty());

    // A perturbation that is itself supernatural-decomposable stays inside.
    CohomologyTable sum = add_scaled(
        supernatural_table({2, -2}, Rational(2), -4, 4), Rational(1, 3),
        supernatural_table({1, -3}, Rational(2), -4, 4));
    CHECK(is_in_cone(sum).in_cone);
}

TEST_CASE("verify rejects broken certificates") {
    BettiDecomposition dec = decompose_betti(make_bx(11));
    dec.parts[1].coeff += 1;
    CHECK_FALSE(verify_betti_decomposition(make_bx(11), dec));
    BettiDecomposition dec2 = decompose_betti(make_bx(11));
    std::swap(dec2.parts[0], dec2.parts[2]); // breaks the chain order
    CHECK_FALSE(verify_betti_decomposition(make_bx(11), dec2));
}
