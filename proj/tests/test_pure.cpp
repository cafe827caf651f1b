#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bs/pure.hpp"
#include "helpers.hpp"

using namespace bs;
using namespace bs::testing;

TEST_CASE("primitive pure tables of the motivating example") {
    BettiTable bp = hk_pure_table({0, 2, 3, 4, 6, 8}, 5);
    std::vector<long> expect_bp{5, 60, 128, 90, 20, 3};
    DegreeSequence d1{0, 2, 3, 4, 6, 8};
    for (size_t i = 0; i < d1.size(); ++i) CHECK(bp.get((int)i, d1[i]) == expect_bp[i]);
    CHECK(bp.nnz() == 6);

    BettiTable b0 = hk_pure_table({0, 2, 3, 5, 6, 8}, 7);
    std::vector<long> expect_b0{1, 10, 16, 16, 10, 1};
    DegreeSequence d2{0, 2, 3, 5, 6, 8};
    for (size_t i = 0; i < d2.size(); ++i) CHECK(b0.get((int)i, d2[i]) == expect_b0[i]);

    // The dual sequence gives the mirrored table.
    BettiTable bpp = hk_pure_table({0, 2, 4, 5, 6, 8}, 5);
    std::vector<long> expect_bpp{3, 20, 90, 128, 60, 5};
    DegreeSequence d3{0, 2, 4, 5, 6, 8};
    for (size_t i = 0; i < d3.size(); ++i) CHECK(bpp.get((int)i, d3[i]) == expect_bpp[i]);
}

TEST_CASE("hk_pure_table validation") {
    CHECK_THROWS_AS(hk_pure_table({0, 0, 1}, 3), NotStrictlyIncreasing);
    CHECK_THROWS_AS(hk_pure_table({0, 1, 2, 3}, 2), IncompatibleShapes);
    CHECK_THROWS_AS(hk_pure_table({}, 2), IncompatibleShapes);
}

TEST_CASE("pure tables are primitive") {
    BettiTable t = hk_pure_table({-3, 0, 1, 4}, 5);
    Int g = 0;
    for (const auto& [pos, val] : t.entries) {
        CHECK(is_integer(val));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), val.get_num().get_mpz_t());
    }
    CHECK(g == 1);
}

TEST_CASE("construction generator counts") {
    CHECK(construction_generators({0, 2, 3, 4, 6, 8}) == 35);
    CHECK(construction_generators({0, 2, 3, 5, 6, 8}) == 28);
    CHECK_THROWS_AS(construction_generators({4}), IncompatibleShapes);
}

TEST_CASE("HK moment vanishing") {
    CHECK(hk_moments_check(make_bx(0), 5));
    CHECK(hk_moments_check(make_bx(11), 5));
    CHECK(hk_moments_check(hk_pure_table({0, 2, 3, 4, 6, 8}, 5), 5));
    CHECK_FALSE(hk_moments_check(make_betti(2, {{0, 0, 1}, {1, 1, 1}}), 2));
}

TEST_CASE("multiplicity") {
    CHECK(multiplicity(make_bx(0), 5) == 12);
    CHECK(multiplicity(hk_pure_table({0, 2, 3, 4, 6, 8}, 5), 5) == 48);
    CHECK(multiplicity(make_bx(9), 5) == 12);
    CHECK_THROWS_AS(multiplicity(make_betti(2, {{0, 0, 1}, {1, 1, 1}}), 2), MomentsNonzero);
}

TEST_CASE("multiplicity of a pure table equals the degree product over c!") {
    DegreeSequence d{0, 1, 3, 4};
    BettiTable t = hk_pure_table(d, 3);
    Rational expect = Rational(1 * 3 * 4) / Rational(6) * t.get(0, 0);
    CHECK(multiplicity(t, 3) == expect);
}
