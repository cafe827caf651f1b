#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bs/exact.hpp"
#include "bs/poly.hpp"
#include "bs/rational.hpp"

using namespace bs;

TEST_CASE("rational parse and format") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-6/8") == Rational(-3, 4));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational("0") == 0);
    CHECK(format_rational(Rational(22, 4)) == "11/2");
    CHECK(format_rational(Rational(-7)) == "-7");
    CHECK(format_rational(parse_rational("1000000000000000000000/3")) ==
          "1000000000000000000000/3");
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/2"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("primitive scale factor") {
    std::vector<Rational> v{Rational(3, 2), Rational(-9, 4), Rational(6)};
    Rational s = primitive_scale_factor(v);
    CHECK(s == Rational(4, 3));
    CHECK(v[0] * s == 2);
    CHECK(v[1] * s == -3);
    CHECK(v[2] * s == 8);
    std::vector<Rational> w{Rational(5), Rational(-10)};
    CHECK(primitive_scale_factor(w) == Rational(1, 5));
}

TEST_CASE("binomial, generalized") {
    CHECK(binomial(Int(5), 2) == 10);
    CHECK(binomial(Int(0), 0) == 1);
    CHECK(binomial(Int(3), 5) == 0);
    CHECK(binomial(Int(-2), 3) == -4);
    CHECK(binomial(Int(-1), 4) == 1);
}

TEST_CASE("binomial_poly") {
    Poly p = binomial_poly(2, 2); // binom(d+2, 2)
    CHECK(p.at(0) == 1);
    CHECK(p.at(1) == 3);
    CHECK(p.at(-2) == 0);
    CHECK(p.degree() == 2);
    CHECK(binomial_poly(0, 0) == Poly::constant(Rational(1)));
}

TEST_CASE("poly basics") {
    Poly p{Rational(-6), Rational(1), Rational(1)}; // d^2 + d - 6
    CHECK(p.at(2) == 0);
    CHECK(p.at(-3) == 0);
    CHECK(p.degree() == 2);
    CHECK(p.derivative() == Poly{Rational(1), Rational(2)});
    CHECK(p.reflected().at(3) == p.at(-3));
    CHECK((p - p).is_zero());
    CHECK(Poly().degree() == -1);
    CHECK_THROWS_AS(Poly().lead(), ZeroPolynomial);

    Poly r = Poly::from_int_roots({3, -1, -4});
    CHECK(r.at(3) == 0);
    CHECK(r.at(-1) == 0);
    CHECK(r.at(-4) == 0);
    CHECK(r.lead() == 1);
    CHECK(r.at(0) == -12); // (0-3)(0+1)(0+4)
}

TEST_CASE("from_int_roots sign convention") {
    Poly r = Poly::from_int_roots({1});
    CHECK(r.at(0) == -1);
    CHECK(r.at(2) == 1);
}

TEST_CASE("interpolation") {
    std::vector<std::pair<Rational, Rational>> pts{
        {Rational(0), Rational(1)}, {Rational(1), Rational(2)}, {Rational(2), Rational(5)}};
    Poly p = Poly::interpolate(pts);
    CHECK(p == Poly{Rational(1), Rational(0), Rational(1)}); // d^2 + 1
    CHECK(p.at(3) == 10);
}

TEST_CASE("integer value gcd") {
    // t(t-2)(t+2): values 0, -3, 0, 15, 48, ... gcd 3.
    CHECK(integer_value_gcd(Poly::from_int_roots({2, 0, -2})) == 3);
    // (t-1)t: consecutive product, always even; gcd 2.
    CHECK(integer_value_gcd(Poly::from_int_roots({1, 0})) == 2);
    // Constant.
    CHECK(integer_value_gcd(Poly::constant(Rational(6))) == 6);
    CHECK_THROWS_AS(integer_value_gcd(Poly{Rational(1, 2), Rational(1)}),
                    HypothesisViolated);
}

TEST_CASE("sign stable bound") {
    Poly p{Rational(100), Rational(-30), Rational(1)}; // d^2 - 30d + 100
    long b = sign_stable_bound(p);
    for (long d = b + 1; d <= b + 50; ++d) CHECK(p.at(d) > 0);
    for (long d = -b - 50; d < -b; ++d) CHECK(p.at(d) > 0);
}

TEST_CASE("tail ratio infimum") {
    // f/g -> 1/2 from above: f = d^2 + 10d, g = 2d^2; min at limit, not attained.
    Poly f{Rational(0), Rational(10), Rational(1)};
    Poly g{Rational(0), Rational(0), Rational(2)};
    CHECK(tail_ratio_inf(f, g, 0) == Rational(1, 2));
    // Attained interior minimum: f = (d-10)^2 + 1, g = 1 over d > 0: min 1 at d=10.
    Poly f2{Rational(101), Rational(-20), Rational(1)};
    CHECK(tail_ratio_inf(f2, Poly::constant(Rational(1)), 0) == 1);
    // deg f < deg g: infimum 0.
    CHECK(tail_ratio_inf(Poly::constant(Rational(7)), g, 5) == 0);
    // f identically zero: 0.
    CHECK(tail_ratio_inf(Poly(), g, 0) == 0);
    // Edge-attained: f = d, g = 1 over d > 3: min 4.
    CHECK(tail_ratio_inf(Poly{Rational(0), Rational(1)}, Poly::constant(Rational(1)), 3) == 4);
}
