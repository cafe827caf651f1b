#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "bs/decompose.hpp"
#include "bs/facets.hpp"
#include "bs/json_io.hpp"
#include "bs/render.hpp"
#include "helpers.hpp"

using namespace bs;
using namespace bs::testing;

TEST_CASE("betti JSON round-trip") {
    BettiTable b = make_bx(11);
    json j = to_json(b);
    BettiTable back = betti_from_json(j);
    CHECK(back.n == b.n);
    CHECK(back.entries == b.entries);
    CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("cohomology JSON round-trip") {
    CohomologyTable c = supernatural_table({3, -1, -4}, Rational(3, 7), -7, 5);
    json j = to_json(c);
    CohomologyTable back = cohomology_from_json(j);
    CHECK(same_table(back, c));
    CHECK(back.complete == c.complete);
    CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("functional JSON round-trip, both orientations") {
    Functional u = upper_facet_equation({-1, 0, 2, 3}, 1, -4, 2);
    json j = to_json(u);
    CHECK(j["orientation"] == "betti");
    CHECK(j["n"] == 3);
    Functional back = functional_from_json(j);
    CHECK(back.side == u.side);
    CHECK(back.size == u.size);
    CHECK(back.win_lo == u.win_lo);
    CHECK(back.win_hi == u.win_hi);
    CHECK(back.coeffs == u.coeffs);

    Functional cf = cohomology_facet({3, 0, -4}, 2);
    json j2 = to_json(cf);
    CHECK(j2["orientation"] == "cohomology");
    CHECK(j2["m"] == 3);
    Functional back2 = functional_from_json(j2);
    CHECK(back2.coeffs == cf.coeffs);
    CHECK(to_json(back2).dump() == j2.dump());
}

TEST_CASE("decomposition JSON") {
    json j = to_json(decompose_betti(make_bx(11)));
    REQUIRE(j["parts"].size() == 3);
    CHECK(j["parts"][0]["coeff"] == "11/90");
    CHECK(j["parts"][1]["skeleton"] == json({0, 2, 3, 5, 6, 8}));
}

TEST_CASE("parse errors carry context") {
    CHECK_THROWS_AS(parse_json_text("{nope"), ParseError);
    CHECK_THROWS_AS(betti_from_json(parse_json_text("{}")), ParseError);
    CHECK_THROWS_AS(betti_from_json(parse_json_text(
                        R"({"n": 2, "entries": [{"col": 0, "deg": 0, "value": 1}]})")),
                    ParseError);
    CHECK_THROWS_AS(cohomology_from_json(parse_json_text(R"({"m": 1, "window": [3]})")),
                    ParseError);
    CHECK_THROWS_AS(functional_from_json(parse_json_text(R"({"orientation": "upside-down"})")),
                    ParseError);
}

TEST_CASE("render betti matches the display convention") {
    std::string s = render_betti(make_bx(0));
    // 4 display rows plus a header line.
    CHECK(std::count(s.begin(), s.end(), '\n') == 5);
    std::istringstream in(s);
    std::string header, r0, r1, r2, r3;
    std::getline(in, header);
    std::getline(in, r0);
    std::getline(in, r1);
    std::getline(in, r2);
    std::getline(in, r3);
    CHECK(r0.find("0:") != std::string::npos);
    CHECK(r0.find('1') != std::string::npos);
    CHECK(r1.find("10") != std::string::npos);
    CHECK(r1.find("16") != std::string::npos);
    CHECK(r3.find('1') != std::string::npos);
    CHECK(s.find('.') != std::string::npos); // structural zeros are dots
}

TEST_CASE("render cohomology puts row 0 at the bottom") {
    std::string s = render_cohomology(supernatural_table({1, -2}, Rational(1), -3, 2));
    CHECK(s.find("2:") != std::string::npos);
    CHECK(s.find("0:") != std::string::npos);
    CHECK(s.find("2:") < s.find("1:"));
    CHECK(s.find("1:") < s.find("0:"));
    CHECK(s.find("tail_high") != std::string::npos);
    CHECK(s.find("tail_low") != std::string::npos);
}

TEST_CASE("render functional") {
    Functional u = upper_facet_equation({-1, 0, 2, 3}, 1, -4, 2);
    std::string s = render_functional(u);
    CHECK(s.find("21") != std::string::npos);
    CHECK(s.find("-12") != std::string::npos);
    CHECK(s.find("-4:") != std::string::npos);
    std::string cs = render_functional(cohomology_facet({3, 0, -4}, 2));
    CHECK(cs.find("70") != std::string::npos);
}

TEST_CASE("JSON is canonical: serialize-parse-serialize is the identity") {
    Rng rng(97931);
    for (int t = 0; t < 10; ++t) {
        BettiConePoint p = random_betti_cone_point(rng, 5, 3);
        json j = to_json(p.table);
        CHECK(to_json(betti_from_json(j)).dump() == j.dump());
        CohomologyConePoint q = random_cohomology_cone_point(rng, 4, 3);
        json k = to_json(q.table);
        CHECK(to_json(cohomology_from_json(k)).dump() == k.dump());
    }
}
