#include <doctest.h>

#include <random>

#include "common.hpp"

using namespace g2forge;

TEST_CASE("tuple parsing") {
    auto n1 = parse_structure_tuple("(0,0,0,0,e12,e13,0)");
    CHECK(n1.dim() == 7);
    CHECK(n1.differential(5) == parse_form("e12", 7, 2));
    auto ab = parse_structure_tuple("(0,0,0,0,0,0,0)");
    CHECK(ab == LieAlgebra::abelian(7));
    auto g51 = parse_structure_tuple("(1/2e17,1/2e27,1/2e37,1/2e47,e14+e23+e57,e13-e24+e67,0)");
    CHECK(g51.differential(1) == Scalar(Rational(1, 2)) * parse_form("e17", 7, 2));
    CHECK(g51.differential(5) == parse_form("e14+e23+e57", 7, 3 - 1));
}

TEST_CASE("whitespace and decimals are accepted") {
    auto g = parse_structure_tuple(" ( 0 , 0 , 0 , 0 , e14 + e23 , e13 - e24 ) ");
    CHECK(g == fixtures::h1());
    auto f = parse_form("0.5e17", 7, 2);
    CHECK(f == Scalar(Rational(1, 2)) * parse_form("e17", 7, 2));
    CHECK(parse_form("1.25e12", 7, 2) == Scalar(Rational(5, 4)) * parse_form("e12", 7, 2));
}

TEST_CASE("parse errors carry positions and never crash") {
    CHECK_THROWS_AS(parse_structure_tuple("(0,0"), ParseError);
    CHECK_THROWS_AS(parse_structure_tuple("0,0,0"), ParseError);
    CHECK_THROWS_AS(parse_structure_tuple("(e12,e34,xyz)"), ParseError);
    CHECK_THROWS_AS(parse_structure_tuple("(e21,0,0)"), ParseError);  // decreasing indices
    CHECK_THROWS_AS(parse_structure_tuple("(e14,0,0)"), ParseError);  // index out of range
    CHECK_THROWS_AS(parse_structure_tuple("(e1,0,0)"), ParseError);   // wrong degree
    CHECK_THROWS_AS(parse_structure_tuple("(1/0e12,0,0)"), ParseError);
    CHECK_THROWS_AS(parse_structure_tuple("(0,0,0,0,0,0,0,0,0,0)"), ParseError);  // dim > 9
    try {
        parse_form("e12+e1x", 7, 2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column > 1);
    }
}

TEST_CASE("parse then render is the identity on catalog-style tuples") {
    const char* tuples[] = {
        "(0,0,0,0,e12,e13,0)",
        "(0,0,0,e12,e13,e23,0)",
        "(0,0,e12,0,0,e13+e24,e15)",
        "(0,0,0,0,e14+e23,e13-e24)",
        "(0,0,0,e13,e14+e23,e13-e15-e24)",
        "(1/2e17,1/2e27,1/2e37,1/2e47,e14+e23+e57,e13-e24+e67,0)",
        "(e37,e47,-e17,-e27,e14+e23,e13-e24,0)",
    };
    for (const char* t : tuples) CHECK(render_tuple(parse_structure_tuple(t)) == t);
}

TEST_CASE("render then parse round-trips random valid forms") {
    std::mt19937 rng(301);
    for (int t = 0; t < 500; ++t) {
        auto f = fixtures::random_form(rng, 7, 1 + static_cast<int>(rng() % 3));
        CHECK(parse_form(render_form(f), 7, f.degree()) == f);
    }
}

TEST_CASE("derivation matrix input, both formats") {
    auto e = parse_matrix("0,0,1,0,0,0, 0,0,0,1,0,0, -1,0,0,0,0,0, 0,-1,0,0,0,0, 0,0,0,0,0,0, 0,0,0,0,0,0", 6);
    CHECK(e == fixtures::d2());
    auto j = parse_matrix(R"([[0,0,1,0,0,0],[0,0,0,1,0,0],[-1,0,0,0,0,0],[0,-1,0,0,0,0],[0,0,0,0,0,0],[0,0,0,0,0,0]])", 6);
    CHECK(j == fixtures::d2());
    auto half = parse_matrix(R"(["1/2",0,0,0, 0,"1/2",0,0, 0,0,"1/2",0, 0,0,0,"1/2"])", 4);
    CHECK(half.at(0, 0) == Scalar(Rational(1, 2)));
    CHECK_THROWS_AS(parse_matrix("1,2,3", 2), ParseError);
    CHECK_THROWS_AS(parse_matrix("[[0.5]]", 1), ParseError);
}
