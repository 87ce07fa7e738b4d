#include <doctest.h>

#include <random>

#include "common.hpp"
#include "oracle.hpp"

using namespace g2forge;
using fixtures::random_form;
using fixtures::random_vector;

namespace {

LieAlgebra ex51() {
    return parse_structure_tuple("(1/2e17,1/2e27,1/2e37,1/2e47,e14+e23+e57,e13-e24+e67,0)");
}
LieAlgebra ex52() { return parse_structure_tuple("(e37,e47,-e17,-e27,e14+e23,e13-e24,0)"); }
LieAlgebra ex53() { return parse_structure_tuple("(e37,e47,2e17,2e27,e14+e23,e13-e24,0)"); }

} // namespace

TEST_CASE("structure constants validate the Jacobi identity") {
    CHECK_NOTHROW(fixtures::h1());
    CHECK_NOTHROW(fixtures::h2());
    CHECK_NOTHROW(LieAlgebra::abelian(7));
    try {
        parse_structure_tuple("(0,0,0,0,e14+e23,e15)");
        FAIL("expected a Jacobi failure");
    } catch (const JacobiError& e) {
        CHECK(e.index == 6);
    }
}

TEST_CASE("chevalley-eilenberg differential on h1") {
    auto h1 = fixtures::h1();
    CHECK(h1.d(parse_form("e5", 6, 1)) == parse_form("e14+e23", 6, 2));
    CHECK(h1.d(fixtures::omega_standard()) == -fixtures::psi_standard());
    CHECK(h1.d(fixtures::psi_standard()).is_zero());
}

TEST_CASE("d squares to zero") {
    std::mt19937 rng(201);
    auto h1 = fixtures::h1();
    auto g51 = ex51();
    for (int t = 0; t < 1000; ++t) {
        auto a = random_form(rng, 6, 1 + static_cast<int>(rng() % 3));
        CHECK(h1.d(h1.d(a)).is_zero());
        auto b = random_form(rng, 7, 1 + static_cast<int>(rng() % 3));
        CHECK(g51.d(g51.d(b)).is_zero());
    }
}

TEST_CASE("d matches the alternating-sum oracle") {
    std::mt19937 rng(202);
    auto h2 = fixtures::h2();
    auto g52 = ex52();
    for (int t = 0; t < 150; ++t) {
        auto a = random_form(rng, 6, 1 + static_cast<int>(rng() % 3));
        CHECK(h2.d(a) == oracle::ce_d(h2, a));
        auto b = random_form(rng, 7, 1 + static_cast<int>(rng() % 3));
        CHECK(g52.d(b) == oracle::ce_d(g52, b));
    }
}

TEST_CASE("brackets are antisymmetric and satisfy Jacobi") {
    std::mt19937 rng(203);
    auto g = ex53();
    for (int t = 0; t < 200; ++t) {
        Vec x = random_vector(rng, 7), y = random_vector(rng, 7), z = random_vector(rng, 7);
        CHECK(g.bracket(x, y) == -g.bracket(y, x));
        Vec j = g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y));
        CHECK(j.is_zero());
    }
    // ad_{e7} on the extension acts on the base as the derivation
    Endo ad7 = g.ad(Vec::basis(7, 7));
    Endo d3 = fixtures::d3();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(ad7.at(i, j) == d3.at(i, j));
}

TEST_CASE("lie derivative: Cartan formula consequences") {
    std::mt19937 rng(204);
    auto g = ex51();
    for (int t = 0; t < 400; ++t) {
        Vec x = random_vector(rng, 7);
        auto a = random_form(rng, 7, 1 + static_cast<int>(rng() % 3));
        // L_X commutes with d
        CHECK(g.lie_derivative(x, g.d(a)) == g.d(g.lie_derivative(x, a)));
        // For left-invariant data, L_X γ = −(ad_X)* γ
        CHECK(g.lie_derivative(x, a) == -endo_action(g.ad(x), a));
    }
}

TEST_CASE("lie derivative examples") {
    auto phi7 = fixtures::phi_standard();
    auto g53 = ex53();
    CHECK(g53.lie_derivative(Vec::basis(7, 5), phi7).is_zero());
    CHECK(g53.lie_derivative(Vec::basis(7, 6), phi7).is_zero());
    auto g51 = ex51();
    CHECK(!g51.lie_derivative(Vec::basis(7, 7), phi7).is_zero());
    // closed γ with ι_X γ = 0 gives 0
    auto gamma = parse_form("e7", 7, 1);
    CHECK(g51.d(gamma).is_zero());
    CHECK(g51.lie_derivative(Vec::basis(7, 1), gamma).is_zero());
}

TEST_CASE("derivation recognition") {
    auto h1 = fixtures::h1();
    CHECK(is_derivation(h1, fixtures::d1()));
    CHECK(is_derivation(h1, fixtures::d2()));
    CHECK(is_derivation(h1, fixtures::d3()));
    CHECK(is_derivation(h1, Endo(6)));
    // the transposition e1 <-> e5 is not a derivation
    Endo swap15 = Endo::identity(6);
    swap15.at(0, 0) = Scalar(Rational(0));
    swap15.at(4, 4) = Scalar(Rational(0));
    swap15.at(4, 0) = Scalar(Rational(1));
    swap15.at(0, 4) = Scalar(Rational(1));
    CHECK(!is_derivation(h1, swap15));
    CHECK_THROWS_AS(Derivation(h1, swap15), Error);
    // dual check agrees with the bracket-side Leibniz rule on basis pairs
    std::mt19937 rng(205);
    std::uniform_int_distribution<long> num(-2, 2);
    for (int t = 0; t < 60; ++t) {
        Endo a(6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) a.at(i, j) = Scalar(Rational(num(rng)));
        bool leibniz = true;
        for (int i = 1; i <= 6 && leibniz; ++i)
            for (int j = i + 1; j <= 6 && leibniz; ++j) {
                Vec x = Vec::basis(6, i), y = Vec::basis(6, j);
                Vec lhs = a.apply(h1.bracket(x, y));
                Vec rhs = h1.bracket(a.apply(x), y) + h1.bracket(x, a.apply(y));
                leibniz = lhs == rhs;
            }
        CHECK(is_derivation(h1, a) == leibniz);
    }
}

TEST_CASE("rank-one extensions reproduce the catalog tuples") {
    auto h1 = fixtures::h1();
    CHECK(rank_one_extension(h1, Derivation(h1, fixtures::d1())).total == ex51());
    CHECK(rank_one_extension(h1, Derivation(h1, fixtures::d2())).total == ex52());
    CHECK(rank_one_extension(h1, Derivation(h1, fixtures::d3())).total == ex53());
    // trivial derivation: h ⊕ ℝ with d e7 = 0
    auto triv = rank_one_extension(h1, Derivation(h1, Endo(6)));
    CHECK(triv.total.differential(7).is_zero());
    for (int k = 1; k <= 6; ++k) CHECK(triv.total.differential(k) == h1.differential(k).embedded(7));
}

TEST_CASE("extension differential identity for base forms") {
    std::mt19937 rng(206);
    auto h1 = fixtures::h1();
    auto ext = rank_one_extension(h1, Derivation(h1, fixtures::d2()));
    for (int t = 0; t < 300; ++t) {
        int k = 1 + static_cast<int>(rng() % 3);
        auto gamma = random_form(rng, 6, k);
        CHECK(ext.total.d(gamma.embedded(7)) == extension_d_from_base(ext, gamma));
    }
    CHECK(ext.total.d(ext.eta()).is_zero());
}

TEST_CASE("nilpotent base and nilpotent derivation give a nilpotent extension") {
    auto h1 = fixtures::h1();
    // inner derivations of a nilpotent algebra are nilpotent
    Endo ad1 = h1.ad(Vec::basis(6, 1));
    auto ext = rank_one_extension(h1, Derivation(h1, ad1));
    CHECK(algebra_predicates(ext.total).nilpotent);
}

TEST_CASE("algebra predicates") {
    auto p51 = algebra_predicates(ex51());
    CHECK(!p51.unimodular);
    CHECK(p51.solvable);
    CHECK(!p51.nilpotent);
    CHECK(p51.ad_traces[6] == Scalar(Rational(4)));

    auto p52 = algebra_predicates(ex52());
    CHECK(p52.unimodular);
    CHECK(p52.solvable);
    CHECK(!p52.nilpotent);

    auto p53 = algebra_predicates(ex53());
    CHECK(p53.unimodular);
    CHECK(p53.solvable);

    auto ph1 = algebra_predicates(fixtures::h1());
    CHECK(ph1.nilpotent);
    CHECK(ph1.unimodular);
    CHECK(ph1.lower_central_dims == std::vector<int>{6, 2, 0});

    auto n7 = parse_structure_tuple("(0,0,e12,e13,e23,e15+e24,e16+e34)");
    CHECK(algebra_predicates(n7).nilpotent);

    auto pab = algebra_predicates(LieAlgebra::abelian(5));
    CHECK(pab.nilpotent);
    CHECK(pab.unimodular);
    CHECK(pab.lower_central_dims == std::vector<int>{5, 0});
}

TEST_CASE("subalgebra extraction recovers the base of an extension") {
    auto g = ex52();
    std::vector<Vec> basis;
    for (int i = 1; i <= 6; ++i) basis.push_back(Vec::basis(7, i));
    auto sub = subalgebra_span(g, basis);
    CHECK(sub.algebra == fixtures::h1());
    // restriction of the standard φ to the base is ψ
    CHECK(restrict_form(fixtures::phi_standard(), basis) == fixtures::psi_standard());
    // a non-closed subspace is rejected
    std::vector<Vec> bad{Vec::basis(7, 1), Vec::basis(7, 4)};
    CHECK_THROWS_AS(subalgebra_span(g, bad), Error);
}
