#pragma once

// Shared fixtures: the adapted-basis normal forms and the standard catalog
// ingredients, built through the text parser.

#include <random>

#include "g2forge/parse.hpp"

namespace fixtures {

using namespace g2forge;

inline AltForm phi_standard() {
    return parse_form("e127+e347+e567+e135-e146-e236-e245", 7, 3);
}

inline AltForm omega_standard(int dim = 6) { return parse_form("e12+e34+e56", dim, 2); }

inline AltForm psi_standard(int dim = 6) { return parse_form("e135-e146-e236-e245", dim, 3); }

inline AltForm psi_hat_standard(int dim = 6) { return parse_form("e136+e145+e235-e246", dim, 3); }

inline LieAlgebra h1() { return parse_structure_tuple("(0,0,0,0,e14+e23,e13-e24)"); }

inline LieAlgebra h2() { return parse_structure_tuple("(0,0,0,e13,e14+e23,e13-e15-e24)"); }

inline Endo d1() {
    Endo e(6);
    for (int i = 0; i < 4; ++i) e.at(i, i) = Scalar(Rational(1, 2));
    e.at(4, 4) = Scalar(Rational(1));
    e.at(5, 5) = Scalar(Rational(1));
    return e;
}

inline Endo d2() {
    // e1 -> -e3, e2 -> -e4, e3 -> e1, e4 -> e2
    Endo e(6);
    e.at(2, 0) = Scalar(Rational(-1));
    e.at(3, 1) = Scalar(Rational(-1));
    e.at(0, 2) = Scalar(Rational(1));
    e.at(1, 3) = Scalar(Rational(1));
    return e;
}

inline Endo d3() {
    // e1 -> 2e3, e2 -> 2e4, e3 -> e1, e4 -> e2
    Endo e(6);
    e.at(2, 0) = Scalar(Rational(2));
    e.at(3, 1) = Scalar(Rational(2));
    e.at(0, 2) = Scalar(Rational(1));
    e.at(1, 3) = Scalar(Rational(1));
    return e;
}

inline Matrix identity_gram(int n) { return Matrix::identity(n); }

// Deterministic random sparse forms with small rational coefficients.
template <class Rng>
AltForm random_form(Rng& rng, int dim, int degree, int max_terms = 5) {
    auto idxs = multi_indices(dim, degree);
    AltForm f(dim, degree);
    std::uniform_int_distribution<std::size_t> pick(0, idxs.size() - 1);
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
    int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
    for (int t = 0; t < terms; ++t) {
        Rational c(num(rng), den(rng));
        if (c.is_zero()) continue;
        f.add_term(idxs[pick(rng)], Scalar(c));
    }
    return f;
}

template <class Rng>
Vec random_vector(Rng& rng, int dim) {
    std::uniform_int_distribution<long> num(-4, 4);
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = Scalar(Rational(num(rng)));
    return v;
}

} // namespace fixtures
