#pragma once

// Brute-force oracles, deliberately independent of the sparse
// implementation: forms are dense multilinear arrays over all index tuples,
// the wedge is the full antisymmetrization sum over permutations with
// factorial normalization, and the Chevalley-Eilenberg differential is the
// alternating-sum formula on tuples of basis vectors.

#include <numeric>
#include <vector>

#include <algorithm>
#include <functional>

#include "g2forge/liealg.hpp"

namespace oracle {

using g2forge::AltForm;
using g2forge::FormIndex;
using g2forge::Rational;
using g2forge::Scalar;

struct DenseForm {
    int n = 0, k = 0;
    std::vector<Rational> v;  // size n^k, fully antisymmetric array

    static std::size_t flat(const std::vector<int>& tuple, int n) {
        std::size_t r = 0;
        for (int x : tuple) r = r * static_cast<std::size_t>(n) + static_cast<std::size_t>(x - 1);
        return r;
    }

    Rational at(const std::vector<int>& tuple) const { return v[flat(tuple, n)]; }

    static void for_each_tuple(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
        std::vector<int> t(k, 1);
        for (;;) {
            f(t);
            int p = k - 1;
            while (p >= 0 && t[p] == n) { t[p] = 1; --p; }
            if (p < 0) return;
            ++t[p];
        }
    }
};

inline int permutation_sign(std::vector<int> p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (p[i] != static_cast<int>(i)) {
            std::swap(p[i], p[static_cast<std::size_t>(p[i])]);
            sign = -sign;
        }
    }
    return sign;
}

// Expand a sparse form into the dense array by writing sgn(σ)·c into every
// permutation σ of each stored multi-index.
inline DenseForm dense(const AltForm& a) {
    DenseForm d;
    d.n = a.dim();
    d.k = a.degree();
    std::size_t size = 1;
    for (int i = 0; i < d.k; ++i) size *= static_cast<std::size_t>(d.n);
    d.v.assign(size, Rational(0));
    for (const auto& [idx, c] : a.terms()) {
        Rational rc = c.rational();
        std::vector<int> perm(idx.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> tuple(idx.size());
            for (std::size_t i = 0; i < idx.size(); ++i) tuple[i] = idx[perm[i]];
            int s = permutation_sign(perm);
            d.v[DenseForm::flat(tuple, d.n)] = s > 0 ? rc : -rc;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return d;
}

// (α∧β)(X_1…X_{k+l}) = 1/(k! l!) Σ_σ sgn(σ) α(X_σ(1)…) β(X_σ(k+1)…)
inline DenseForm dense_wedge(const DenseForm& a, const DenseForm& b) {
    DenseForm r;
    r.n = a.n;
    r.k = a.k + b.k;
    std::size_t size = 1;
    for (int i = 0; i < r.k; ++i) size *= static_cast<std::size_t>(r.n);
    r.v.assign(size, Rational(0));
    Rational kfact(1), lfact(1);
    for (int i = 2; i <= a.k; ++i) kfact *= Rational(i);
    for (int i = 2; i <= b.k; ++i) lfact *= Rational(i);
    Rational norm = Rational(1) / (kfact * lfact);

    DenseForm::for_each_tuple(r.n, r.k, [&](const std::vector<int>& t) {
        std::vector<int> perm(t.size());
        std::iota(perm.begin(), perm.end(), 0);
        Rational acc(0);
        do {
            std::vector<int> ta(a.k), tb(b.k);
            for (int i = 0; i < a.k; ++i) ta[i] = t[perm[i]];
            for (int i = 0; i < b.k; ++i) tb[i] = t[perm[a.k + i]];
            Rational term = a.at(ta) * b.at(tb);
            if (term.is_zero()) continue;
            acc += permutation_sign(perm) > 0 ? term : -term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        r.v[DenseForm::flat(t, r.n)] = acc * norm;
    });
    return r;
}

inline DenseForm dense_interior(const std::vector<Rational>& x, const DenseForm& a) {
    DenseForm r;
    r.n = a.n;
    r.k = a.k - 1;
    std::size_t size = 1;
    for (int i = 0; i < r.k; ++i) size *= static_cast<std::size_t>(r.n);
    r.v.assign(size, Rational(0));
    DenseForm::for_each_tuple(r.n, r.k, [&](const std::vector<int>& t) {
        Rational acc(0);
        std::vector<int> full(a.k);
        for (int j = 1; j <= a.n; ++j) {
            if (x[static_cast<std::size_t>(j) - 1].is_zero()) continue;
            full[0] = j;
            std::copy(t.begin(), t.end(), full.begin() + 1);
            acc += x[static_cast<std::size_t>(j) - 1] * a.at(full);
        }
        r.v[DenseForm::flat(t, r.n)] = acc;
    });
    return r;
}

// Single-point wedge evaluation: (α∧β)(X_{t_1},…,X_{t_{k+l}}) without
// materializing the dense product. Needed for top-degree coefficients in
// dimension 7, where the full array would be astronomically large.
inline Rational dense_wedge_at(const DenseForm& a, const DenseForm& b, const std::vector<int>& t) {
    Rational kfact(1), lfact(1);
    for (int i = 2; i <= a.k; ++i) kfact *= Rational(i);
    for (int i = 2; i <= b.k; ++i) lfact *= Rational(i);
    std::vector<int> perm(t.size());
    std::iota(perm.begin(), perm.end(), 0);
    Rational acc(0);
    do {
        std::vector<int> ta(a.k), tb(b.k);
        for (int i = 0; i < a.k; ++i) ta[i] = t[perm[i]];
        for (int i = 0; i < b.k; ++i) tb[i] = t[perm[a.k + i]];
        Rational term = a.at(ta) * b.at(tb);
        if (term.is_zero()) continue;
        acc += permutation_sign(perm) > 0 ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc / (kfact * lfact);
}

inline bool same(const DenseForm& d, const AltForm& a) {
    if (d.n != a.dim() || d.k != a.degree()) return false;
    auto e = dense(a);
    return d.v == e.v;
}

// Chevalley-Eilenberg differential by the alternating-sum formula on basis
// tuples (independent of the antiderivation recursion used in the library):
//   (dγ)(X_0,…,X_k) = Σ_{a<b} (−1)^{a+b} γ([X_a,X_b], X_0,…,X̂_a,…,X̂_b,…)
inline AltForm ce_d(const g2forge::LieAlgebra& g, const AltForm& gamma) {
    const int n = g.dim();
    const int k = gamma.degree() + 1;
    AltForm r(n, k);
    if (k > n) return r;
    for (const auto& idx : g2forge::multi_indices(n, k)) {
        Scalar acc;
        for (int a = 0; a < k; ++a) {
            for (int b = a + 1; b < k; ++b) {
                std::vector<g2forge::Vec> args;
                args.push_back(g.bracket(g2forge::Vec::basis(n, idx[static_cast<std::size_t>(a)]),
                                         g2forge::Vec::basis(n, idx[static_cast<std::size_t>(b)])));
                for (int q = 0; q < k; ++q)
                    if (q != a && q != b) args.push_back(g2forge::Vec::basis(n, idx[static_cast<std::size_t>(q)]));
                Scalar term = g2forge::evaluate(gamma, args);
                if ((a + b) % 2 == 1) term = -term;
                acc += term;
            }
        }
        if (!acc.is_zero()) r.add_term(idx, acc);
    }
    return r;
}

// Oracle for the b-map entry: the e^{1…n} coefficient of
// (1/6) ι_i φ ∧ ι_j φ ∧ φ computed entirely on the dense side.
inline Rational b_entry(const AltForm& phi, int i, int j) {
    auto d = dense(phi);
    std::vector<Rational> ei(static_cast<std::size_t>(phi.dim()), Rational(0));
    std::vector<Rational> ej = ei;
    ei[static_cast<std::size_t>(i) - 1] = Rational(1);
    ej[static_cast<std::size_t>(j) - 1] = Rational(1);
    auto pair = dense_wedge(dense_interior(ei, d), dense_interior(ej, d));
    std::vector<int> full(static_cast<std::size_t>(phi.dim()));
    std::iota(full.begin(), full.end(), 1);
    return dense_wedge_at(pair, d, full) / Rational(6);
}

} // namespace oracle
