#pragma once

#include "g2forge/liealg.hpp"

namespace g2forge {

// Left-invariant metric as a Gram matrix on the chosen basis. Exact ring
// only: positive definiteness is decided by leading principal minors.
struct MetricData {
    LieAlgebra algebra;
    Matrix gram;

    MetricData(LieAlgebra g, Matrix m) : algebra(std::move(g)), gram(std::move(m)) {
        if (gram.rows() != algebra.dim() || gram.cols() != algebra.dim())
            throw DimensionError("gram matrix dimension mismatch");
        if (!gram.is_symmetric()) throw Error("metric gram matrix must be symmetric");
        for (int k = 1; k <= gram.rows(); ++k) {
            Matrix minor(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) minor.at(i, j) = gram.at(i, j);
            Scalar d = determinant(minor);
            if (d.ring() != Ring::rational || d.rational().sign() <= 0)
                throw Error("metric gram matrix is not positive definite");
        }
    }

    static MetricData euclidean(const LieAlgebra& g) { return MetricData(g, Matrix::identity(g.dim())); }

    Scalar inner(const Vec& x, const Vec& y) const {
        Scalar acc;
        for (int i = 0; i < gram.rows(); ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < gram.cols(); ++j) acc += x[i] * gram.at(i, j) * y[j];
        }
        return acc;
    }
};

// Koszul formula for the Levi-Civita connection of a left-invariant metric:
//   2⟨∇_X Y, Z⟩ = ⟨[X,Y],Z⟩ − ⟨[Y,Z],X⟩ + ⟨[Z,X],Y⟩.
// Returned as one matrix per basis direction: gamma[i] is the matrix of
// ∇_{e_{i+1}} (column j = coordinates of ∇_{e_{i+1}} e_{j+1}).
inline std::vector<Matrix> levi_civita(const LieAlgebra& g, const MetricData& m) {
    if (m.algebra.dim() != g.dim()) throw DimensionError("metric/algebra dimension mismatch");
    const int n = g.dim();
    Matrix ginv = inverse(m.gram);
    std::vector<Vec> basis;
    for (int i = 1; i <= n; ++i) basis.push_back(Vec::basis(n, i));
    std::vector<Matrix> gamma(static_cast<std::size_t>(n), Matrix(n, n));
    const Scalar half(Rational(1, 2));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<Scalar> rhs(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) {
                Scalar s = m.inner(g.bracket(basis[i], basis[j]), basis[k]);
                s -= m.inner(g.bracket(basis[j], basis[k]), basis[i]);
                s += m.inner(g.bracket(basis[k], basis[i]), basis[j]);
                rhs[k] = half * s;
            }
            auto coords = ginv.apply(rhs);
            for (int k = 0; k < n; ++k) gamma[static_cast<std::size_t>(i)].at(k, j) = coords[static_cast<std::size_t>(k)];
        }
    }
    return gamma;
}

namespace detail {

inline Vec nabla(const std::vector<Matrix>& gamma, int i, const Vec& y) {
    const int n = y.dim();
    return Vec(n, gamma[static_cast<std::size_t>(i)].apply(y.coords()));
}

} // namespace detail

// R(X,Y)Z = ∇_X ∇_Y Z − ∇_Y ∇_X Z − ∇_{[X,Y]} Z on basis vectors.
inline Vec riemann(const LieAlgebra& g, const std::vector<Matrix>& gamma, int i, int j, const Vec& z) {
    const int n = g.dim();
    Vec a = detail::nabla(gamma, i, detail::nabla(gamma, j, z));
    Vec b = detail::nabla(gamma, j, detail::nabla(gamma, i, z));
    Vec br = g.bracket(Vec::basis(n, i + 1), Vec::basis(n, j + 1));
    Vec c(n);
    for (int k = 0; k < n; ++k)
        if (!br[k].is_zero()) c = c + br[k] * detail::nabla(gamma, k, z);
    return a + (-b) + (-c);
}

// Ricci tensor ric(Y,Z) = tr(X ↦ R(X,Y)Z); the trace is metric-free.
inline Matrix ricci_tensor(const LieAlgebra& g, const MetricData& m) {
    const int n = g.dim();
    auto gamma = levi_civita(g, m);
    Matrix ric(n, n);
    for (int j = 0; j < n; ++j) {
        Vec ej = Vec::basis(n, j + 1);
        for (int k = 0; k < n; ++k) {
            Vec ek = Vec::basis(n, k + 1);
            Scalar acc;
            for (int a = 0; a < n; ++a) acc += riemann(g, gamma, a, j, ek)[a];
            ric.at(j, k) = acc;
        }
    }
    return ric;
}

// Ricci operator: raise one index, Ric = G⁻¹ · ric. Always g-symmetric.
inline Endo ricci_operator(const LieAlgebra& g, const MetricData& m) {
    return Endo(inverse(m.gram) * ricci_tensor(g, m));
}

inline Scalar scalar_curvature(const LieAlgebra& g, const MetricData& m) {
    return ricci_operator(g, m).trace();
}

// Solves Ric = λ·Id + D with D ∈ Der(h), exactly. The unknowns are λ and
// the n² entries of D; derivation constraints are linear. Returns the
// deterministic particular solution or infeasible.
struct NilsolitonResult {
    bool feasible = false;
    Scalar lambda;
    Endo derivation;
};

inline NilsolitonResult nilsoliton_check(const LieAlgebra& h, const MetricData& m) {
    const int n = h.dim();
    Endo ric = ricci_operator(h, m);
    // unknowns: x0 = λ, then D row-major
    const int unknowns = 1 + n * n;
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs;

    // Ric − λ Id − D = 0
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<Scalar> row(static_cast<std::size_t>(unknowns));
            if (i == j) row[0] = Scalar(Rational(1));
            row[static_cast<std::size_t>(1 + i * n + j)] = Scalar(Rational(1));
            rows.push_back(std::move(row));
            rhs.push_back(ric.at(i, j));
        }
    }
    // D[e_a, e_b] − [D e_a, e_b] − [e_a, D e_b] = 0; all terms linear in D.
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            Vec w = h.bracket(Vec::basis(n, a), Vec::basis(n, b));
            for (int k = 0; k < n; ++k) {
                std::vector<Scalar> row(static_cast<std::size_t>(unknowns));
                // (D w)_k = Σ_j D_{kj} w_j
                for (int j = 0; j < n; ++j)
                    if (!w[j].is_zero()) row[static_cast<std::size_t>(1 + k * n + j)] += w[j];
                // ([D e_a, e_b])_k = Σ_i D_{ia} [e_i, e_b]_k
                for (int i = 1; i <= n; ++i) {
                    Scalar c = h.bracket(Vec::basis(n, i), Vec::basis(n, b))[k];
                    if (!c.is_zero()) row[static_cast<std::size_t>(1 + (i - 1) * n + (a - 1))] -= c;
                }
                // ([e_a, D e_b])_k = Σ_i D_{ib} [e_a, e_i]_k
                for (int i = 1; i <= n; ++i) {
                    Scalar c = h.bracket(Vec::basis(n, a), Vec::basis(n, i))[k];
                    if (!c.is_zero()) row[static_cast<std::size_t>(1 + (i - 1) * n + (b - 1))] -= c;
                }
                rows.push_back(std::move(row));
                rhs.push_back(Scalar(Rational(0)));
            }
        }
    }

    Matrix a(static_cast<int>(rows.size()), unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j) a.at(static_cast<int>(i), j) = rows[i][static_cast<std::size_t>(j)];
    auto sol = solve_linear_exact(a, rhs);
    NilsolitonResult r;
    r.feasible = sol.feasible;
    if (!sol.feasible) return r;
    r.lambda = sol.particular[0];
    Endo d(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d.at(i, j) = sol.particular[static_cast<std::size_t>(1 + i * n + j)];
    r.derivation = d;
    return r;
}

} // namespace g2forge
