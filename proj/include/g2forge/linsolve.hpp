#pragma once

#include <optional>
#include <utility>

#include "g2forge/matrix.hpp"

namespace g2forge {

// Full affine solution set of A·x = b over an exact ring: a particular
// solution plus a basis of the null space, or a distinguished infeasible
// answer. Never an exception: infeasible systems are data.
struct LinearSolution {
    bool feasible = false;
    std::vector<Scalar> particular;               // size = unknowns
    std::vector<std::vector<Scalar>> null_basis;  // ordered by free column
    int rank = 0;
    int rank_augmented = 0;
};

namespace detail {

// Fraction-free (Bareiss) elimination of the augmented block [A | B].
// Pivot selection is deterministic: the lexicographically smallest
// (row, column) among untouched rows/columns with a nonzero entry, columns
// restricted to the A part. Entries stay exact minors of the input, so the
// division by the previous pivot is exact over rationals and polynomials.
struct Elimination {
    Matrix m;                                // eliminated [A | B]
    int acols = 0;                           // columns of the A block
    std::vector<std::pair<int, int>> pivots; // in selection order
    std::vector<int> pivot_of_col;           // col -> pivot index, or -1

    bool is_pivot_row(int r) const {
        for (const auto& [pr, pc] : pivots)
            if (pr == r) return true;
        return false;
    }
};

inline Elimination eliminate(const Matrix& a, const Matrix& b) {
    if (b.rows() != a.rows()) throw DimensionError("right-hand side row mismatch");
    const int m = a.rows(), n = a.cols(), k = b.cols();
    Elimination e;
    e.acols = n;
    e.m = Matrix(m, n + k);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) e.m.at(i, j) = a.at(i, j);
        for (int j = 0; j < k; ++j) e.m.at(i, n + j) = b.at(i, j);
    }
    e.pivot_of_col.assign(n, -1);

    std::vector<bool> row_done(m, false), col_done(n, false);
    Scalar prev(Rational(1));
    for (;;) {
        int pr = -1, pc = -1;
        for (int i = 0; i < m && pr < 0; ++i) {
            if (row_done[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (col_done[j]) continue;
                if (!e.m.at(i, j).is_zero()) { pr = i; pc = j; break; }
            }
        }
        if (pr < 0) break;
        const Scalar piv = e.m.at(pr, pc);
        for (int i = 0; i < m; ++i) {
            if (i == pr || row_done[i]) continue;
            if (e.m.at(i, pc).is_zero()) {
                // Still rescale so the whole row stays a coherent minor family.
                for (int j = 0; j < n + k; ++j) {
                    if (j == pc || (j < n && col_done[j])) continue;
                    e.m.at(i, j) = (e.m.at(i, j) * piv) / prev;
                }
                continue;
            }
            const Scalar f = e.m.at(i, pc);
            for (int j = 0; j < n + k; ++j) {
                if (j < n && col_done[j]) continue;
                if (j == pc) { e.m.at(i, j) = Scalar(Rational(0)); continue; }
                e.m.at(i, j) = (e.m.at(i, j) * piv - f * e.m.at(pr, j)) / prev;
            }
        }
        row_done[pr] = true;
        col_done[pc] = true;
        e.pivot_of_col[pc] = static_cast<int>(e.pivots.size());
        e.pivots.emplace_back(pr, pc);
        prev = piv;
    }
    return e;
}

// Back-substitution for one right-hand side column of an elimination
// (column index relative to the B block; pass -1 for the homogeneous
// system). `fixed_free` assigns values to free columns.
inline std::vector<Scalar> back_substitute(const Elimination& e, int bcol,
                                           const std::vector<Scalar>& fixed_free) {
    const int n = e.acols;
    std::vector<Scalar> x = fixed_free;
    for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
        const auto [r, c] = *it;
        Scalar acc = bcol >= 0 ? e.m.at(r, n + bcol) : Scalar(Rational(0));
        for (int j = 0; j < n; ++j) {
            if (j == c) continue;
            if (e.m.at(r, j).is_zero()) continue;
            acc -= e.m.at(r, j) * x[j];
        }
        x[c] = acc / e.m.at(r, c);
    }
    return x;
}

} // namespace detail

inline LinearSolution solve_linear_exact(const Matrix& a, const std::vector<Scalar>& b) {
    const int m = a.rows(), n = a.cols();
    Matrix bm(m, 1);
    for (int i = 0; i < m; ++i) bm.at(i, 0) = b.at(i);
    auto e = detail::eliminate(a, bm);

    LinearSolution sol;
    sol.rank = static_cast<int>(e.pivots.size());
    sol.feasible = true;
    for (int i = 0; i < m; ++i) {
        if (e.is_pivot_row(i)) continue;
        // A-part of non-pivot rows is fully eliminated; a nonzero residual
        // in the b column certifies infeasibility.
        if (!e.m.at(i, n).is_zero()) { sol.feasible = false; break; }
    }
    sol.rank_augmented = sol.rank + (sol.feasible ? 0 : 1);
    if (!sol.feasible) return sol;

    std::vector<Scalar> zeros(n, Scalar(Rational(0)));
    sol.particular = detail::back_substitute(e, 0, zeros);
    for (int f = 0; f < n; ++f) {
        if (e.pivot_of_col[f] >= 0) continue;
        std::vector<Scalar> fixed = zeros;
        fixed[f] = Scalar(Rational(1));
        sol.null_basis.push_back(detail::back_substitute(e, -1, fixed));
    }
    return sol;
}

inline int rank_exact(const Matrix& a) {
    return static_cast<int>(detail::eliminate(a, Matrix(a.rows(), 0)).pivots.size());
}

inline std::vector<std::vector<Scalar>> null_space(const Matrix& a) {
    return solve_linear_exact(a, std::vector<Scalar>(a.rows(), Scalar(Rational(0)))).null_basis;
}

// Null space together with the free column each basis vector is keyed to
// (that coordinate is 1 and the other free coordinates are 0).
struct NullSpaceBasis {
    std::vector<std::vector<Scalar>> basis;
    std::vector<int> free_columns;
};

inline NullSpaceBasis null_space_with_columns(const Matrix& a) {
    auto e = detail::eliminate(a, Matrix(a.rows(), 0));
    NullSpaceBasis out;
    std::vector<Scalar> zeros(static_cast<std::size_t>(a.cols()), Scalar(Rational(0)));
    for (int f = 0; f < a.cols(); ++f) {
        if (e.pivot_of_col[static_cast<std::size_t>(f)] >= 0) continue;
        std::vector<Scalar> fixed = zeros;
        fixed[static_cast<std::size_t>(f)] = Scalar(Rational(1));
        out.basis.push_back(detail::back_substitute(e, -1, fixed));
        out.free_columns.push_back(f);
    }
    return out;
}

// Exact inverse; throws on singular input.
inline Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("inverse of non-square matrix");
    const int n = a.rows();
    auto e = detail::eliminate(a, Matrix::identity(n));
    if (static_cast<int>(e.pivots.size()) != n) throw Error("matrix is singular");
    Matrix inv(n, n);
    std::vector<Scalar> zeros(n, Scalar(Rational(0)));
    for (int j = 0; j < n; ++j) {
        auto col = detail::back_substitute(e, j, zeros);
        for (int i = 0; i < n; ++i) inv.at(i, j) = col[i];
    }
    return inv;
}

} // namespace g2forge
