#pragma once

#include "g2forge/liealg.hpp"

namespace g2forge {

// Lichnerowicz (Morse-Novikov) calculus on a Lie algebra: the twisted
// differential d_θ = d − θ∧·, its cohomology, exactness solvers and the
// first/second kind classification of LCC structures.

// d_θ α = dα − θ ∧ α. θ must be closed, otherwise d_θ² ≠ 0.
inline AltForm d_theta(const LieAlgebra& g, const AltForm& theta, const AltForm& alpha) {
    if (theta.degree() != 1) throw DimensionError("twist must be a 1-form");
    if (!g.d(theta).is_zero()) throw Error("twisting 1-form is not closed");
    return g.d(alpha) - wedge(theta, alpha);
}

// Matrix of d_θ: Λ^k → Λ^{k+1} in the lexicographic monomial bases.
inline Matrix d_theta_matrix(const LieAlgebra& g, const AltForm& theta, int k) {
    const int n = g.dim();
    auto dom = multi_indices(n, k);
    auto ran = multi_indices(n, k + 1);
    Matrix m(static_cast<int>(ran.size()), static_cast<int>(dom.size()));
    for (std::size_t j = 0; j < dom.size(); ++j) {
        AltForm mono = AltForm::monomial(n, dom[j]);
        auto img = to_coords(g.d(mono) - wedge(theta, mono));
        for (std::size_t i = 0; i < ran.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = img[i];
    }
    return m;
}

struct CohomologyTable {
    AltForm theta;
    std::vector<int> dims;                          // H^0 … H^n
    std::vector<std::vector<AltForm>> representatives;  // per degree
};

// Exact rank-nullity on each d_θ. Representatives are cocycles reduced
// against the coboundary space with the deterministic pivot order, so two
// runs always report the same forms.
inline CohomologyTable lichnerowicz_cohomology(const LieAlgebra& g, const AltForm& theta) {
    if (!g.d(theta).is_zero()) throw Error("twisting 1-form is not closed");
    const int n = g.dim();
    CohomologyTable t;
    t.theta = theta;
    std::vector<Matrix> mats;
    mats.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) mats.push_back(d_theta_matrix(g, theta, k));

    for (int k = 0; k <= n; ++k) {
        const int dim_k = static_cast<int>(multi_indices(n, k).size());
        auto cocycles = null_space(mats[static_cast<std::size_t>(k)]);
        int rank_prev = k == 0 ? 0 : rank_exact(mats[static_cast<std::size_t>(k) - 1]);
        t.dims.push_back(static_cast<int>(cocycles.size()) - rank_prev);

        // Representatives: cocycles whose classes are independent modulo the
        // image of the previous differential, greedily in the deterministic
        // null-basis order.
        std::vector<AltForm> reps;
        if (!cocycles.empty()) {
            std::vector<std::vector<Scalar>> cols;
            if (k > 0) {
                const Matrix& prev = mats[static_cast<std::size_t>(k) - 1];
                for (int j = 0; j < prev.cols(); ++j) {
                    std::vector<Scalar> c(static_cast<std::size_t>(prev.rows()));
                    for (int i = 0; i < prev.rows(); ++i) c[static_cast<std::size_t>(i)] = prev.at(i, j);
                    cols.push_back(std::move(c));
                }
            }
            auto rank_of = [&](const std::vector<std::vector<Scalar>>& cs) {
                Matrix b(dim_k, static_cast<int>(cs.size()));
                for (std::size_t j = 0; j < cs.size(); ++j)
                    for (int i = 0; i < dim_k; ++i) b.at(i, static_cast<int>(j)) = cs[j][static_cast<std::size_t>(i)];
                return rank_exact(b);
            };
            int cur = rank_of(cols);
            for (const auto& z : cocycles) {
                cols.push_back(z);
                if (rank_of(cols) == cur + 1) {
                    ++cur;
                    reps.push_back(from_coords(n, k, z));
                } else {
                    cols.pop_back();
                }
            }
        }
        t.representatives.push_back(std::move(reps));
    }
    return t;
}

// Exactness solver: the full affine solution of d_θ σ = φ over 2-forms.
struct ExactnessResult {
    bool feasible = false;
    AltForm sigma;          // deterministic particular solution
    int rank = 0;           // rank of the d_θ matrix on Λ²
    int rank_augmented = 0; // rank of [matrix | φ]; +1 certifies non-exactness
};

inline ExactnessResult solve_exact(const LieAlgebra& g, const AltForm& phi, const AltForm& theta) {
    if (phi.degree() != 3) throw DimensionError("exactness solver expects a 3-form");
    Matrix m = d_theta_matrix(g, theta, 2);
    auto sol = solve_linear_exact(m, to_coords(phi));
    ExactnessResult r;
    r.feasible = sol.feasible;
    r.rank = sol.rank;
    r.rank_augmented = sol.rank_augmented;
    if (sol.feasible) r.sigma = from_coords(g.dim(), 2, sol.particular);
    return r;
}

// Basis of {X : L_X φ = 0}, by exact null space of X ↦ L_X φ.
inline std::vector<Vec> automorphism_algebra(const LieAlgebra& g, const AltForm& phi) {
    const int n = g.dim();
    // columns: L_{e_i} φ in Λ^deg coordinates
    auto target = multi_indices(n, phi.degree());
    Matrix m(static_cast<int>(target.size()), n);
    for (int i = 1; i <= n; ++i) {
        auto img = to_coords(g.lie_derivative(Vec::basis(n, i), phi));
        for (std::size_t r = 0; r < target.size(); ++r) m.at(static_cast<int>(r), i - 1) = img[r];
    }
    std::vector<Vec> basis;
    for (auto& v : null_space(m)) basis.emplace_back(n, v);
    return basis;
}

enum class Kind { first, second };

struct KindVerdict {
    Kind kind = Kind::second;
    std::vector<Vec> automorphism_basis;
    bool ell_theta_surjective = false;  // image is all of ℝ rather than {0}
    std::optional<Vec> witness;         // L_X φ = 0 with θ(X) = −1
};

// θ evaluated on the automorphism algebra: the structure is of the first
// kind iff some infinitesimal automorphism is transversal to ker θ.
inline KindVerdict kind(const LieAlgebra& g, const AltForm& phi, const AltForm& theta) {
    KindVerdict v;
    v.automorphism_basis = automorphism_algebra(g, phi);
    for (const auto& x : v.automorphism_basis) {
        Scalar val = pair_form_vector(theta, x);
        if (!val.is_zero()) {
            v.kind = Kind::first;
            v.ell_theta_surjective = true;
            v.witness = (Scalar(Rational(-1)) / val) * x;
            break;
        }
    }
    return v;
}

// Solves L_X φ − t·φ = φ with the linear side constraint t = θ(X) and the
// normalization t = −1; feasibility is equivalent to φ = d_θ(ι_X φ) with
// θ(X) = −1, i.e. to being of the first kind.
struct FirstKindResult {
    bool feasible = false;
    Vec witness;
};

inline FirstKindResult first_kind_solve(const LieAlgebra& g, const AltForm& phi, const AltForm& theta) {
    const int n = g.dim();
    auto target = multi_indices(n, phi.degree());
    const int rows = static_cast<int>(target.size());
    // unknowns: X (n), t (1)
    Matrix m(rows + 2, n + 1);
    std::vector<Scalar> rhs(static_cast<std::size_t>(rows) + 2);
    auto phic = to_coords(phi);
    for (int i = 1; i <= n; ++i) {
        auto img = to_coords(g.lie_derivative(Vec::basis(n, i), phi));
        for (int r = 0; r < rows; ++r) m.at(r, i - 1) = img[static_cast<std::size_t>(r)];
    }
    for (int r = 0; r < rows; ++r) {
        m.at(r, n) = -phic[static_cast<std::size_t>(r)];
        rhs[static_cast<std::size_t>(r)] = phic[static_cast<std::size_t>(r)];
    }
    // t = θ(X)
    auto th = to_coords(theta);
    for (int i = 0; i < n; ++i) m.at(rows, i) = th[static_cast<std::size_t>(i)];
    m.at(rows, n) = Scalar(Rational(-1));
    rhs[static_cast<std::size_t>(rows)] = Scalar(Rational(0));
    // t = −1
    m.at(rows + 1, n) = Scalar(Rational(1));
    rhs[static_cast<std::size_t>(rows) + 1] = Scalar(Rational(-1));

    auto sol = solve_linear_exact(m, rhs);
    FirstKindResult r;
    r.feasible = sol.feasible;
    if (sol.feasible) {
        std::vector<Scalar> xs(sol.particular.begin(), sol.particular.begin() + n);
        r.witness = Vec(n, xs);
    }
    return r;
}

} // namespace g2forge
