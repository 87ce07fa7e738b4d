#pragma once

#include "g2forge/altform.hpp"

namespace g2forge {

// A Lie algebra stored through its dual structure equations: the list of
// 2-forms d e^k for k = 1..dim. Validity (the Jacobi identity) is exactly
// d∘d = 0 on basis 1-forms, which is the cheapest test in this encoding.
class LieAlgebra {
public:
    LieAlgebra() : dim_(0) {}  // empty placeholder; build via from_structure_constants

    static LieAlgebra from_structure_constants(int dim, std::vector<AltForm> differentials) {
        if (static_cast<int>(differentials.size()) != dim)
            throw DimensionError("need one differential per basis 1-form");
        for (const auto& f : differentials) {
            if (f.dim() != dim) throw DimensionError("differential ambient dimension mismatch");
            if (f.degree() != 2) throw DimensionError("structure differentials must be 2-forms");
        }
        LieAlgebra g;
        g.dim_ = dim;
        g.diff_ = std::move(differentials);
        for (int k = 1; k <= dim; ++k)
            if (!g.d(g.diff_[static_cast<std::size_t>(k) - 1]).is_zero()) throw JacobiError(k);
        return g;
    }

    static LieAlgebra abelian(int dim) {
        return from_structure_constants(dim, std::vector<AltForm>(static_cast<std::size_t>(dim), AltForm(dim, 2)));
    }

    int dim() const { return dim_; }

    // d e^k, 1-based.
    const AltForm& differential(int k) const { return diff_.at(static_cast<std::size_t>(k) - 1); }
    const std::vector<AltForm>& differentials() const { return diff_; }

    // Chevalley-Eilenberg differential, extended to all degrees as an
    // antiderivation: d(e^{i1…ik}) = Σ_p (−1)^{p−1} d e^{ip} ∧ e^{I∖ip}.
    AltForm d(const AltForm& g) const {
        if (g.dim() != dim_) throw DimensionError("ambient dimension mismatch");
        AltForm r(dim_, g.degree() + 1);
        for (const auto& [idx, c] : g.terms()) {
            for (std::size_t p = 0; p < idx.size(); ++p) {
                FormIndex rest;
                rest.reserve(idx.size() - 1);
                for (std::size_t q = 0; q < idx.size(); ++q)
                    if (q != p) rest.push_back(idx[q]);
                AltForm piece = wedge(differential(idx[p]), AltForm::monomial(dim_, rest));
                Scalar f = p % 2 == 0 ? c : -c;
                r += f * piece;
            }
        }
        return r;
    }

    // [e_i, e_j], from c^k_ij = −(d e^k)(e_i, e_j).
    Vec bracket(const Vec& x, const Vec& y) const {
        if (x.dim() != dim_ || y.dim() != dim_) throw DimensionError("ambient dimension mismatch");
        Vec r(dim_);
        for (int k = 1; k <= dim_; ++k)
            r[k - 1] = -evaluate(differential(k), {x, y});
        return r;
    }

    Endo ad(const Vec& x) const {
        Endo a(dim_);
        for (int j = 1; j <= dim_; ++j) {
            Vec col = bracket(x, Vec::basis(dim_, j));
            for (int i = 0; i < dim_; ++i) a.at(i, j - 1) = col[i];
        }
        return a;
    }

    // Cartan formula; constant coefficients, so L_X of a 0-form vanishes.
    AltForm lie_derivative(const Vec& x, const AltForm& g) const {
        if (g.degree() == 0) return AltForm(dim_, 0);
        return interior(x, d(g)) + d(interior(x, g));
    }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim_ == b.dim_ && a.diff_ == b.diff_;
    }
    friend bool operator!=(const LieAlgebra& a, const LieAlgebra& b) { return !(a == b); }

private:
    int dim_;
    std::vector<AltForm> diff_;
};

// Dual Leibniz test: A is a derivation iff A*(d e^k) = d(A* e^k) for all k.
inline bool is_derivation(const LieAlgebra& g, const Endo& a) {
    if (a.dim() != g.dim()) throw DimensionError("ambient dimension mismatch");
    for (int k = 1; k <= g.dim(); ++k) {
        if (endo_action(a, g.differential(k)) != g.d(a.dual_one_form(k))) return false;
    }
    return true;
}

struct Derivation {
    LieAlgebra base;
    Endo map;

    Derivation(LieAlgebra g, Endo a) : base(std::move(g)), map(std::move(a)) {
        if (!is_derivation(base, map)) throw Error("endomorphism is not a derivation");
    }
};

// h ⋊_D ℝ together with the data it came from. The extra covector e^{n+1}
// is the closed 1-form η dual to the extension direction ξ.
struct Extension {
    LieAlgebra base;
    Derivation derivation;
    LieAlgebra total;
    int eta_index;

    AltForm eta() const {
        return AltForm::monomial(total.dim(), {static_cast<unsigned char>(eta_index)});
    }
    Vec xi() const { return Vec::basis(total.dim(), eta_index); }
};

// Structure equations of the rank-one extension: for k <= n
//   d e^k = d_h e^k + (D* e^k) ∧ η,   d η = 0.
inline Extension rank_one_extension(const LieAlgebra& h, const Derivation& d) {
    const int n = h.dim();
    if (d.map.dim() != n) throw DimensionError("derivation dimension mismatch");
    const int m = n + 1;
    std::vector<AltForm> diffs;
    diffs.reserve(static_cast<std::size_t>(m));
    AltForm eta = AltForm::monomial(m, {static_cast<unsigned char>(m)});
    for (int k = 1; k <= n; ++k) {
        AltForm dk = h.differential(k).embedded(m);
        AltForm dual = d.map.dual_one_form(k).embedded(m);
        diffs.push_back(dk + wedge(dual, eta));
    }
    diffs.push_back(AltForm(m, 2));
    Extension e{h, d, LieAlgebra::from_structure_constants(m, std::move(diffs)), m};
    return e;
}

// The d of the extension applied to a form pulled back from the base:
//   d γ = d_h γ + (−1)^{k+1} D*γ ∧ η.
// Provided for cross-checking the extension against its defining identity.
inline AltForm extension_d_from_base(const Extension& e, const AltForm& gamma_on_base) {
    const int m = e.total.dim();
    AltForm g = gamma_on_base.embedded(m);
    AltForm dh = e.base.d(gamma_on_base).embedded(m);
    AltForm act = endo_action(e.derivation.map, gamma_on_base).embedded(m);
    AltForm tail = wedge(act, e.eta());
    if (gamma_on_base.degree() % 2 == 0) tail = -tail;  // (−1)^{k+1}
    return dh + tail;
}

struct AlgebraPredicates {
    bool nilpotent = false;
    bool solvable = false;
    bool unimodular = false;
    std::vector<Scalar> ad_traces;          // tr(ad_{e_i}) per basis vector
    std::vector<int> lower_central_dims;    // dims of g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …
    std::vector<int> derived_dims;          // dims of g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ …
};

namespace detail {

inline int span_rank(const std::vector<Vec>& vs, int dim) {
    if (vs.empty()) return 0;
    Matrix m(dim, static_cast<int>(vs.size()));
    for (std::size_t j = 0; j < vs.size(); ++j)
        for (int i = 0; i < dim; ++i) m.at(i, static_cast<int>(j)) = vs[j][i];
    return rank_exact(m);
}

// A maximal independent subset of vs, in order.
inline std::vector<Vec> span_basis(const std::vector<Vec>& vs, int dim) {
    std::vector<Vec> basis;
    for (const auto& v : vs) {
        if (v.is_zero()) continue;
        std::vector<Vec> trial = basis;
        trial.push_back(v);
        if (span_rank(trial, dim) > static_cast<int>(basis.size())) basis.push_back(v);
    }
    return basis;
}

} // namespace detail

inline AlgebraPredicates algebra_predicates(const LieAlgebra& g) {
    AlgebraPredicates p;
    const int n = g.dim();

    p.unimodular = true;
    for (int i = 1; i <= n; ++i) {
        Scalar t = g.ad(Vec::basis(n, i)).trace();
        if (!t.is_zero()) p.unimodular = false;
        p.ad_traces.push_back(t);
    }

    std::vector<Vec> full;
    for (int i = 1; i <= n; ++i) full.push_back(Vec::basis(n, i));

    // Lower central series.
    std::vector<Vec> cur = full;
    p.lower_central_dims.push_back(n);
    for (;;) {
        std::vector<Vec> next;
        for (const auto& x : full)
            for (const auto& y : cur) next.push_back(g.bracket(x, y));
        auto basis = detail::span_basis(next, n);
        int d = static_cast<int>(basis.size());
        if (d == p.lower_central_dims.back()) break;
        p.lower_central_dims.push_back(d);
        cur = std::move(basis);
        if (d == 0) break;
    }
    p.nilpotent = p.lower_central_dims.back() == 0;

    // Derived series.
    cur = full;
    p.derived_dims.push_back(n);
    for (;;) {
        std::vector<Vec> next;
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) next.push_back(g.bracket(cur[i], cur[j]));
        auto basis = detail::span_basis(next, n);
        int d = static_cast<int>(basis.size());
        if (d == p.derived_dims.back()) break;
        p.derived_dims.push_back(d);
        cur = std::move(basis);
        if (d == 0) break;
    }
    p.solvable = p.derived_dims.back() == 0;

    return p;
}

// A subspace (given by independent spanning vectors) that is closed under
// the bracket, re-expressed as a Lie algebra in its own basis.
struct Subalgebra {
    LieAlgebra algebra;
    std::vector<Vec> basis;  // in the ambient coordinates
};

inline Subalgebra subalgebra_span(const LieAlgebra& g, const std::vector<Vec>& basis) {
    const int n = g.dim();
    const int m = static_cast<int>(basis.size());
    Matrix b(n, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) b.at(i, j) = basis[static_cast<std::size_t>(j)][i];
    if (rank_exact(b) != m) throw Error("subalgebra spanning vectors are dependent");

    // c'^c_ab from [h_a, h_b] expressed in the sub-basis.
    std::vector<AltForm> diffs(static_cast<std::size_t>(m), AltForm(m, 2));
    for (int a = 0; a < m; ++a) {
        for (int bb = a + 1; bb < m; ++bb) {
            Vec w = g.bracket(basis[static_cast<std::size_t>(a)], basis[static_cast<std::size_t>(bb)]);
            auto sol = solve_linear_exact(b, w.coords());
            if (!sol.feasible) throw Error("subspace is not closed under the bracket");
            for (int c = 0; c < m; ++c) {
                if (sol.particular[static_cast<std::size_t>(c)].is_zero()) continue;
                diffs[static_cast<std::size_t>(c)].add_term(
                    {static_cast<unsigned char>(a + 1), static_cast<unsigned char>(bb + 1)},
                    -sol.particular[static_cast<std::size_t>(c)]);
            }
        }
    }
    return Subalgebra{LieAlgebra::from_structure_constants(m, std::move(diffs)), basis};
}

// Pullback of a k-form along the inclusion of a spanned subspace.
inline AltForm restrict_form(const AltForm& g, const std::vector<Vec>& basis) {
    const int m = static_cast<int>(basis.size());
    AltForm r(m, g.degree());
    for (const auto& idx : multi_indices(m, g.degree())) {
        std::vector<Vec> xs;
        xs.reserve(idx.size());
        for (auto v : idx) xs.push_back(basis[static_cast<std::size_t>(v) - 1]);
        Scalar c = evaluate(g, xs);
        if (!c.is_zero()) r.add_term(idx, c);
    }
    return r;
}

} // namespace g2forge
