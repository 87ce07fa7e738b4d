#pragma once

#include "g2forge/g2.hpp"

namespace g2forge {

// SU(3)-structures on 6-dimensional Lie algebras, validated through the
// stable-form construction: the 3-form ψ determines K with ι_{K X} vol =
// ι_X ψ ∧ ψ, λ(ψ) = tr(K²)/6 must be negative, J = ±K/√−λ, and the sign
// is fixed by positive definiteness of g = ω(·, J·). The imaginary part is
// ψ̂ = −(1/3) J*ψ, normalized so that ω³ = (3/2) ψ∧ψ̂.

struct SU3Pair {
    LieAlgebra algebra;
    AltForm omega;
    AltForm psi;
    AltForm psi_hat;
    Endo j;
    Matrix gram;  // g = ω(·, J·)
};

struct SU3Validation {
    std::optional<SU3Pair> pair;
    std::string failed;  // first failed criterion when pair is absent

    bool ok() const { return pair.has_value(); }
};

// f = s·g for a scalar s, when such s exists.
inline std::optional<Scalar> proportional_scalar(const AltForm& f, const AltForm& g) {
    if (f.dim() != g.dim() || f.degree() != g.degree()) return std::nullopt;
    if (g.is_zero()) {
        if (f.is_zero()) return Scalar(Rational(0));
        return std::nullopt;
    }
    const auto& [idx, base] = *g.terms().begin();
    Scalar s = f.coeff(idx) / base;
    if (f == s * g) return s;
    return std::nullopt;
}

namespace detail {

// K from ι_{K e_i} e^{1…6} = ι_{e_i}ψ ∧ ψ; exact over rationals.
inline Endo stable_form_k(const AltForm& psi) {
    const int n = 6;
    Endo k(n);
    for (int i = 1; i <= n; ++i) {
        AltForm xi = wedge(interior(Vec::basis(n, i), psi), psi);
        // ι_{e_j} e^{1…6} = (−1)^{j−1} e^{1…ĵ…6}
        for (int j = 1; j <= n; ++j) {
            FormIndex idx;
            for (int v = 1; v <= n; ++v)
                if (v != j) idx.push_back(static_cast<unsigned char>(v));
            Scalar d = xi.coeff(idx);
            if (j % 2 == 0) d = -d;
            k.at(j - 1, i - 1) = d;
        }
    }
    return k;
}

inline bool positive_definite(const Matrix& m) {
    for (int k = 1; k <= m.rows(); ++k) {
        Matrix minor(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor.at(i, j) = m.at(i, j);
        Scalar d = determinant(minor);
        if (d.ring() != Ring::rational || d.rational().sign() <= 0) return false;
    }
    return true;
}

} // namespace detail

inline SU3Validation validate_su3(const LieAlgebra& h, const AltForm& omega, const AltForm& psi) {
    SU3Validation v;
    if (h.dim() != 6 || omega.dim() != 6 || psi.dim() != 6) {
        v.failed = "ambient dimension must be 6";
        return v;
    }
    if (omega.degree() != 2 || psi.degree() != 3) {
        v.failed = "omega must have degree 2 and psi degree 3";
        return v;
    }
    if (!wedge(omega, psi).is_zero()) {
        v.failed = "omega ∧ psi != 0";
        return v;
    }
    AltForm omega3 = wedge(wedge(omega, omega), omega);
    if (omega3.is_zero()) {
        v.failed = "omega^3 = 0 (omega is degenerate)";
        return v;
    }

    Endo k = detail::stable_form_k(psi);
    Scalar lambda = (k * k).trace() / Scalar(Rational(6));
    if (lambda.ring() != Ring::rational || lambda.rational().sign() >= 0) {
        v.failed = "psi is not stable with lambda < 0";
        return v;
    }
    if (k * k != lambda * Endo::identity(6)) {
        v.failed = "K² != λ·Id";
        return v;
    }
    auto root = (-lambda.rational()).nth_root(2);
    if (!root) {
        v.failed = "normalization: √−λ(ψ) is irrational, ω³ = (3/2) ψ∧ψ̂ cannot hold";
        return v;
    }
    Scalar s(*root);

    for (int eps : {1, -1}) {
        Endo j = Scalar(Rational(eps)) * k;
        j = Scalar(Rational(1)) / s * j;
        // g = ω(·, J·)
        Matrix gram(6, 6);
        for (int a = 1; a <= 6; ++a) {
            for (int b = 1; b <= 6; ++b)
                gram.at(a - 1, b - 1) = evaluate(omega, {Vec::basis(6, a), j.apply(Vec::basis(6, b))});
        }
        if (!gram.is_symmetric() || !detail::positive_definite(gram)) continue;

        AltForm psi_hat = Scalar(Rational(-1, 3)) * endo_action(j, psi);
        if (!wedge(omega, psi_hat).is_zero()) {
            v.failed = "omega ∧ psi_hat != 0";
            return v;
        }
        if (Scalar(Rational(3, 2)) * wedge(psi, psi_hat) != omega3) {
            v.failed = "normalization ω³ = (3/2) ψ∧ψ̂ fails";
            return v;
        }
        if (j * j != Scalar(Rational(-1)) * Endo::identity(6)) {
            v.failed = "J² != −Id";
            return v;
        }
        if (pullback(j, omega) != omega) {
            v.failed = "ω(J·,J·) != ω";
            return v;
        }
        v.pair = SU3Pair{h, omega, psi, psi_hat, j, gram};
        return v;
    }
    v.failed = "no sign of J makes ω(·,J·) positive definite";
    return v;
}

struct SU3Class {
    bool half_flat = false;
    std::optional<Scalar> coupled_constant;  // present when dω = c·ψ
    bool symplectic_half_flat = false;

    bool coupled() const {
        return coupled_constant.has_value() && !coupled_constant->is_zero();
    }
};

inline SU3Class classify_su3(const SU3Pair& pair) {
    SU3Class c;
    AltForm domega = pair.algebra.d(pair.omega);
    AltForm dpsi = pair.algebra.d(pair.psi);
    c.half_flat = wedge(domega, pair.omega).is_zero() && dpsi.is_zero();
    c.coupled_constant = proportional_scalar(domega, pair.psi);
    c.symplectic_half_flat = c.half_flat && domega.is_zero();
    return c;
}

// Rank-one bridge: the G2-structure φ = ω∧η + ψ on h ⋊_D ℝ, together with
// what the coupled data predicts about it:
//   D*ψ = −(a+c)ψ  ⇔  φ LCC with Lee form a·η (closed iff a = 0);
//   if additionally D*ω = μω with μ ≠ −c, φ = d_θ(ω/c) is exact with
//   θ = −(c+μ)η, and of the first kind iff μ = 0.
struct G2Prediction {
    bool available = false;  // D*ψ proportional to ψ on a coupled pair
    Scalar a;
    AltForm lee;
    bool closed = false;
    bool has_mu = false;
    Scalar mu;
    bool exact = false;
    AltForm exact_witness;  // ω/c, lifted to the extension
    bool first_kind = false;
};

struct SU3ToG2 {
    Extension extension;
    AltForm phi;
    G2Prediction prediction;
};

inline SU3ToG2 g2_from_su3(const SU3Pair& pair, const Derivation& d) {
    Extension ext = rank_one_extension(pair.algebra, d);
    const int m = ext.total.dim();
    AltForm phi = wedge(pair.omega.embedded(m), ext.eta()) + pair.psi.embedded(m);

    SU3ToG2 out{ext, phi, {}};
    auto cls = classify_su3(pair);
    if (!cls.coupled()) return out;
    Scalar c = *cls.coupled_constant;

    auto s = proportional_scalar(endo_action(d.map, pair.psi), pair.psi);
    if (!s) return out;

    G2Prediction& p = out.prediction;
    p.available = true;
    p.a = -c - *s;
    p.lee = p.a * ext.eta();
    p.closed = p.a.is_zero();

    auto mu = proportional_scalar(endo_action(d.map, pair.omega), pair.omega);
    if (mu) {
        p.has_mu = true;
        p.mu = *mu;
        if (*mu != -c) {
            p.exact = true;
            p.exact_witness = (Scalar(Rational(1)) / c) * pair.omega.embedded(m);
            p.first_kind = mu->is_zero();
        }
    }
    return out;
}

// The converse split: an exact LCC structure φ = d_θ(ι_X φ) with θ(X) ≠ 0
// splits g as ker θ ⊕ ⟨X⟩, with a coupled SU(3)-structure on the kernel and
// the derivation D = [X, ·]. The sign ε is free; the default makes the
// coupling constant c = ε|X|⁻¹ carry the sign of −θ(X). When |X| is
// irrational the induced pair is only available in floats, but every
// verdict upstream (LCC, kind) was already decided exactly.
struct SplitResult {
    Subalgebra base;                  // ker θ with its inherited brackets
    AltForm omega, psi;               // induced pair on the kernel basis
    Endo derivation;                  // D = [X,·] in the kernel basis
    Scalar coupling;                  // c = ε |X|⁻¹
    Scalar mu;                        // D*ω = μ ω, μ = −(1 + θ(X))
    int epsilon = 1;
    AnalysisRing ring = AnalysisRing::exact;
    SU3Validation validation;         // exact ring only
};

inline SplitResult split_exact_lcc(const LieAlgebra& g, const AltForm& phi, const AltForm& theta,
                                   const Vec& x, std::optional<int> epsilon = std::nullopt) {
    if (g.dim() != 7) throw DimensionError("split expects a 7-dimensional algebra");
    if (theta.degree() != 1 || theta.is_zero()) throw Error("lee form must be a nonzero 1-form");
    if (!g.d(theta).is_zero()) throw Error("lee form must be closed");
    Scalar tx = pair_form_vector(theta, x);
    if (tx.is_zero()) throw Error("precondition θ(X) ≠ 0 fails");

    AltForm sigma = interior(x, phi);
    if (g.d(sigma) - wedge(theta, sigma) != phi)
        throw Error("phi is not d_θ(ι_X φ) for the given X");

    G2Analysis analysis(g, phi);

    // ker θ, deterministic basis from the exact null space.
    Matrix tm(1, 7);
    {
        auto tc = to_coords(theta);
        for (int i = 0; i < 7; ++i) tm.at(0, i) = tc[static_cast<std::size_t>(i)];
    }
    std::vector<Vec> basis;
    for (auto& v : null_space(tm)) basis.emplace_back(7, v);
    if (basis.size() != 6) throw Error("ker θ has unexpected dimension");

    // g_φ-orthogonality of the split and |X|².
    MetricData gphi(g, analysis.metric_gram());
    for (const auto& h : basis)
        if (!gphi.inner(h, x).is_zero()) throw Error("ker θ is not g_φ-orthogonal to X");
    Scalar xnorm2 = gphi.inner(x, x);

    SplitResult r;
    r.base = subalgebra_span(g, basis);
    int tx_sign = tx.ring() == Ring::rational ? tx.rational().sign() : (tx.to_double() < 0 ? -1 : 1);
    r.epsilon = epsilon.value_or(tx_sign < 0 ? 1 : -1);
    if (r.epsilon != 1 && r.epsilon != -1) throw Error("epsilon must be ±1");

    std::optional<Rational> root;
    if (xnorm2.ring() == Ring::rational) root = xnorm2.rational().nth_root(2);
    Scalar inv_norm = root ? Scalar(Rational(1) / *root)
                           : Scalar(1.0 / std::sqrt(xnorm2.to_double()));
    r.ring = root ? AnalysisRing::exact : AnalysisRing::floating;
    r.coupling = Scalar(Rational(r.epsilon)) * inv_norm;

    AltForm sigma_h = restrict_form(sigma, basis);
    r.omega = r.coupling * sigma_h;  // ε|X|⁻¹ σ|_h
    r.psi = restrict_form(phi, basis);
    r.mu = -(Scalar(Rational(1)) + tx);

    // D = [X, ·] expressed in the kernel basis.
    Matrix bm(7, 6);
    for (int j = 0; j < 6; ++j)
        for (int i = 0; i < 7; ++i) bm.at(i, j) = basis[static_cast<std::size_t>(j)][i];
    Endo dmap(6);
    for (int a = 0; a < 6; ++a) {
        Vec w = g.bracket(x, basis[static_cast<std::size_t>(a)]);
        auto sol = solve_linear_exact(bm, w.coords());
        if (!sol.feasible) throw Error("[X, ker θ] does not stay in ker θ");
        for (int i = 0; i < 6; ++i) dmap.at(i, a) = sol.particular[static_cast<std::size_t>(i)];
    }
    r.derivation = dmap;

    // Defining identities of the split.
    if (r.ring == AnalysisRing::exact) {
        if (r.base.algebra.d(r.omega) != r.coupling * r.psi)
            throw Error("split inconsistency: d_h ω != c ψ");
        if (endo_action(dmap, r.omega) != r.mu * r.omega)
            throw Error("split inconsistency: D*ω != −(1+θ(X)) ω");
        r.validation = validate_su3(r.base.algebra, r.omega, r.psi);
    }
    return r;
}

} // namespace g2forge
