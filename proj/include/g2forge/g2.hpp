#pragma once

#include <cmath>

#include "g2forge/conformal.hpp"
#include "g2forge/curvature.hpp"

namespace g2forge {

// Everything specific to 3-forms defining G2-structures on 7-dimensional
// Lie algebras: the b map, metric and volume extraction, the type
// decompositions of 2- and 3-forms, intrinsic torsion, the Lee form and
// the classification flags.

enum class AnalysisRing { exact, floating };

// Coefficient of e^{1…7} in (1/6) ι_{e_i}φ ∧ ι_{e_j}φ ∧ φ. Works over any
// coefficient ring, including polynomials.
inline Scalar b_map_entry(const AltForm& phi, int i, int j) {
    if (phi.dim() != 7 || phi.degree() != 3) throw DimensionError("b map needs a 3-form in dim 7");
    const int n = 7;
    AltForm prod = wedge(wedge(interior(Vec::basis(n, i), phi), interior(Vec::basis(n, j), phi)), phi);
    FormIndex full{1, 2, 3, 4, 5, 6, 7};
    return prod.coeff(full) * Scalar(Rational(1, 6));
}

inline Matrix b_map(const AltForm& phi) {
    Matrix b(7, 7);
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) b.at(i - 1, j - 1) = b_map_entry(phi, i, j);
    return b;
}

struct Definiteness {
    bool definite = false;
    int sign = 0;  // +1 positive definite, −1 negative definite, 0 undecided/indefinite
};

namespace detail {

inline std::vector<Scalar> leading_minors(const Matrix& b) {
    std::vector<Scalar> out;
    for (int k = 1; k <= b.rows(); ++k) {
        Matrix m(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m.at(i, j) = b.at(i, j);
        out.push_back(determinant(m));
    }
    return out;
}

inline Ring matrix_ring(const Matrix& b) {
    Ring r = Ring::rational;
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Ring e = b.at(i, j).ring();
            if (e == Ring::polynomial) return Ring::polynomial;
            if (e == Ring::float64) r = Ring::float64;
        }
    return r;
}

} // namespace detail

// Definiteness of the symmetric b matrix by exact leading principal minor
// signs. Over polynomials only an identically-zero diagonal entry is
// reportable (it rules definiteness out); anything else is undecidable in
// that ring and throws RingError.
inline Definiteness is_g2(const AltForm& phi, double float_margin = 1e-9) {
    Matrix b = b_map(phi);
    Ring ring = detail::matrix_ring(b);
    if (ring == Ring::polynomial) {
        for (int i = 0; i < 7; ++i)
            if (b.at(i, i).is_zero()) return {false, 0};
        throw RingError("definiteness is undecidable over the polynomial ring");
    }
    if (ring == Ring::float64) {
        bool pos = true, neg = true;
        for (int k = 1; k <= 7; ++k) {
            Matrix m(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) m.at(i, j) = b.at(i, j);
            double d = determinant(m).to_double();
            if (!(d > float_margin)) pos = false;
            if (!((k % 2 == 1 ? -d : d) > float_margin)) neg = false;
        }
        if (pos) return {true, 1};
        if (neg) return {true, -1};
        return {false, 0};
    }
    auto minors = detail::leading_minors(b);
    bool pos = true, neg = true;
    for (int k = 1; k <= 7; ++k) {
        const Rational& d = minors[static_cast<std::size_t>(k) - 1].rational();
        if (d.sign() <= 0) pos = false;
        if ((k % 2 == 1 ? -d : d).sign() <= 0) neg = false;
    }
    if (pos) return {true, 1};
    if (neg) return {true, -1};
    return {false, 0};
}

struct TorsionForms {
    Scalar tau0;
    AltForm tau1;  // degree 1
    AltForm tau2;  // degree 2, in Λ²₁₄
    AltForm tau3;  // degree 3, in Λ³₂₇
};

struct G2Class {
    bool torsion_free = false;
    bool closed = false;
    bool coclosed = false;
    bool lcc = false;
    bool lcp = false;
    std::optional<AltForm> lee;
};

struct Deg2Split {
    AltForm kappa7, kappa14;
    Vec x;  // κ₇ = ι_X φ
};

struct Deg3Split {
    Scalar f;
    AltForm phi_part;  // f·φ
    AltForm alpha;     // degree 1
    AltForm omega7;    // *(φ∧α)
    AltForm gamma27;
};

// Full analysis of a definite 3-form: b matrix, induced metric and volume,
// Hodge star, the G2 type decompositions and the torsion data. Immutable
// after construction.
class G2Analysis {
public:
    G2Analysis(LieAlgebra g, AltForm phi, double tolerance = 1e-9)
        : algebra_(std::move(g)), phi_(std::move(phi)), tol_(tolerance) {
        if (algebra_.dim() != 7) throw DimensionError("G2 analysis needs a 7-dimensional algebra");
        if (phi_.dim() != 7 || phi_.degree() != 3) throw DimensionError("G2 analysis needs a 3-form");
        if (detail::matrix_ring(coords_matrix({phi_})) == Ring::polynomial)
            throw RingError("G2 analysis needs rational or float coefficients");

        bmat_ = b_map(phi_);
        auto def = is_g2(phi_, tol_);
        if (!def.definite) throw Error("3-form is not definite: it does not define a G2-structure");
        orientation_ = def.sign;

        Scalar det = determinant(bmat_);
        if (detail::matrix_ring(bmat_) == Ring::rational) {
            Rational absdet = det.rational().abs();
            auto root = absdet.nth_root(9);
            if (root) {
                ring_ = AnalysisRing::exact;
                volume_scale_ = Scalar(*root);
            } else {
                ring_ = AnalysisRing::floating;
                volume_scale_ = Scalar(std::pow(absdet.to_double(), 1.0 / 9.0));
            }
        } else {
            ring_ = AnalysisRing::floating;
            volume_scale_ = Scalar(std::pow(std::abs(det.to_double()), 1.0 / 9.0));
        }

        Scalar denom = orientation_ < 0 ? -volume_scale_ : volume_scale_;
        gram_ = Matrix(7, 7);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) {
                Scalar e = bmat_.at(i, j) / denom;
                gram_.at(i, j) = ring_ == AnalysisRing::floating ? Scalar(e.to_double()) : e;
            }
        if (ring_ == AnalysisRing::floating) {
            AltForm f(7, 3);
            for (const auto& [idx, c] : phi_.terms()) f.add_term(idx, Scalar(c.to_double()));
            phi_ = f;
        }

        hodge_ = make_hodge(Endo(gram_), volume_scale_, orientation_);
        star_phi_ = hodge_star(phi_, hodge_);
        dphi_ = algebra_.d(phi_);
        dstar_phi_ = algebra_.d(star_phi_);
        build_subspaces();
    }

    const LieAlgebra& algebra() const { return algebra_; }
    const AltForm& phi() const { return phi_; }
    const Matrix& bmat() const { return bmat_; }
    AnalysisRing ring() const { return ring_; }
    const Matrix& metric_gram() const { return gram_; }
    const Scalar& volume_scale() const { return volume_scale_; }
    int orientation_sign() const { return orientation_; }
    const AltForm& star_phi() const { return star_phi_; }
    const AltForm& dphi() const { return dphi_; }
    const AltForm& dstar_phi() const { return dstar_phi_; }
    double tolerance() const { return tol_; }

    AltForm star(const AltForm& a) const { return hodge_star(a, hodge_); }

    const std::vector<AltForm>& basis_2_14() const { return basis_2_14_; }
    const std::vector<AltForm>& basis_3_27() const { return basis_3_27_; }

    // κ = ι_X φ + κ₁₄ with κ₁₄ ∧ *φ = 0, by solving the 21×21 membership
    // system (never by projection identities; those are cross-checks).
    Deg2Split project2(const AltForm& kappa) const {
        if (kappa.degree() != 2) throw DimensionError("project2 expects a 2-form");
        auto c = solve_in_basis(m2_, to_coords(kappa));
        Vec x(7);
        for (int i = 0; i < 7; ++i) x[i] = c[static_cast<std::size_t>(i)];
        Deg2Split s;
        s.x = x;
        s.kappa7 = interior(x, phi_);
        s.kappa14 = kappa - s.kappa7;
        return s;
    }

    // α = f·φ + *(φ∧a) + γ₂₇ with γ₂₇∧φ = 0 = γ₂₇∧*φ.
    Deg3Split project3(const AltForm& gamma) const {
        if (gamma.degree() != 3) throw DimensionError("project3 expects a 3-form");
        auto c = solve_in_basis(m3_, to_coords(gamma));
        Deg3Split s;
        s.f = c[0];
        s.phi_part = s.f * phi_;
        AltForm alpha(7, 1);
        for (int i = 1; i <= 7; ++i)
            if (!c[static_cast<std::size_t>(i)].is_zero())
                alpha.add_term({static_cast<unsigned char>(i)}, c[static_cast<std::size_t>(i)]);
        s.alpha = alpha;
        s.omega7 = star(wedge(phi_, alpha));
        s.gamma27 = gamma - s.phi_part - s.omega7;
        return s;
    }

    // Unique solution of
    //   dφ  = τ₀ *φ + 3 τ₁∧φ + *τ₃,     d*φ = 4 τ₁∧*φ + τ₂∧φ
    // with τ₂ ∈ Λ²₁₄ and τ₃ ∈ Λ³₂₇, as one joint linear solve.
    TorsionForms torsion_forms() const {
        const int unknowns = 1 + 7 + 14 + 27;
        auto rows4 = multi_indices(7, 4);
        auto rows5 = multi_indices(7, 5);
        Matrix m(static_cast<int>(rows4.size() + rows5.size()), unknowns);
        std::vector<Scalar> rhs(rows4.size() + rows5.size());

        auto put4 = [&](int col, const AltForm& f) {
            auto v = to_coords(f);
            for (std::size_t r = 0; r < rows4.size(); ++r) m.at(static_cast<int>(r), col) = v[r];
        };
        auto put5 = [&](int col, const AltForm& f) {
            auto v = to_coords(f);
            for (std::size_t r = 0; r < rows5.size(); ++r)
                m.at(static_cast<int>(rows4.size() + r), col) = v[r];
        };

        put4(0, star_phi_);
        for (int i = 1; i <= 7; ++i) {
            AltForm ei = AltForm::monomial(7, {static_cast<unsigned char>(i)});
            put4(i, Scalar(Rational(3)) * wedge(ei, phi_));
            put5(i, Scalar(Rational(4)) * wedge(ei, star_phi_));
        }
        for (int k = 0; k < 14; ++k) put5(8 + k, wedge(basis_2_14_[static_cast<std::size_t>(k)], phi_));
        for (int k = 0; k < 27; ++k) put4(22 + k, star(basis_3_27_[static_cast<std::size_t>(k)]));

        auto dphic = to_coords(dphi_);
        auto dstarc = to_coords(dstar_phi_);
        for (std::size_t r = 0; r < rows4.size(); ++r) rhs[r] = dphic[r];
        for (std::size_t r = 0; r < rows5.size(); ++r) rhs[rows4.size() + r] = dstarc[r];

        std::vector<Scalar> c;
        if (ring_ == AnalysisRing::exact) {
            auto sol = solve_linear_exact(m, rhs);
            if (!sol.feasible) throw Error("torsion system is infeasible");
            c = sol.particular;
        } else {
            c = solve_float(m, rhs);
            auto residual = m.apply(c);
            for (std::size_t r = 0; r < rhs.size(); ++r)
                if (std::abs(residual[r].to_double() - rhs[r].to_double()) > tol_)
                    throw Error("torsion residual exceeds the float tolerance");
        }

        TorsionForms t;
        t.tau0 = c[0];
        AltForm tau1(7, 1);
        for (int i = 1; i <= 7; ++i)
            if (!c[static_cast<std::size_t>(i)].is_zero())
                tau1.add_term({static_cast<unsigned char>(i)}, c[static_cast<std::size_t>(i)]);
        t.tau1 = tau1;
        AltForm tau2(7, 2), tau3(7, 3);
        for (int k = 0; k < 14; ++k) tau2 += c[static_cast<std::size_t>(8 + k)] * basis_2_14_[static_cast<std::size_t>(k)];
        for (int k = 0; k < 27; ++k) tau3 += c[static_cast<std::size_t>(22 + k)] * basis_3_27_[static_cast<std::size_t>(k)];
        t.tau2 = tau2;
        t.tau3 = tau3;
        return t;
    }

    // θ = −1/4 *( *dφ ∧ φ ).
    AltForm lee_form() const {
        return Scalar(Rational(-1, 4)) * star(wedge(star(dphi_), phi_));
    }

    G2Class classify() const {
        G2Class c;
        c.closed = is_negligible(dphi_);
        c.coclosed = is_negligible(dstar_phi_);
        c.torsion_free = c.closed && c.coclosed;
        AltForm theta = lee_form();
        c.lcc = is_negligible(dphi_ - wedge(theta, phi_)) && is_negligible(algebra_.d(theta));
        if (c.lcc) {
            c.lee = theta;
            TorsionForms t = torsion_forms();
            c.lcp = is_negligible(t.tau2);
        }
        return c;
    }

    // FeUg subcomplex criterion: d(⟨φ⟩ ⊕ Λ³₂₇) ⊆ Λ⁴₇ ⊕ Λ⁴₂₇, tested on a
    // basis. A 4-form ρ misses the ⟨*φ⟩ line exactly when ρ∧φ = 0.
    bool lcc_subcomplex_check() const {
        std::vector<AltForm> b3;
        b3.push_back(phi_);
        for (const auto& g : basis_3_27_) b3.push_back(g);
        for (const auto& beta : b3)
            if (!is_negligible(wedge(algebra_.d(beta), phi_))) return false;
        return true;
    }

    bool is_negligible(const AltForm& f) const {
        if (ring_ == AnalysisRing::exact) return f.is_zero();
        for (const auto& [idx, c] : f.terms())
            if (std::abs(c.to_double()) > tol_) return false;
        return true;
    }

private:
    void build_subspaces() {
        // Λ²₁₄ = ker(κ ↦ κ ∧ *φ), Λ³₂₇ = ker(γ ↦ (γ∧φ, γ∧*φ)).
        auto mono2 = multi_indices(7, 2);
        auto rows6 = multi_indices(7, 6);
        Matrix k2(static_cast<int>(rows6.size()), static_cast<int>(mono2.size()));
        for (std::size_t j = 0; j < mono2.size(); ++j) {
            auto v = to_coords(wedge(AltForm::monomial(7, mono2[j]), star_phi_));
            for (std::size_t r = 0; r < rows6.size(); ++r) k2.at(static_cast<int>(r), static_cast<int>(j)) = v[r];
        }
        for (auto& v : ker(k2)) basis_2_14_.push_back(from_coords(7, 2, v));
        if (basis_2_14_.size() != 14) throw Error("Λ²₁₄ has unexpected dimension");

        auto mono3 = multi_indices(7, 3);
        auto rows6b = rows6;
        Matrix k3(static_cast<int>(rows6b.size()) + 1, static_cast<int>(mono3.size()));
        for (std::size_t j = 0; j < mono3.size(); ++j) {
            AltForm mono = AltForm::monomial(7, mono3[j]);
            auto v = to_coords(wedge(mono, phi_));
            for (std::size_t r = 0; r < rows6b.size(); ++r) k3.at(static_cast<int>(r), static_cast<int>(j)) = v[r];
            k3.at(static_cast<int>(rows6b.size()), static_cast<int>(j)) =
                wedge(mono, star_phi_).coeff({1, 2, 3, 4, 5, 6, 7});
        }
        for (auto& v : ker(k3)) basis_3_27_.push_back(from_coords(7, 3, v));
        if (basis_3_27_.size() != 27) throw Error("Λ³₂₇ has unexpected dimension");

        // Membership matrices for the two projections.
        m2_ = Matrix(21, 21);
        for (int i = 1; i <= 7; ++i) {
            auto v = to_coords(interior(Vec::basis(7, i), phi_));
            for (int r = 0; r < 21; ++r) m2_.at(r, i - 1) = v[static_cast<std::size_t>(r)];
        }
        for (int k = 0; k < 14; ++k) {
            auto v = to_coords(basis_2_14_[static_cast<std::size_t>(k)]);
            for (int r = 0; r < 21; ++r) m2_.at(r, 7 + k) = v[static_cast<std::size_t>(r)];
        }

        m3_ = Matrix(35, 35);
        {
            auto v = to_coords(phi_);
            for (int r = 0; r < 35; ++r) m3_.at(r, 0) = v[static_cast<std::size_t>(r)];
        }
        for (int i = 1; i <= 7; ++i) {
            AltForm ei = AltForm::monomial(7, {static_cast<unsigned char>(i)});
            auto v = to_coords(star(wedge(phi_, ei)));
            for (int r = 0; r < 35; ++r) m3_.at(r, i) = v[static_cast<std::size_t>(r)];
        }
        for (int k = 0; k < 27; ++k) {
            auto v = to_coords(basis_3_27_[static_cast<std::size_t>(k)]);
            for (int r = 0; r < 35; ++r) m3_.at(r, 8 + k) = v[static_cast<std::size_t>(r)];
        }
    }

    std::vector<std::vector<Scalar>> ker(const Matrix& m) const {
        if (ring_ == AnalysisRing::exact) return null_space(m);
        // Float ring: the membership constraints still have exact rational
        // coefficients only when φ does; fall back to exact arithmetic on
        // rationalized entries is not available, so use a tolerance-based
        // elimination on doubles.
        return float_null_space(m, tol_);
    }

    std::vector<Scalar> solve_in_basis(const Matrix& m, const std::vector<Scalar>& rhs) const {
        if (ring_ == AnalysisRing::exact) {
            auto sol = solve_linear_exact(m, rhs);
            if (!sol.feasible) throw Error("projection system is infeasible");
            return sol.particular;
        }
        return solve_float(m, rhs);
    }

    // Dense double solver (partial pivoting), for the float ring.
    static std::vector<Scalar> solve_float(const Matrix& a, const std::vector<Scalar>& b) {
        const int mrows = a.rows(), n = a.cols();
        std::vector<std::vector<double>> m(static_cast<std::size_t>(mrows),
                                           std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0));
        for (int i = 0; i < mrows; ++i) {
            for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.at(i, j).to_double();
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] = b[static_cast<std::size_t>(i)].to_double();
        }
        std::vector<int> piv_col;
        int row = 0;
        for (int col = 0; col < n && row < mrows; ++col) {
            int best = -1;
            double mag = 1e-13;
            for (int r = row; r < mrows; ++r)
                if (std::abs(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) > mag) {
                    mag = std::abs(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]);
                    best = r;
                }
            if (best < 0) continue;
            std::swap(m[static_cast<std::size_t>(row)], m[static_cast<std::size_t>(best)]);
            double p = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            for (int r = 0; r < mrows; ++r) {
                if (r == row) continue;
                double f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / p;
                if (f == 0.0) continue;
                for (int c2 = col; c2 <= n; ++c2)
                    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] -=
                        f * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c2)];
            }
            piv_col.push_back(col);
            ++row;
        }
        std::vector<Scalar> x(static_cast<std::size_t>(n), Scalar(0.0));
        for (int r = 0; r < static_cast<int>(piv_col.size()); ++r) {
            int c = piv_col[static_cast<std::size_t>(r)];
            x[static_cast<std::size_t>(c)] =
                Scalar(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)] /
                       m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        }
        return x;
    }

    static std::vector<std::vector<Scalar>> float_null_space(const Matrix& a, double tol) {
        const int mrows = a.rows(), n = a.cols();
        std::vector<std::vector<double>> m(static_cast<std::size_t>(mrows),
                                           std::vector<double>(static_cast<std::size_t>(n), 0.0));
        for (int i = 0; i < mrows; ++i)
            for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.at(i, j).to_double();
        std::vector<int> piv_of_col(static_cast<std::size_t>(n), -1);
        int row = 0;
        for (int col = 0; col < n && row < mrows; ++col) {
            int best = -1;
            double mag = tol;
            for (int r = row; r < mrows; ++r)
                if (std::abs(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) > mag) {
                    mag = std::abs(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]);
                    best = r;
                }
            if (best < 0) continue;
            std::swap(m[static_cast<std::size_t>(row)], m[static_cast<std::size_t>(best)]);
            double p = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            for (int r = 0; r < mrows; ++r) {
                if (r == row) continue;
                double f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / p;
                if (f == 0.0) continue;
                for (int c2 = 0; c2 < n; ++c2)
                    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] -=
                        f * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c2)];
            }
            piv_of_col[static_cast<std::size_t>(col)] = row;
            ++row;
        }
        std::vector<std::vector<Scalar>> basis;
        for (int f = 0; f < n; ++f) {
            if (piv_of_col[static_cast<std::size_t>(f)] >= 0) continue;
            std::vector<Scalar> v(static_cast<std::size_t>(n), Scalar(0.0));
            v[static_cast<std::size_t>(f)] = Scalar(1.0);
            for (int c = 0; c < n; ++c) {
                int r = piv_of_col[static_cast<std::size_t>(c)];
                if (r < 0) continue;
                v[static_cast<std::size_t>(c)] =
                    Scalar(-m[static_cast<std::size_t>(r)][static_cast<std::size_t>(f)] /
                           m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    LieAlgebra algebra_;
    AltForm phi_;
    double tol_;
    Matrix bmat_;
    AnalysisRing ring_ = AnalysisRing::exact;
    Matrix gram_;
    Scalar volume_scale_;
    int orientation_ = 1;
    HodgeData hodge_;
    AltForm star_phi_, dphi_, dstar_phi_;
    std::vector<AltForm> basis_2_14_, basis_3_27_;
    Matrix m2_, m3_;
};

// The spec-facing bundle: metric, volume scale, orientation and ring.
struct MetricVolume {
    AnalysisRing ring;
    Matrix gram;
    Scalar volume_scale;
    int orientation_sign;
};

inline MetricVolume metric_volume(const LieAlgebra& g, const AltForm& phi) {
    G2Analysis a(g, phi);
    return MetricVolume{a.ring(), a.metric_gram(), a.volume_scale(), a.orientation_sign()};
}

} // namespace g2forge
