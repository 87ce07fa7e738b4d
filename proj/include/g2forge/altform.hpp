#pragma once

#include <map>
#include <optional>

#include "g2forge/linsolve.hpp"

namespace g2forge {

// Strictly increasing list of basis indices in 1..dim, e.g. {1,3,5} for
// e^{135}. Kept small: ambient dimensions are capped at 9 so indices print
// as single digits.
using FormIndex = std::vector<unsigned char>;

namespace detail {

// Sign of the permutation sorting `idx`; nullopt if an index repeats.
inline std::optional<int> sort_with_sign(FormIndex& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return std::nullopt;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    }
    return sign;
}

// Merge two strictly increasing lists; sign is the parity of the shuffle,
// zero if they intersect.
inline int merge_with_sign(const FormIndex& a, const FormIndex& b, FormIndex& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    int sign = 1;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            if ((a.size() - i) % 2 == 1) sign = -sign;
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return sign;
}

} // namespace detail

// Sparse alternating k-form on an n-dimensional space with n <= 9.
// Invariants: every stored multi-index is strictly increasing with entries
// in 1..n, and no zero coefficients are kept.
class AltForm {
public:
    AltForm() : dim_(0), degree_(0) {}
    AltForm(int dim, int degree) : dim_(dim), degree_(degree) {
        if (dim < 1 || dim > 9) throw DimensionError("ambient dimension must be in 1..9");
        if (degree < 0) throw DimensionError("negative form degree");
    }

    static AltForm monomial(int dim, FormIndex idx, Scalar c = Scalar(Rational(1))) {
        AltForm f(dim, static_cast<int>(idx.size()));
        f.add_term(std::move(idx), std::move(c));
        return f;
    }

    static AltForm scalar(int dim, Scalar c) { return monomial(dim, {}, std::move(c)); }

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    const std::map<FormIndex, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    Scalar coeff(const FormIndex& idx) const {
        auto it = t_.find(idx);
        return it == t_.end() ? Scalar(Rational(0)) : it->second;
    }

    // Adds c·e^idx; idx may be unsorted (the permutation sign is absorbed)
    // and the term is dropped if an index repeats.
    void add_term(FormIndex idx, Scalar c) {
        if (static_cast<int>(idx.size()) != degree_)
            throw DimensionError("multi-index length does not match form degree");
        for (auto v : idx)
            if (v < 1 || v > dim_) throw DimensionError("multi-index entry out of range");
        auto sign = detail::sort_with_sign(idx);
        if (!sign) return;
        if (*sign < 0) c = -c;
        if (c.is_zero()) return;
        auto [it, inserted] = t_.try_emplace(std::move(idx), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    AltForm embedded(int new_dim) const {
        AltForm f(new_dim, degree_);
        for (const auto& [idx, c] : t_) {
            for (auto v : idx)
                if (v > new_dim) throw DimensionError("form does not fit in the smaller space");
            f.t_[idx] = c;
        }
        return f;
    }

    AltForm operator-() const {
        AltForm f(dim_, degree_);
        for (const auto& [idx, c] : t_) f.t_[idx] = -c;
        return f;
    }

    friend AltForm operator+(const AltForm& a, const AltForm& b) {
        check_compatible(a, b);
        AltForm f = a;
        for (const auto& [idx, c] : b.t_) f.add_term_sorted(idx, c);
        return f;
    }
    friend AltForm operator-(const AltForm& a, const AltForm& b) {
        check_compatible(a, b);
        AltForm f = a;
        for (const auto& [idx, c] : b.t_) f.add_term_sorted(idx, -c);
        return f;
    }
    friend AltForm operator*(const Scalar& s, const AltForm& a) {
        AltForm f(a.dim_, a.degree_);
        if (s.is_zero()) return f;
        for (const auto& [idx, c] : a.t_) {
            Scalar v = s * c;
            if (!v.is_zero()) f.t_[idx] = v;
        }
        return f;
    }
    friend AltForm operator*(const AltForm& a, const Scalar& s) { return s * a; }

    AltForm& operator+=(const AltForm& b) { return *this = *this + b; }
    AltForm& operator-=(const AltForm& b) { return *this = *this - b; }

    friend bool operator==(const AltForm& a, const AltForm& b) {
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.t_ == b.t_;
    }
    friend bool operator!=(const AltForm& a, const AltForm& b) { return !(a == b); }

private:
    static void check_compatible(const AltForm& a, const AltForm& b) {
        if (a.dim_ != b.dim_) throw DimensionError("ambient dimension mismatch");
        if (a.degree_ != b.degree_) throw DimensionError("form degree mismatch");
    }

    void add_term_sorted(const FormIndex& idx, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = t_.try_emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    int dim_;
    int degree_;
    std::map<FormIndex, Scalar> t_;
};

// Vector with dense Scalar coordinates.
class Vec {
public:
    Vec() : dim_(0) {}
    explicit Vec(int dim) : dim_(dim), c_(dim) {}
    Vec(int dim, std::vector<Scalar> coords) : dim_(dim), c_(std::move(coords)) {
        if (static_cast<int>(c_.size()) != dim) throw DimensionError("vector length mismatch");
    }

    static Vec basis(int dim, int i) {
        Vec v(dim);
        v.c_.at(i - 1) = Scalar(Rational(1));
        return v;
    }

    int dim() const { return dim_; }
    const Scalar& operator[](int i) const { return c_.at(i); }  // 0-based
    Scalar& operator[](int i) { return c_.at(i); }
    const std::vector<Scalar>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Vec operator+(const Vec& a, const Vec& b) {
        if (a.dim_ != b.dim_) throw DimensionError("ambient dimension mismatch");
        Vec r(a.dim_);
        for (int i = 0; i < a.dim_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Vec operator*(const Scalar& s, const Vec& a) {
        Vec r(a.dim_);
        for (int i = 0; i < a.dim_; ++i) r.c_[i] = s * a.c_[i];
        return r;
    }
    Vec operator-() const { return Scalar(Rational(-1)) * *this; }

    friend bool operator==(const Vec& a, const Vec& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

private:
    int dim_;
    std::vector<Scalar> c_;
};

// Endomorphism in the fixed basis; column j is the image of e_j.
class Endo {
public:
    Endo() = default;
    explicit Endo(int dim) : m_(dim, dim) {}
    explicit Endo(Matrix m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) throw DimensionError("endomorphism matrix must be square");
    }

    static Endo identity(int dim) { return Endo(Matrix::identity(dim)); }
    static Endo diagonal(const std::vector<Scalar>& d) {
        Endo e(static_cast<int>(d.size()));
        for (std::size_t i = 0; i < d.size(); ++i) e.m_.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
        return e;
    }

    int dim() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }
    Scalar& at(int i, int j) { return m_.at(i, j); }               // 0-based
    const Scalar& at(int i, int j) const { return m_.at(i, j); }

    Vec apply(const Vec& x) const {
        if (x.dim() != dim()) throw DimensionError("ambient dimension mismatch");
        return Vec(dim(), m_.apply(x.coords()));
    }

    // The transpose action on 1-forms: A* e^a = sum_b A(a,b) e^b (row a).
    AltForm dual_one_form(int a) const {
        AltForm f(dim(), 1);
        for (int b = 0; b < dim(); ++b) {
            const Scalar& v = m_.at(a - 1, b);
            if (!v.is_zero()) f.add_term({static_cast<unsigned char>(b + 1)}, v);
        }
        return f;
    }

    Scalar trace() const { return m_.trace(); }

    friend Endo operator*(const Endo& a, const Endo& b) { return Endo(a.m_ * b.m_); }
    friend Endo operator+(const Endo& a, const Endo& b) { return Endo(a.m_ + b.m_); }
    friend Endo operator-(const Endo& a, const Endo& b) { return Endo(a.m_ - b.m_); }
    friend Endo operator*(const Scalar& s, const Endo& a) { return Endo(s * a.m_); }
    friend bool operator==(const Endo& a, const Endo& b) { return a.m_ == b.m_; }
    friend bool operator!=(const Endo& a, const Endo& b) { return !(a == b); }

private:
    Matrix m_;
};

inline Endo commutator(const Endo& a, const Endo& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------
// Core exterior-algebra operations
// ---------------------------------------------------------------------------

inline AltForm wedge(const AltForm& a, const AltForm& b) {
    if (a.dim() != b.dim()) throw DimensionError("ambient dimension mismatch");
    const int deg = a.degree() + b.degree();
    AltForm r(a.dim(), deg);
    if (deg > a.dim()) return r;  // zero form of that degree
    FormIndex merged;
    for (const auto& [ia, ca] : a.terms()) {
        for (const auto& [ib, cb] : b.terms()) {
            int sign = detail::merge_with_sign(ia, ib, merged);
            if (sign == 0) continue;
            Scalar c = ca * cb;
            if (sign < 0) c = -c;
            r.add_term(merged, std::move(c));
        }
    }
    return r;
}

inline AltForm wedge(const AltForm& a, const AltForm& b, const AltForm& c) {
    return wedge(wedge(a, b), c);
}

// Interior product (contraction in the first slot).
inline AltForm interior(const Vec& x, const AltForm& a) {
    if (x.dim() != a.dim()) throw DimensionError("ambient dimension mismatch");
    if (a.degree() == 0) throw DimensionError("interior product of a 0-form");
    AltForm r(a.dim(), a.degree() - 1);
    for (const auto& [idx, c] : a.terms()) {
        for (std::size_t p = 0; p < idx.size(); ++p) {
            const Scalar& xp = x[idx[p] - 1];
            if (xp.is_zero()) continue;
            Scalar v = xp * c;
            if (p % 2 == 1) v = -v;
            FormIndex rest;
            rest.reserve(idx.size() - 1);
            for (std::size_t q = 0; q < idx.size(); ++q)
                if (q != p) rest.push_back(idx[q]);
            r.add_term(std::move(rest), std::move(v));
        }
    }
    return r;
}

// Derivation-style action of an endomorphism:
//   (A*γ)(X1,…,Xk) = Σ_i γ(X1,…,AXi,…,Xk).
inline AltForm endo_action(const Endo& a, const AltForm& g) {
    if (a.dim() != g.dim()) throw DimensionError("ambient dimension mismatch");
    AltForm r(g.dim(), g.degree());
    for (const auto& [idx, c] : g.terms()) {
        for (std::size_t p = 0; p < idx.size(); ++p) {
            for (int b = 1; b <= g.dim(); ++b) {
                const Scalar& m = a.at(idx[p] - 1, b - 1);
                if (m.is_zero()) continue;
                FormIndex repl = idx;
                repl[p] = static_cast<unsigned char>(b);
                r.add_term(std::move(repl), m * c);
            }
        }
    }
    return r;
}

// Full pullback (substitution in every slot): (P*γ)(X1,…,Xk) = γ(PX1,…,PXk).
inline AltForm pullback(const Endo& p, const AltForm& g) {
    if (p.dim() != g.dim()) throw DimensionError("ambient dimension mismatch");
    AltForm r(g.dim(), g.degree());
    for (const auto& [idx, c] : g.terms()) {
        AltForm prod = AltForm::scalar(g.dim(), c);
        for (auto i : idx) prod = wedge(prod, p.dual_one_form(i));
        r += prod;
    }
    return r;
}

// Evaluation of a k-form on k vectors.
inline Scalar evaluate(const AltForm& a, const std::vector<Vec>& xs) {
    if (static_cast<int>(xs.size()) != a.degree()) throw DimensionError("wrong number of vectors");
    for (const auto& x : xs)
        if (x.dim() != a.dim()) throw DimensionError("ambient dimension mismatch");
    Scalar acc;
    const int k = a.degree();
    for (const auto& [idx, c] : a.terms()) {
        Matrix m(k, k);
        for (int row = 0; row < k; ++row)
            for (int col = 0; col < k; ++col) m.at(row, col) = xs[col][idx[row] - 1];
        acc += c * determinant(m);
    }
    return acc;
}

// 1-form applied to a vector.
inline Scalar pair_form_vector(const AltForm& theta, const Vec& x) {
    if (theta.degree() != 1) throw DimensionError("pairing needs a 1-form");
    return evaluate(theta, {x});
}

// ---------------------------------------------------------------------------
// Monomial bases and coordinates
// ---------------------------------------------------------------------------

// All strictly increasing multi-indices of length k in 1..n, in
// lexicographic order.
inline std::vector<FormIndex> multi_indices(int n, int k) {
    if (k < 0) throw DimensionError("degree out of range");
    std::vector<FormIndex> out;
    if (k > n) return out;  // Λ^k = 0 above the top degree
    FormIndex cur(k);
    auto rec = [&](auto&& self, int pos, int next) -> void {
        if (pos == k) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n - (k - pos - 1); ++v) {
            cur[pos] = static_cast<unsigned char>(v);
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    return out;
}

// Deterministic monomial basis of Λ^k, lexicographic.
inline std::vector<AltForm> subspace_basis(int n, int k) {
    std::vector<AltForm> out;
    for (auto& idx : multi_indices(n, k)) out.push_back(AltForm::monomial(n, idx));
    return out;
}

inline std::vector<Scalar> to_coords(const AltForm& a) {
    auto idxs = multi_indices(a.dim(), a.degree());
    std::vector<Scalar> v(idxs.size());
    for (std::size_t i = 0; i < idxs.size(); ++i) v[i] = a.coeff(idxs[i]);
    return v;
}

inline AltForm from_coords(int n, int k, const std::vector<Scalar>& v) {
    auto idxs = multi_indices(n, k);
    if (v.size() != idxs.size()) throw DimensionError("coordinate length mismatch");
    AltForm f(n, k);
    for (std::size_t i = 0; i < idxs.size(); ++i)
        if (!v[i].is_zero()) f.add_term(idxs[i], v[i]);
    return f;
}

// Matrix whose columns are the coordinates of the given forms (all of one
// degree); handy to take ranks and null spaces of families of forms.
inline Matrix coords_matrix(const std::vector<AltForm>& forms) {
    if (forms.empty()) return Matrix(0, 0);
    const int n = forms[0].dim(), k = forms[0].degree();
    auto idxs = multi_indices(n, k);
    Matrix m(static_cast<int>(idxs.size()), static_cast<int>(forms.size()));
    for (std::size_t j = 0; j < forms.size(); ++j) {
        auto col = to_coords(forms[j]);
        for (std::size_t i = 0; i < idxs.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = col[i];
    }
    return m;
}

// ---------------------------------------------------------------------------
// Hodge star
// ---------------------------------------------------------------------------

// Cached metric data for the star operator. The volume form is
// orientation · volume_scale · e^{1…n}; consistency requires
// volume_scale² = det(gram).
struct HodgeData {
    Matrix gram;
    Matrix inv_gram;
    Scalar volume_scale;
    int orientation = 1;
};

inline HodgeData make_hodge(const Endo& metric, Scalar volume_scale, int orientation) {
    if (orientation != 1 && orientation != -1) throw Error("orientation sign must be ±1");
    if (!metric.matrix().is_symmetric()) throw Error("metric must be symmetric");
    if (volume_scale.ring() == Ring::rational && volume_scale.rational().sign() <= 0)
        throw Error("volume scale must be positive");
    HodgeData h;
    h.gram = metric.matrix();
    h.inv_gram = inverse(h.gram);
    h.volume_scale = std::move(volume_scale);
    h.orientation = orientation;
    return h;
}

// Inner product of monomials: ⟨e^I, e^K⟩ = det( g^{i_a k_b} ).
inline Scalar monomial_inner(const HodgeData& h, const FormIndex& i, const FormIndex& k) {
    const int n = static_cast<int>(i.size());
    if (n == 0) return Scalar(Rational(1));
    Matrix m(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) m.at(a, b) = h.inv_gram.at(i[a] - 1, k[b] - 1);
    return determinant(m);
}

inline Scalar inner_product(const HodgeData& h, const AltForm& a, const AltForm& b) {
    if (a.degree() != b.degree() || a.dim() != b.dim()) throw DimensionError("inner product shape mismatch");
    Scalar acc;
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) acc += ca * cb * monomial_inner(h, ia, ib);
    return acc;
}

// Defined by β ∧ *α = ⟨β, α⟩ dV for all β of the same degree as α.
inline AltForm hodge_star(const AltForm& a, const HodgeData& h) {
    const int n = a.dim(), k = a.degree();
    AltForm r(n, n - k);
    Scalar factor = h.orientation < 0 ? -h.volume_scale : h.volume_scale;
    FormIndex merged;
    for (const auto& idx : multi_indices(n, k)) {
        Scalar ip = Scalar(Rational(0));
        for (const auto& [ib, cb] : a.terms()) ip += cb * monomial_inner(h, idx, ib);
        if (ip.is_zero()) continue;
        FormIndex comp;
        comp.reserve(n - k);
        std::size_t p = 0;
        for (int v = 1; v <= n; ++v) {
            if (p < idx.size() && idx[p] == v) { ++p; continue; }
            comp.push_back(static_cast<unsigned char>(v));
        }
        int eps = detail::merge_with_sign(idx, comp, merged);
        Scalar c = ip * factor;
        if (eps < 0) c = -c;
        r.add_term(std::move(comp), std::move(c));
    }
    return r;
}

inline AltForm hodge_star(const AltForm& a, const Endo& metric, const Scalar& volume_scale,
                          int orientation_sign) {
    return hodge_star(a, make_hodge(metric, volume_scale, orientation_sign));
}

// ---------------------------------------------------------------------------
// Rendering (the text notation used throughout: "e14+e23", "1/2e17", …)
// ---------------------------------------------------------------------------

inline std::string render_form(const AltForm& a) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : a.terms()) {
        std::string coef;
        bool negative = false;
        if (c.ring() == Ring::rational) {
            Rational r = c.rational();
            negative = r.sign() < 0;
            Rational ab = r.abs();
            if (!ab.is_one() || idx.empty()) coef = ab.to_string();
        } else if (c.ring() == Ring::float64) {
            double d = c.to_double();
            negative = d < 0;
            std::ostringstream os;
            os << (d < 0 ? -d : d);
            coef = os.str();
        } else {
            coef = "(" + c.polynomial().to_string() + ")";
        }
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? "-" : "+";
        }
        out += coef;
        if (!idx.empty()) {
            out += "e";
            for (auto v : idx) out += static_cast<char>('0' + v);
        }
    }
    return out;
}

} // namespace g2forge
