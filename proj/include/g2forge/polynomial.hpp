#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "g2forge/rational.hpp"

namespace g2forge {

// Exponent vector, aligned with the owning variable set. Ordered
// lexicographically by std::vector's comparison, which gives every
// polynomial a deterministic canonical term order.
using Monomial = std::vector<unsigned char>;

// An ordered set of named indeterminates shared by a family of polynomials.
// The order is fixed at creation and is lexicographic by name, so equal
// variable sets always agree on exponent positions.
class PolyVars {
public:
    explicit PolyVars(std::vector<std::string> names, unsigned degree_bound = 8)
        : names_(std::move(names)), degree_bound_(degree_bound) {
        std::sort(names_.begin(), names_.end());
        for (std::size_t i = 1; i < names_.size(); ++i)
            if (names_[i] == names_[i - 1]) throw Error("duplicate polynomial variable: " + names_[i]);
    }

    std::size_t count() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    unsigned degree_bound() const { return degree_bound_; }

    std::size_t index_of(const std::string& name) const {
        auto it = std::lower_bound(names_.begin(), names_.end(), name);
        if (it == names_.end() || *it != name) throw Error("unknown polynomial variable: " + name);
        return static_cast<std::size_t>(it - names_.begin());
    }

    friend bool operator==(const PolyVars& a, const PolyVars& b) {
        return a.names_ == b.names_ && a.degree_bound_ == b.degree_bound_;
    }

private:
    std::vector<std::string> names_;
    unsigned degree_bound_;
};

using PolyVarsPtr = std::shared_ptr<const PolyVars>;

inline PolyVarsPtr make_vars(std::vector<std::string> names, unsigned degree_bound = 8) {
    return std::make_shared<const PolyVars>(std::move(names), degree_bound);
}

// Sparse multivariate polynomial over Rational. No zero coefficients are
// stored; the zero polynomial has no terms. Total degree is capped by the
// variable set's bound to keep symbolic computations from blowing up.
class Polynomial {
public:
    explicit Polynomial(PolyVarsPtr vars) : vars_(std::move(vars)) {
        if (!vars_) throw Error("polynomial without variable set");
    }

    static Polynomial constant(PolyVarsPtr vars, const Rational& c) {
        Polynomial p(std::move(vars));
        if (!c.is_zero()) p.terms_[Monomial(p.vars_->count(), 0)] = c;
        return p;
    }

    static Polynomial variable(PolyVarsPtr vars, const std::string& name) {
        Polynomial p(vars);
        Monomial m(vars->count(), 0);
        m[vars->index_of(name)] = 1;
        p.terms_[m] = Rational(1);
        return p;
    }

    const PolyVarsPtr& vars() const { return vars_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0;
    }

    // The constant value if this polynomial has no variable terms.
    std::optional<Rational> as_constant() const {
        if (terms_.empty()) return Rational(0);
        if (is_constant()) return terms_.begin()->second;
        return std::nullopt;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
        return d;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (m.size() != vars_->count()) throw Error("monomial arity mismatch");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(vars_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        auto [x, y] = aligned(a, b);
        Polynomial r = x;
        for (const auto& [m, c] : y.terms_) r.add_term(m, c);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        auto [x, y] = aligned(a, b);
        Polynomial r = x;
        for (const auto& [m, c] : y.terms_) r.add_term(m, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        auto [x, y] = aligned(a, b);
        Polynomial r(x.vars_);
        const unsigned bound = x.vars_->degree_bound();
        for (const auto& [ma, ca] : x.terms_) {
            for (const auto& [mb, cb] : y.terms_) {
                Monomial m(ma.size());
                unsigned deg = 0;
                for (std::size_t i = 0; i < m.size(); ++i) {
                    m[i] = static_cast<unsigned char>(ma[i] + mb[i]);
                    deg += m[i];
                }
                if (deg > bound)
                    throw Error("polynomial total degree exceeds bound " + std::to_string(bound));
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Rational& c) {
        Polynomial r(a.vars_);
        if (c.is_zero()) return r;
        for (const auto& [m, k] : a.terms_) r.terms_[m] = k * c;
        return r;
    }
    friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (*a.vars_ == *b.vars_) return a.terms_ == b.terms_;
        auto [x, y] = aligned(a, b);
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Rational evaluate(const std::vector<Rational>& values) const {
        if (values.size() != vars_->count()) throw Error("evaluation arity mismatch");
        Rational acc(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] > 0) t *= values[i].pow(m[i]);
            acc += t;
        }
        return acc;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c.abs();
            if (first) {
                if (c.sign() < 0) out += "-";
                first = false;
            } else {
                out += c.sign() < 0 ? " - " : " + ";
            }
            std::string factors;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (!factors.empty()) factors += "*";
                factors += vars_->name(i);
                if (m[i] > 1) factors += "^" + std::to_string(static_cast<int>(m[i]));
            }
            if (factors.empty()) {
                out += a.to_string();
            } else {
                if (!a.is_one()) out += a.to_string() + "*";
                out += factors;
            }
        }
        return out;
    }

    // Exact division: returns quotient when `den` divides this polynomial
    // exactly, nullopt otherwise. Long division against the leading term in
    // the monomial order.
    std::optional<Polynomial> exact_div(const Polynomial& den) const {
        if (den.is_zero()) throw Error("polynomial division by zero");
        auto [num, d] = aligned(*this, den);
        Polynomial q(num.vars_);
        Polynomial r = num;
        const auto& [dm, dc] = *d.terms_.rbegin();  // leading term (largest monomial)
        while (!r.is_zero()) {
            const auto& [rm, rc] = *r.terms_.rbegin();
            Monomial t(rm.size());
            for (std::size_t i = 0; i < rm.size(); ++i) {
                if (rm[i] < dm[i]) return std::nullopt;
                t[i] = static_cast<unsigned char>(rm[i] - dm[i]);
            }
            Rational tc = rc / dc;
            q.add_term(t, tc);
            Polynomial piece(num.vars_);
            piece.add_term(t, tc);
            r = r - piece * d;
        }
        return q;
    }

private:
    static unsigned monomial_degree(const Monomial& m) {
        unsigned d = 0;
        for (auto e : m) d += e;
        return d;
    }

    // Rewrites both operands over a common variable set (the union).
    static std::pair<Polynomial, Polynomial> aligned(const Polynomial& a, const Polynomial& b) {
        if (a.vars_ == b.vars_ || *a.vars_ == *b.vars_) return {a, b};
        std::vector<std::string> merged = a.vars_->names();
        for (const auto& n : b.vars_->names())
            if (!std::binary_search(merged.begin(), merged.end(), n)) merged.push_back(n);
        auto vars = make_vars(std::move(merged),
                              std::max(a.vars_->degree_bound(), b.vars_->degree_bound()));
        return {a.remapped(vars), b.remapped(vars)};
    }

    Polynomial remapped(const PolyVarsPtr& vars) const {
        std::vector<std::size_t> pos(vars_->count());
        for (std::size_t i = 0; i < vars_->count(); ++i) pos[i] = vars->index_of(vars_->name(i));
        Polynomial r(vars);
        for (const auto& [m, c] : terms_) {
            Monomial nm(vars->count(), 0);
            for (std::size_t i = 0; i < m.size(); ++i) nm[pos[i]] = m[i];
            r.terms_[nm] = c;
        }
        return r;
    }

    PolyVarsPtr vars_;
    std::map<Monomial, Rational> terms_;
};

} // namespace g2forge
