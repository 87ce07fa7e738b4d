#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "g2forge/errors.hpp"

namespace g2forge {

// Exact rational number. Always stored reduced with positive denominator
// (gmp canonical form); the canonical zero is 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}           // NOLINT: implicit by design
    Rational(int n) : q_(n) {}            // NOLINT
    Rational(long num, long den) : q_(num, den) {
        if (den == 0) throw Error("rational with zero denominator");
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}

    // Accepts "n", "-n", "n/d".
    static Rational from_string(const std::string& s) {
        try {
            Rational r{mpq_class(s)};
            return r;
        } catch (const std::invalid_argument&) {
            throw Error("malformed rational literal: " + s);
        }
    }

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw Error("rational division by zero");
        return Rational(mpq_class(a.q_ / b.q_));
    }

    Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
    Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
    Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational pow(long e) const {
        if (e < 0) {
            if (is_zero()) throw Error("zero to a negative power");
            return (Rational(1) / *this).pow(-e);
        }
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        return Rational(mpq_class(num, den));
    }

    // Exact n-th root when this is a perfect n-th power of a rational
    // (numerator and denominator each a perfect n-th power), else nullopt.
    // For even n the input must be non-negative; the non-negative root is
    // returned.
    std::optional<Rational> nth_root(unsigned n) const {
        if (n == 0) throw Error("0th root");
        if (sign() < 0) {
            if (n % 2 == 0) return std::nullopt;
            auto r = (-*this).nth_root(n);
            if (!r) return std::nullopt;
            return -*r;
        }
        mpz_class rn, rd;
        int exact_n = mpz_root(rn.get_mpz_t(), q_.get_num().get_mpz_t(), n);
        if (!exact_n) return std::nullopt;
        int exact_d = mpz_root(rd.get_mpz_t(), q_.get_den().get_mpz_t(), n);
        if (!exact_d) return std::nullopt;
        return Rational(mpq_class(rn, rd));
    }

    double to_double() const { return q_.get_d(); }

    std::string to_string() const { return q_.get_str(); }

private:
    mpq_class q_;
};

inline Rational gcd(const Rational& a, const Rational& b) {
    if (!a.is_integer() || !b.is_integer()) throw Error("gcd of non-integers");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    return Rational(g);
}

} // namespace g2forge
