#pragma once

#include <cmath>
#include <sstream>
#include <variant>
#include <type_traits>

#include "g2forge/polynomial.hpp"

namespace g2forge {

enum class Ring { rational, polynomial, float64 };

inline const char* ring_name(Ring r) {
    switch (r) {
        case Ring::rational: return "rational";
        case Ring::polynomial: return "polynomial";
        case Ring::float64: return "float64";
    }
    return "?";
}

// Coefficient-ring tower. Arithmetic promotes Rational into either of the
// other two rings; mixing Polynomial with Float64 has no meaning here and
// throws RingError.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(int n) : v_(Rational(n)) {}                 // NOLINT: implicit by design
    Scalar(long n) : v_(Rational(n)) {}                // NOLINT
    Scalar(Rational r) : v_(std::move(r)) {}           // NOLINT
    Scalar(Polynomial p) : v_(std::move(p)) {}         // NOLINT
    explicit Scalar(double d) : v_(d) {}

    Ring ring() const {
        if (std::holds_alternative<Rational>(v_)) return Ring::rational;
        if (std::holds_alternative<Polynomial>(v_)) return Ring::polynomial;
        return Ring::float64;
    }

    bool is_rational() const { return ring() == Ring::rational; }

    const Rational& rational() const {
        if (auto* r = std::get_if<Rational>(&v_)) return *r;
        throw RingError("scalar is not rational");
    }
    const Polynomial& polynomial() const {
        if (auto* p = std::get_if<Polynomial>(&v_)) return *p;
        throw RingError("scalar is not polynomial");
    }

    double to_double() const {
        if (auto* r = std::get_if<Rational>(&v_)) return r->to_double();
        if (auto* d = std::get_if<double>(&v_)) return *d;
        throw RingError("polynomial scalar has no float value");
    }

    bool is_zero() const {
        if (auto* r = std::get_if<Rational>(&v_)) return r->is_zero();
        if (auto* p = std::get_if<Polynomial>(&v_)) return p->is_zero();
        return std::get<double>(v_) == 0.0;
    }

    Scalar operator-() const {
        if (auto* r = std::get_if<Rational>(&v_)) return Scalar(-*r);
        if (auto* p = std::get_if<Polynomial>(&v_)) return Scalar(-*p);
        return Scalar(-std::get<double>(v_));
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return combine(a, b,
            [](const Rational& x, const Rational& y) { return Scalar(x + y); },
            [](const Polynomial& x, const Polynomial& y) { return Scalar(x + y); },
            [](double x, double y) { return Scalar(x + y); });
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return combine(a, b,
            [](const Rational& x, const Rational& y) { return Scalar(x - y); },
            [](const Polynomial& x, const Polynomial& y) { return Scalar(x - y); },
            [](double x, double y) { return Scalar(x - y); });
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return combine(a, b,
            [](const Rational& x, const Rational& y) { return Scalar(x * y); },
            [](const Polynomial& x, const Polynomial& y) { return Scalar(x * y); },
            [](double x, double y) { return Scalar(x * y); });
    }

    // Division by a rational or float scalar; dividing by a polynomial is
    // not part of the ring surface (use Polynomial::exact_div).
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        switch (b.ring()) {
            case Ring::rational:
                if (a.ring() == Ring::polynomial)
                    return Scalar(a.polynomial() * (Rational(1) / b.rational()));
                if (a.ring() == Ring::float64) return Scalar(a.to_double() / b.to_double());
                return Scalar(a.rational() / b.rational());
            case Ring::float64:
                if (a.ring() == Ring::polynomial) throw RingError("cannot mix polynomial and float64 scalars");
                return Scalar(a.to_double() / b.to_double());
            case Ring::polynomial: {
                auto q = numerator_poly(a).exact_div(b.polynomial());
                if (!q) throw RingError("inexact polynomial division");
                return Scalar(*q);
            }
        }
        throw RingError("unreachable");
    }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return combine(a, b,
            [](const Rational& x, const Rational& y) { return x == y; },
            [](const Polynomial& x, const Polynomial& y) { return x == y; },
            [](double x, double y) { return x == y; });
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const {
        if (auto* r = std::get_if<Rational>(&v_)) return r->to_string();
        if (auto* p = std::get_if<Polynomial>(&v_)) return p->to_string();
        std::ostringstream os;
        os << std::get<double>(v_);
        return os.str();
    }

private:
    static Polynomial numerator_poly(const Scalar& a) {
        if (a.ring() == Ring::polynomial) return a.polynomial();
        if (a.ring() == Ring::rational)
            return Polynomial::constant(make_vars({}), a.rational());
        throw RingError("cannot mix polynomial and float64 scalars");
    }

    template <class FR, class FP, class FF>
    static std::invoke_result_t<FR, const Rational&, const Rational&>
    combine(const Scalar& a, const Scalar& b, FR fr, FP fp, FF ff) {
        Ring ra = a.ring(), rb = b.ring();
        if (ra == Ring::rational && rb == Ring::rational) return fr(a.rational(), b.rational());
        if ((ra == Ring::polynomial && rb == Ring::float64) ||
            (ra == Ring::float64 && rb == Ring::polynomial))
            throw RingError("cannot mix polynomial and float64 scalars");
        if (ra == Ring::polynomial || rb == Ring::polynomial) {
            Polynomial pa = ra == Ring::polynomial
                                ? a.polynomial()
                                : Polynomial::constant(b.polynomial().vars(), a.rational());
            Polynomial pb = rb == Ring::polynomial
                                ? b.polynomial()
                                : Polynomial::constant(a.polynomial().vars(), b.rational());
            return fp(pa, pb);
        }
        return ff(a.to_double(), b.to_double());
    }

    std::variant<Rational, Polynomial, double> v_;
};

} // namespace g2forge
