#pragma once

#include <cctype>

#include "g2forge/liealg.hpp"

#include <json.hpp>

namespace g2forge {

// Parser for the structure-equation notation:
//   tuple := "(" entry ("," entry)* ")"
//   entry := "0" | [sign] term (("+"|"-") term)*
//   term  := [coef] "e" digit{k}
//   coef  := integer | integer "/" integer | decimal
// Whitespace-insensitive; indices are single digits (so dim <= 9) and must
// be strictly increasing inside a term. All errors carry line/column.
namespace detail {

class Cursor {
public:
    explicit Cursor(const std::string& text) : s_(&text) {}

    void skip_ws() {
        while (pos_ < s_->size() && std::isspace(static_cast<unsigned char>((*s_)[pos_]))) advance();
    }
    bool eof() {
        skip_ws();
        return pos_ >= s_->size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_->size() ? (*s_)[pos_] : '\0';
    }
    char raw_peek() const { return pos_ < s_->size() ? (*s_)[pos_] : '\0'; }
    void advance() {
        if (pos_ >= s_->size()) return;
        if ((*s_)[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void expect(char c, const char* what) {
        if (peek() != c) fail(std::string("expected ") + what);
        advance();
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

    std::string digits() {
        std::string out;
        while (pos_ < s_->size() && std::isdigit(static_cast<unsigned char>((*s_)[pos_]))) {
            out += (*s_)[pos_];
            advance();
        }
        return out;
    }

private:
    const std::string* s_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// integer | integer "/" integer | decimal — always non-negative here;
// signs are consumed by the entry parser.
inline Rational parse_coefficient(Cursor& c) {
    std::string num = c.digits();
    if (num.empty()) c.fail("expected a number");
    if (c.raw_peek() == '/') {
        c.advance();
        std::string den = c.digits();
        if (den.empty()) c.fail("expected a denominator");
        if (Rational::from_string(den).is_zero()) c.fail("zero denominator");
        return Rational::from_string(num + "/" + den);
    }
    if (c.raw_peek() == '.') {
        c.advance();
        std::string frac = c.digits();
        if (frac.empty()) c.fail("expected decimal digits");
        Rational scale = Rational(10).pow(static_cast<long>(frac.size()));
        return Rational::from_string(num + frac) / scale;
    }
    return Rational::from_string(num);
}

// [coef] "e" digit{degree}
inline void parse_term(Cursor& c, int dim, int degree, int sign, AltForm& acc) {
    Rational coef(1);
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) coef = parse_coefficient(c);
    if (c.peek() != 'e') c.fail("expected a basis monomial like e12");
    c.advance();
    FormIndex idx;
    while (std::isdigit(static_cast<unsigned char>(c.raw_peek()))) {
        int v = c.raw_peek() - '0';
        if (v < 1 || v > dim) c.fail("basis index out of range 1.." + std::to_string(dim));
        if (!idx.empty() && v <= idx.back()) c.fail("indices must be strictly increasing");
        idx.push_back(static_cast<unsigned char>(v));
        c.advance();
    }
    if (static_cast<int>(idx.size()) != degree)
        c.fail("expected a degree-" + std::to_string(degree) + " monomial");
    acc.add_term(std::move(idx), Scalar(sign < 0 ? -coef : coef));
}

inline AltForm parse_entry(Cursor& c, int dim, int degree) {
    AltForm acc(dim, degree);
    if (c.peek() == '0') {
        // Lone "0" is the zero entry; "0.5e12" and "0e12"-style coefficients
        // continue as a term.
        Cursor saved = c;
        c.advance();
        char next = c.raw_peek();
        if (!std::isdigit(static_cast<unsigned char>(next)) && next != '.' && next != '/' && next != 'e')
            return acc;
        c = saved;
    }
    int sign = 1;
    if (c.peek() == '-' || c.peek() == '+') {
        sign = c.peek() == '-' ? -1 : 1;
        c.advance();
    }
    parse_term(c, dim, degree, sign, acc);
    while (c.peek() == '+' || c.peek() == '-') {
        sign = c.peek() == '-' ? -1 : 1;
        c.advance();
        parse_term(c, dim, degree, sign, acc);
    }
    return acc;
}

} // namespace detail

// A single form expression, e.g. "e127+e347-2e135" or "0".
inline AltForm parse_form(const std::string& text, int dim, int degree) {
    detail::Cursor c(text);
    AltForm f = detail::parse_entry(c, dim, degree);
    if (!c.eof()) c.fail("unexpected trailing input");
    return f;
}

// "(d e^1, …, d e^n)" — the entry count fixes the dimension.
inline LieAlgebra parse_structure_tuple(const std::string& text) {
    detail::Cursor c(text);
    c.expect('(', "'('");
    // Count entries first to learn the dimension: a quick scan of commas at
    // depth zero would do, but entries contain no parentheses, so split on
    // commas directly.
    std::vector<std::string> pieces;
    std::string cur;
    int line = 1, col = 1;
    bool closed = false;
    while (!c.eof()) {
        char ch = c.raw_peek();
        if (ch == ')') {
            c.advance();
            pieces.push_back(cur);
            closed = true;
            break;
        }
        if (ch == ',') {
            c.advance();
            pieces.push_back(cur);
            cur.clear();
            continue;
        }
        if (ch == '(') c.fail("nested parentheses are not allowed");
        cur += ch;
        c.advance();
    }
    if (!closed) c.fail("expected ')'");
    if (!c.eof()) c.fail("unexpected trailing input");
    const int dim = static_cast<int>(pieces.size());
    if (dim < 1) throw ParseError("empty tuple", line, col);
    if (dim > 9) throw ParseError("dimensions above 9 are not supported", line, col);
    std::vector<AltForm> diffs;
    diffs.reserve(pieces.size());
    for (const auto& p : pieces) diffs.push_back(parse_form(p, dim, 2));
    return LieAlgebra::from_structure_constants(dim, std::move(diffs));
}

inline std::string render_tuple(const LieAlgebra& g) {
    std::string out = "(";
    for (int k = 1; k <= g.dim(); ++k) {
        if (k > 1) out += ",";
        out += render_form(g.differential(k));
    }
    out += ")";
    return out;
}

// Derivation matrices: dim² comma-separated rationals in row-major order,
// or a JSON array (flat or nested rows; entries may be integers or strings
// like "1/2").
inline Endo parse_matrix(const std::string& text, int dim) {
    std::vector<Rational> entries;
    auto push_json_number = [&](const nlohmann::json& v) {
        if (v.is_number_integer()) {
            entries.push_back(Rational(static_cast<long>(v.get<long long>())));
        } else if (v.is_string()) {
            entries.push_back(Rational::from_string(v.get<std::string>()));
        } else {
            throw ParseError("matrix entries must be integers or rational strings", 1, 1);
        }
    };
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
        }
        for (const auto& row : j) {
            if (row.is_array()) {
                for (const auto& v : row) push_json_number(v);
            } else {
                push_json_number(row);
            }
        }
    } else {
        std::string cur;
        auto flush = [&] {
            std::size_t a = cur.find_first_not_of(" \t\r\n");
            if (a == std::string::npos) throw ParseError("empty matrix entry", 1, 1);
            std::size_t b = cur.find_last_not_of(" \t\r\n");
            entries.push_back(Rational::from_string(cur.substr(a, b - a + 1)));
            cur.clear();
        };
        for (char ch : text) {
            if (ch == ',') {
                flush();
            } else {
                cur += ch;
            }
        }
        flush();
    }
    if (static_cast<int>(entries.size()) != dim * dim)
        throw ParseError("expected " + std::to_string(dim * dim) + " matrix entries, got " +
                             std::to_string(entries.size()),
                         1, 1);
    Endo e(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) e.at(i, j) = Scalar(entries[static_cast<std::size_t>(i) * dim + j]);
    return e;
}

} // namespace g2forge
