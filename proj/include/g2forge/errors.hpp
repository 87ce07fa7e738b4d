#pragma once

#include <stdexcept>
#include <string>

namespace g2forge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic between incompatible coefficient rings (polynomial vs float).
struct RingError : Error {
    using Error::Error;
};

// Mismatched ambient dimensions or form degrees.
struct DimensionError : Error {
    using Error::Error;
};

// d∘d != 0 for a candidate Lie algebra; `index` is the first dual basis
// index k (1-based) with d(d e^k) != 0.
struct JacobiError : Error {
    int index;
    explicit JacobiError(int k)
        : Error("structure constants violate the Jacobi identity at k = " + std::to_string(k)),
          index(k) {}
};

// Syntax error in the structure-equation text format.
struct ParseError : Error {
    int line;
    int column;
    ParseError(std::string msg, int ln, int col)
        : Error(std::move(msg) + " (line " + std::to_string(ln) + ", column " + std::to_string(col) + ")"),
          line(ln), column(col) {}
};

} // namespace g2forge
