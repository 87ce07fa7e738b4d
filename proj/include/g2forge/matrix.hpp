#pragma once

#include <vector>

#include "g2forge/scalar.hpp"

namespace g2forge {

// Dense matrix of Scalars. Small sizes only (the largest systems here are
// a few dozen rows), so everything is straightforward O(n^3) exact
// arithmetic.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(Rational(1));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix shape mismatch");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix shape mismatch");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("matrix shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Scalar& s) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] * s;
        return r;
    }
    friend Matrix operator*(const Scalar& s, const Matrix& a) { return a * s; }

    std::vector<Scalar> apply(const std::vector<Scalar>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw DimensionError("matrix/vector shape mismatch");
        std::vector<Scalar> y(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero()) y[i] += at(i, j) * x[j];
        return y;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            if (a.a_[i] != b.a_[i]) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    Scalar trace() const {
        if (rows_ != cols_) throw DimensionError("trace of non-square matrix");
        Scalar t;
        for (int i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

private:
    int rows_, cols_;
    std::vector<Scalar> a_;
};

// Determinant by fraction-free (Bareiss) elimination; exact over rational
// and polynomial entries.
inline Scalar determinant(Matrix m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return Scalar(Rational(1));
    Scalar prev(Rational(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k).is_zero()) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) { swap = i; break; }
            if (swap < 0) return Scalar(Rational(0));
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Scalar num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;
            }
            m.at(i, k) = Scalar(Rational(0));
        }
        prev = m.at(k, k);
    }
    Scalar det = m.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

} // namespace g2forge
