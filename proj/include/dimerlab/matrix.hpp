#pragma once

#include "dimerlab/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dimerlab {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
        IntMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& aik = at(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
            }
        return r;
    }

    // minor with one row and one column deleted
    IntMatrix minor_matrix(std::size_t row, std::size_t col) const {
        IntMatrix m(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
            if (i == row) continue;
            for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
                if (j == col) continue;
                m.at(mi, mj) = at(i, j);
                ++mj;
            }
            ++mi;
        }
        return m;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Rat entry_sum() const {
        Rat s = 0;
        for (const Rat& x : a_) s += x;
        return s;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

// Fraction-free Gaussian elimination (Bareiss). Exact, no rounding anywhere.
inline Int det_bareiss(IntMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_bareiss: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t piv = k;
            while (piv < n && m.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev;  // exact division (Bareiss)
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

// Exact inverse via fraction-free Gauss-Jordan on [m | det * I].
inline RationalMatrix inverse_rational(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse_rational: non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) throw std::domain_error("inverse_rational: singular matrix");
        std::swap(a[k], a[piv]);
        Rat d = a[k][k];
        for (std::size_t j = k; j < 2 * n; ++j) a[k][j] /= d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat f = a[i][k];
            for (std::size_t j = k; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = a[i][n + j];
    return inv;
}

struct SNFResult {
    std::vector<Int> diagonal;  // d1 | d2 | ... | dr, nonnegative
    std::size_t rank = 0;
};

// Smith normal form by elementary integer row/column reduction,
// pivot = smallest nonzero |entry| of the working submatrix.
inline SNFResult smith_normal_form(IntMatrix m) {
    const std::size_t R = m.rows(), C = m.cols();
    SNFResult out;
    std::size_t t = 0;
    auto abs_ = [](const Int& x) { return x < 0 ? -x : x; };
    while (t < R && t < C) {
        // locate smallest nonzero entry in m[t.., t..]
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j) {
                if (m.at(i, j) == 0) continue;
                if (!found || abs_(m.at(i, j)) < abs_(m.at(pi, pj))) { pi = i; pj = j; found = true; }
            }
        if (!found) break;
        for (std::size_t j = 0; j < C; ++j) std::swap(m.at(t, j), m.at(pi, j));
        for (std::size_t i = 0; i < R; ++i) std::swap(m.at(i, t), m.at(i, pj));
        bool clean = true;
        for (std::size_t i = t + 1; i < R; ++i) {
            if (m.at(i, t) == 0) continue;
            Int q = m.at(i, t) / m.at(t, t);
            for (std::size_t j = t; j < C; ++j) m.at(i, j) -= q * m.at(t, j);
            if (m.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < C; ++j) {
            if (m.at(t, j) == 0) continue;
            Int q = m.at(t, j) / m.at(t, t);
            for (std::size_t i = t; i < R; ++i) m.at(i, j) -= q * m.at(i, t);
            if (m.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // remainders left; repeat with a smaller pivot
        // pivot must divide every remaining entry for the divisibility chain
        bool divides = true;
        for (std::size_t i = t + 1; i < R && divides; ++i)
            for (std::size_t j = t + 1; j < C; ++j)
                if (m.at(i, j) % m.at(t, t) != 0) {
                    // fold the offending row into row t and restart this pivot
                    for (std::size_t jj = t; jj < C; ++jj) m.at(t, jj) += m.at(i, jj);
                    divides = false;
                    break;
                }
        if (!divides) continue;
        ++t;
    }
    out.rank = t;
    // normalize signs, read diagonal
    for (std::size_t i = 0; i < t; ++i) {
        Int d = m.at(i, i);
        out.diagonal.push_back(d < 0 ? -d : d);
    }
    return out;
}

// Carlitz matrix of the a,b,c hexagon: b x b with entries C(a+c, a+i-j), 1-based i,j.
inline IntMatrix carlitz_matrix(long a, long b, long c) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("carlitz_matrix: sides must be >= 1");
    IntMatrix m(b, b);
    for (long i = 1; i <= b; ++i)
        for (long j = 1; j <= b; ++j) m.at(i - 1, j - 1) = binomial(a + c, a + i - j);
    return m;
}

}  // namespace dimerlab
