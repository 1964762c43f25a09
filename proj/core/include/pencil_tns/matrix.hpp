#pragma once

#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "pencil_tns/error.hpp"
#include "pencil_tns/rational.hpp"

namespace ptns {

template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const S& fill = S{}) : r_(rows), c_(cols), a_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const S& one = S(1)) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    S& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    std::vector<S>& data() { return a_; }
    const std::vector<S>& data() const { return a_; }

    bool is_zero() const {
        for (auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw Error("shape-mismatch", "matrix product");
        Matrix r(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const S& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.c_; ++j) r(i, j) += x * b(k, j);
            }
        return r;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw Error("shape-mismatch", "matrix sum");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw Error("shape-mismatch", "matrix difference");
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    friend Matrix operator*(Matrix a, const S& s) {
        for (auto& x : a.a_) x = x * s;
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<S> a_;
};

template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
    Matrix<S> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

template <class S>
Matrix<S> block_diag(const Matrix<S>& a, const Matrix<S>& b) {
    Matrix<S> r(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

std::size_t rank_rational(const Matrix<Rational>& m);

// Reduced row echelon form in place; returns pivot columns.
template <class S>
std::vector<std::size_t> rref(Matrix<S>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        S inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            S f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Row echelon rank over a field; transposes wide-and-short inputs first.
template <class S>
std::size_t rank(const Matrix<S>& input) {
    if constexpr (std::is_same_v<S, Rational>) {
        return rank_rational(input);
    } else {
        Matrix<S> m = input.rows() > input.cols() ? input.transpose() : input;
        std::size_t row = 0;
        for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
            std::size_t p = row;
            while (p < m.rows() && m(p, col).is_zero()) ++p;
            if (p == m.rows()) continue;
            if (p != row)
                for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
            S inv = m(row, col).inverse();
            for (std::size_t i = row + 1; i < m.rows(); ++i) {
                if (m(i, col).is_zero()) continue;
                S f = m(i, col) * inv;
                for (std::size_t j = col; j < m.cols(); ++j)
                    if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
            }
            ++row;
        }
        return row;
    }
}

// Basis of the right kernel, one vector per column.
template <class S>
Matrix<S> nullspace(const Matrix<S>& input) {
    Matrix<S> m = input;
    auto piv = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv) is_piv[p] = true;
    std::size_t dim = m.cols() - piv.size();
    Matrix<S> basis(m.cols(), dim);
    std::size_t k = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        basis(f, k) = S(1);
        for (std::size_t r = 0; r < piv.size(); ++r) basis(piv[r], k) = -m(r, f);
        ++k;
    }
    return basis;
}

// Some X with a X = b, or nullopt when inconsistent.
template <class S>
std::optional<Matrix<S>> solve(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.rows() != b.rows()) throw Error("shape-mismatch", "solve");
    Matrix<S> aug(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
    }
    auto piv = rref(aug);
    for (auto p : piv)
        if (p >= a.cols()) return std::nullopt;
    Matrix<S> x(a.cols(), b.cols());
    for (std::size_t r = 0; r < piv.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x(piv[r], j) = aug(r, a.cols() + j);
    return x;
}

template <class S>
S det(const Matrix<S>& input) {
    if (input.rows() != input.cols()) throw Error("shape-mismatch", "determinant of non-square matrix");
    Matrix<S> m = input;
    std::size_t n = m.rows();
    S acc(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m(p, col).is_zero()) ++p;
        if (p == n) return S();
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
            acc = -acc;
        }
        acc = acc * m(col, col);
        S inv = m(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            S f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return acc;
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
    if (m.rows() != m.cols()) throw Error("shape-mismatch", "inverse of non-square matrix");
    auto x = solve(m, Matrix<S>::identity(m.rows()));
    if (!x || !(m * *x == Matrix<S>::identity(m.rows()))) return std::nullopt;
    return x;
}

}  // namespace ptns
