#pragma once

// Dense integer matrices with exact determinant and signature.  Small
// sizes only; used for Seifert matrices, A(1) specializations and
// unimodular congruence witnesses.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "knotalg/errors.hpp"

namespace knotalg {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw dimension_mismatch("integer matrix product shape mismatch");
        IntMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw dimension_mismatch("integer matrix difference shape mismatch");
        IntMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            r.entries_[i] = a.entries_[i] - b.entries_[i];
        return r;
    }
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw dimension_mismatch("integer matrix sum shape mismatch");
        IntMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            r.entries_[i] = a.entries_[i] + b.entries_[i];
        return r;
    }

    IntMatrix transpose() const {
        IntMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
        return r;
    }

    std::string render() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) os << "; ";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << ", ";
                os << at(i, j).get_str();
            }
        }
        return os.str();
    }

    static IntMatrix parse(const std::string& s);

private:
    std::size_t rows_, cols_;
    std::vector<mpz_class> entries_;
};

inline IntMatrix IntMatrix::parse(const std::string& s) {
    std::vector<std::vector<mpz_class>> rows;
    std::stringstream row_stream(s);
    std::string row;
    while (std::getline(row_stream, row, ';')) {
        std::vector<mpz_class> entries;
        std::stringstream entry_stream(row);
        std::string entry;
        while (std::getline(entry_stream, entry, ',')) {
            std::string trimmed;
            for (char c : entry)
                if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
            if (trimmed.empty()) throw parse_error("empty integer matrix entry: " + s);
            entries.emplace_back(trimmed);
        }
        if (entries.empty()) throw parse_error("empty integer matrix row: " + s);
        rows.push_back(std::move(entries));
    }
    if (rows.empty()) return IntMatrix();
    const std::size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw parse_error("ragged integer matrix rows: " + s);
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

// Bareiss fraction-free determinant over Z
inline mpz_class int_determinant(const IntMatrix& m) {
    if (!m.is_square()) throw non_square("int_determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign < 0 ? mpz_class(-a.at(n - 1, n - 1)) : a.at(n - 1, n - 1);
}

// Exact signature of a symmetric matrix over Q: symmetric Gaussian
// reduction with hyperbolic-pair handling for zero diagonals.
inline long rational_signature(std::vector<std::vector<mpq_class>> a) {
    long sig = 0;
    while (!a.empty()) {
        const std::size_t n = a.size();
        // pick a nonzero diagonal pivot if there is one
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (a[i][i] != 0) {
                piv = i;
                break;
            }
        if (piv < n) {
            sig += a[piv][piv] > 0 ? 1 : -1;
            std::vector<std::vector<mpq_class>> b(n - 1, std::vector<mpq_class>(n - 1));
            std::vector<std::size_t> keep;
            for (std::size_t i = 0; i < n; ++i)
                if (i != piv) keep.push_back(i);
            for (std::size_t i = 0; i < n - 1; ++i)
                for (std::size_t j = 0; j < n - 1; ++j)
                    b[i][j] = a[keep[i]][keep[j]] -
                              a[keep[i]][piv] * a[piv][keep[j]] / a[piv][piv];
            a = std::move(b);
            continue;
        }
        // all diagonals zero: find an off-diagonal entry
        std::size_t pi = n, pj = n;
        for (std::size_t i = 0; i < n && pi == n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == n) break;  // zero form: contributes nothing
        // hyperbolic plane: +1 and -1, then split it off by the Schur complement
        const mpq_class b = a[pi][pj];
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < n; ++i)
            if (i != pi && i != pj) keep.push_back(i);
        std::vector<std::vector<mpq_class>> c(keep.size(), std::vector<mpq_class>(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = 0; j < keep.size(); ++j)
                c[i][j] = a[keep[i]][keep[j]] -
                          (a[pi][keep[i]] * a[pj][keep[j]] +
                           a[pj][keep[i]] * a[pi][keep[j]]) / b;
        a = std::move(c);
    }
    return sig;
}

inline long int_signature(const IntMatrix& m) {
    if (!m.is_symmetric()) throw not_symmetric("int_signature: matrix not symmetric");
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
    return rational_signature(std::move(a));
}

}  // namespace knotalg
