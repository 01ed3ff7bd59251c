#pragma once

// Exact matrix algebra over Z[t,1/t]: determinants (fraction-free),
// adjugate inverses over the fraction field, hermitian structure,
// congruence transforms and gcds of minors.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "knotalg/laurent.hpp"

namespace knotalg {

class LaurentMatrix {
public:
    LaurentMatrix() : rows_(0), cols_(0) {}
    LaurentMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static LaurentMatrix identity(std::size_t n) {
        LaurentMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    LaurentPoly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const LaurentMatrix& a, const LaurentMatrix& b) { return !(a == b); }

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
        if (a.cols_ != b.rows_) throw dimension_mismatch("matrix product shape mismatch");
        LaurentMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return r;
    }
    friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw dimension_mismatch("matrix sum shape mismatch");
        LaurentMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            r.entries_[i] = a.entries_[i] + b.entries_[i];
        return r;
    }
    friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw dimension_mismatch("matrix difference shape mismatch");
        LaurentMatrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            r.entries_[i] = a.entries_[i] - b.entries_[i];
        return r;
    }
    friend LaurentMatrix operator*(const LaurentPoly& p, const LaurentMatrix& m) {
        LaurentMatrix r(m.rows_, m.cols_);
        for (std::size_t i = 0; i < m.entries_.size(); ++i) r.entries_[i] = p * m.entries_[i];
        return r;
    }

    LaurentMatrix transpose() const {
        LaurentMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    // entries evaluated at a rational point, as a Laurent matrix of constants
    // is not generally possible; evaluation at t=1 stays integral
    std::vector<std::vector<mpq_class>> evaluate(const mpq_class& x) const {
        std::vector<std::vector<mpq_class>> r(rows_, std::vector<mpq_class>(cols_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i][j] = at(i, j).evaluate(x);
        return r;
    }

    LaurentMatrix submatrix(const std::vector<std::size_t>& row_idx,
                            const std::vector<std::size_t>& col_idx) const {
        LaurentMatrix r(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                r.at(i, j) = at(row_idx[i], col_idx[j]);
        return r;
    }

    // [this | other], matching row counts
    LaurentMatrix augment(const LaurentMatrix& other) const {
        if (rows_ != other.rows_) throw dimension_mismatch("augment row mismatch");
        LaurentMatrix r(rows_, cols_ + other.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (std::size_t j = 0; j < other.cols_; ++j) r.at(i, cols_ + j) = other.at(i, j);
        }
        return r;
    }

    static LaurentMatrix block_diag(const LaurentMatrix& a, const LaurentMatrix& b) {
        LaurentMatrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
        return r;
    }

    std::string render() const;
    static LaurentMatrix parse(const std::string& s);

private:
    std::size_t rows_, cols_;
    std::vector<LaurentPoly> entries_;
};

// transpose with every entry conjugated
inline LaurentMatrix hermitian_conjugate(const LaurentMatrix& m) {
    LaurentMatrix r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(j, i) = m.at(i, j).conjugate();
    return r;
}

inline bool is_hermitian(const LaurentMatrix& m) {
    if (!m.is_square()) throw non_square("is_hermitian: matrix not square");
    return hermitian_conjugate(m) == m;
}

// --- determinant -----------------------------------------------------------

namespace detail {

// Bareiss fraction-free elimination in Z[t]; every division is exact.
// Entries must already be honest polynomials (no negative exponents).
inline LaurentPoly bareiss_det(LaurentMatrix a) {
    const std::size_t n = a.rows();
    if (n == 0) return LaurentPoly(1);
    int sign = 1;
    LaurentPoly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && a.at(piv, k).is_zero()) ++piv;
            if (piv == n) return LaurentPoly();
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                auto q = divide_exact(num, prev);
                a.at(i, j) = *q;  // exact by the Bareiss identity
            }
        prev = a.at(k, k);
    }
    LaurentPoly d = a.at(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

}  // namespace detail

inline LaurentPoly determinant(const LaurentMatrix& m) {
    if (!m.is_square()) throw non_square("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return LaurentPoly(1);
    // clear per-row t-powers so Bareiss runs in Z[t]
    LaurentMatrix a = m;
    LaurentPoly::exp_t shift = 0;
    for (std::size_t i = 0; i < n; ++i) {
        LaurentPoly::exp_t lo = 0;
        bool seen = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (a.at(i, j).is_zero()) continue;
            lo = seen ? std::min(lo, a.at(i, j).min_exp()) : a.at(i, j).min_exp();
            seen = true;
        }
        if (!seen) return LaurentPoly();  // zero row
        if (lo != 0) {
            for (std::size_t j = 0; j < n; ++j) a.at(i, j) = a.at(i, j).shifted(-lo);
            shift += lo;
        }
    }
    return detail::bareiss_det(a).shifted(shift);
}

// --- adjugate / inverse ------------------------------------------------------

inline LaurentMatrix adjugate(const LaurentMatrix& m) {
    if (!m.is_square()) throw non_square("adjugate: matrix not square");
    const std::size_t n = m.rows();
    LaurentMatrix adj(n, n);
    if (n == 0) return adj;
    if (n == 1) {
        adj.at(0, 0) = LaurentPoly(1);
        return adj;
    }
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> ri, ci;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) ri.push_back(k);
                if (k != i) ci.push_back(k);
            }
            LaurentPoly c = determinant(m.submatrix(ri, ci));
            adj.at(i, j) = ((i + j) % 2 == 0) ? c : -c;
        }
    return adj;
}

// A matrix over Q(t) stored as numerators over one common denominator.
struct RationalFunctionMatrix {
    LaurentMatrix numerators;
    LaurentPoly common_denominator;
};

// M^-1 = adj(M) / det(M), exact over the fraction field
inline RationalFunctionMatrix inverse_over_fraction_field(const LaurentMatrix& m) {
    if (!m.is_square()) throw non_square("inverse: matrix not square");
    LaurentPoly det = determinant(m);
    if (det.is_zero()) throw singular_matrix("inverse of singular matrix");
    return {adjugate(m), det};
}

// --- congruence ---------------------------------------------------------------

// conj-transpose(U) * A * U for U with unit determinant
inline LaurentMatrix congruence(const LaurentMatrix& a, const LaurentMatrix& u) {
    if (!a.is_square() || !u.is_square() || a.rows() != u.rows())
        throw dimension_mismatch("congruence: shape mismatch");
    if (!determinant(u).is_unit())
        throw non_unit_transform("congruence transform determinant is not +-t^k");
    return hermitian_conjugate(u) * a * u;
}

// --- minors -----------------------------------------------------------------

namespace detail {

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        fn(idx);
        // next combination
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) break;
            if (i == 0) return;
        }
        if (idx[i] == i + n - k) return;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

// gcd of all k x k minors, canonicalized; 0 when every minor vanishes
inline LaurentPoly minors_gcd(const LaurentMatrix& m, std::size_t k) {
    if (k > m.rows() || k > m.cols())
        throw bad_minor_size("minors_gcd: k exceeds matrix dimensions");
    if (k == 0) return LaurentPoly(1);
    LaurentPoly g;
    detail::for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& ri) {
        detail::for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& ci) {
            if (g.is_one()) return;
            g = laurent_gcd(g, determinant(m.submatrix(ri, ci)));
        });
    });
    return canonicalize(g);
}

// --- text format ----------------------------------------------------------
//
// Rows separated by ';', entries by ',', entries in the Laurent grammar,
// e.g. "1-t, t; -1, 1-t".

inline std::string LaurentMatrix::render() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).render();
        }
    }
    return os.str();
}

inline LaurentMatrix LaurentMatrix::parse(const std::string& s) {
    std::vector<std::vector<LaurentPoly>> rows;
    std::stringstream row_stream(s);
    std::string row;
    while (std::getline(row_stream, row, ';')) {
        std::vector<LaurentPoly> entries;
        std::stringstream entry_stream(row);
        std::string entry;
        while (std::getline(entry_stream, entry, ','))
            entries.push_back(LaurentPoly::parse(entry));
        if (entries.empty()) throw parse_error("empty matrix row: " + s);
        rows.push_back(std::move(entries));
    }
    if (rows.empty()) return LaurentMatrix();
    const std::size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw parse_error("ragged matrix rows: " + s);
    LaurentMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace knotalg
