#pragma once

// Polynomials over F_p and Smith normal form over the PID F_p[t].
// Used for the mod-p Nakanishi lower bound and for mod-p cross checks
// of certificate verification.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "knotalg/errors.hpp"
#include "knotalg/laurent.hpp"
#include "knotalg/matrix.hpp"

namespace knotalg {

// dense coefficient vector, index = exponent, trailing zeros trimmed
class FpPoly {
public:
    FpPoly() = default;
    FpPoly(long p, std::vector<long> coeffs) : p_(p), c_(std::move(coeffs)) { trim(); }
    static FpPoly constant(long p, long v) { return FpPoly(p, {((v % p) + p) % p}); }

    long p() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return c_.empty() ? -1 : static_cast<long>(c_.size()) - 1; }
    long lead() const { return c_.back(); }
    const std::vector<long>& coeffs() const { return c_; }

    bool is_unit() const { return degree() == 0; }
    // unit of the Laurent ring F_p[t,1/t]: c * t^k, here after shift just c*t^k
    bool is_monomial() const {
        if (is_zero()) return false;
        for (std::size_t i = 0; i + 1 < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const FpPoly& a, const FpPoly& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b) {
        const long p = a.p_ ? a.p_ : b.p_;
        std::vector<long> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            long v = 0;
            if (i < a.c_.size()) v += a.c_[i];
            if (i < b.c_.size()) v += b.c_[i];
            r[i] = v % p;
        }
        return FpPoly(p, std::move(r));
    }
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b) {
        const long p = a.p_ ? a.p_ : b.p_;
        std::vector<long> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) {
            long v = 0;
            if (i < a.c_.size()) v += a.c_[i];
            if (i < b.c_.size()) v += p - b.c_[i];
            r[i] = v % p;
        }
        return FpPoly(p, std::move(r));
    }
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
        const long p = a.p_ ? a.p_ : b.p_;
        if (a.is_zero() || b.is_zero()) return FpPoly(p, {});
        std::vector<long> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = (r[i + j] + a.c_[i] * b.c_[j]) % p;
        return FpPoly(p, std::move(r));
    }

    // division with remainder; b != 0
    static std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
        const long p = b.p_ ? b.p_ : a.p_;
        if (b.is_zero()) throw error("FpPoly division by zero");
        std::vector<long> rem = a.c_;
        std::vector<long> quot;
        const long db = b.degree();
        const long inv_lead = mod_inverse(b.lead(), p);
        long dr = static_cast<long>(rem.size()) - 1;
        while (dr >= 0 && rem[dr] == 0) --dr;
        if (dr >= db) quot.assign(dr - db + 1, 0);
        while (dr >= db) {
            const long q = (rem[dr] * inv_lead) % p;
            quot[dr - db] = q;
            for (long i = 0; i <= db; ++i)
                rem[dr - db + i] = ((rem[dr - db + i] - q * b.c_[i]) % p + p) % p;
            while (dr >= 0 && rem[dr] == 0) --dr;
        }
        rem.resize(dr + 1);
        return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
    }

    FpPoly monic() const {
        if (is_zero()) return *this;
        const long inv = mod_inverse(lead(), p_);
        std::vector<long> r = c_;
        for (auto& v : r) v = (v * inv) % p_;
        return FpPoly(p_, std::move(r));
    }

    // strip the t^k factor (t is a unit in F_p[t,1/t])
    FpPoly strip_monomial_factor() const {
        if (is_zero()) return *this;
        std::size_t k = 0;
        while (c_[k] == 0) ++k;
        return FpPoly(p_, std::vector<long>(c_.begin() + k, c_.end()));
    }

    static long mod_inverse(long a, long p) {
        a = ((a % p) + p) % p;
        long t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            const long q = r / nr;
            std::swap(t -= q * nt, nt);
            std::swap(r -= q * nr, nr);
        }
        return ((t % p) + p) % p;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() % p_ == 0) c_.pop_back();
        for (auto& v : c_) v = ((v % p_) + p_) % p_;
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    long p_ = 0;
    std::vector<long> c_;
};

inline FpPoly fp_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = FpPoly::divmod(a, b);
        a = b;
        b = r;
    }
    return a.monic();
}

// Laurent entry -> F_p[t], shifting the whole row by a unit is done by
// the caller; here only the coefficients are reduced (entry must have
// no negative exponents).
inline FpPoly reduce_mod_p(const LaurentPoly& f, long p) {
    if (f.is_zero()) return FpPoly(p, {});
    if (f.min_exp() < 0) throw error("reduce_mod_p: negative exponent");
    std::vector<long> c(static_cast<std::size_t>(f.max_exp()) + 1, 0);
    for (const auto& [e, v] : f.coeffs()) {
        mpz_class r = v % p;
        c[static_cast<std::size_t>(e)] = ((r.get_si() % p) + p) % p;
    }
    return FpPoly(p, std::move(c));
}

using FpMatrix = std::vector<std::vector<FpPoly>>;

// Laurent matrix -> F_p[t] matrix, clearing t-powers by unit row
// operations (multiplying a row by t^-k is legal over F_p[t,1/t]).
inline FpMatrix fp_matrix_from_laurent(const LaurentMatrix& m, long p) {
    FpMatrix r(m.rows(), std::vector<FpPoly>(m.cols(), FpPoly(p, {})));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        LaurentPoly::exp_t lo = 0;
        bool seen = false;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero()) continue;
            lo = seen ? std::min(lo, m.at(i, j).min_exp()) : m.at(i, j).min_exp();
            seen = true;
        }
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero())
                r[i][j] = reduce_mod_p(m.at(i, j).shifted(-lo), p);
    }
    return r;
}

// Smith normal form over F_p[t] (a Euclidean domain).  Returns the
// diagonal, monic, with the divisibility chain d_1 | d_2 | ...
inline std::vector<FpPoly> fp_smith_normal_form(FpMatrix a, long p) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<FpPoly> diag;
    std::size_t top = 0;
    while (top < rows && top < cols) {
        // find the minimal-degree nonzero entry in the remaining block
        std::size_t pi = rows, pj = cols;
        long best = -1;
        for (std::size_t i = top; i < rows; ++i)
            for (std::size_t j = top; j < cols; ++j)
                if (!a[i][j].is_zero() && (best < 0 || a[i][j].degree() < best)) {
                    best = a[i][j].degree();
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;  // remaining block is zero
        std::swap(a[top], a[pi]);
        for (std::size_t i = top; i < rows; ++i) std::swap(a[i][top], a[i][pj]);
        // reduce row and column against the pivot until both are clear
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = top + 1; i < rows; ++i) {
                if (a[i][top].is_zero()) continue;
                auto [q, r] = FpPoly::divmod(a[i][top], a[top][top]);
                for (std::size_t j = top; j < cols; ++j)
                    a[i][j] = a[i][j] - q * a[top][j];
                if (!a[i][top].is_zero()) {
                    // remainder has smaller degree: swap up and restart
                    std::swap(a[top], a[i]);
                    dirty = true;
                }
            }
            for (std::size_t j = top + 1; j < cols; ++j) {
                if (a[top][j].is_zero()) continue;
                auto [q, r] = FpPoly::divmod(a[top][j], a[top][top]);
                for (std::size_t i = top; i < rows; ++i)
                    a[i][j] = a[i][j] - q * a[i][top];
                if (!a[top][j].is_zero()) {
                    for (std::size_t i = top; i < rows; ++i) std::swap(a[i][top], a[i][j]);
                    dirty = true;
                }
            }
        }
        // enforce divisibility into the remaining block
        bool fixed = false;
        for (std::size_t i = top + 1; i < rows && !fixed; ++i)
            for (std::size_t j = top + 1; j < cols && !fixed; ++j) {
                auto [q, r] = FpPoly::divmod(a[i][j], a[top][top]);
                if (!r.is_zero()) {
                    // add row i to the pivot row and redo this pivot
                    for (std::size_t k = top; k < cols; ++k)
                        a[top][k] = a[top][k] + a[i][k];
                    fixed = true;
                }
            }
        if (fixed) continue;
        diag.push_back(a[top][top].monic());
        ++top;
    }
    return diag;
}

}  // namespace knotalg
