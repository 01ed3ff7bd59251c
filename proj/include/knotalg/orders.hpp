#pragma once

// Orders of finitely presented Z[t,1/t]-modules and the mod-p Smith
// normal form lower bound on the minimal number of generators
// (Nakanishi index).

#include <algorithm>
#include <cstddef>
#include <vector>

#include "knotalg/fppoly.hpp"
#include "knotalg/fraction.hpp"
#include "knotalg/laurent.hpp"
#include "knotalg/matrix.hpp"

namespace knotalg {

// columns = relations, rows = generators
struct Presentation {
    LaurentMatrix matrix;

    std::size_t generators() const { return matrix.rows(); }
    std::size_t relations() const { return matrix.cols(); }
};

// gcd of the maximal (rows x rows) minors, canonicalized; 0 when the
// presentation has fewer relations than generators.
inline LaurentPoly order_of_presentation(const Presentation& p) {
    if (p.relations() < p.generators()) return LaurentPoly();
    return minors_gcd(p.matrix, p.generators());
}

// Does order(H) * v lie in the column span of the presentation matrix
// over Z[t,1/t]?  Decided exactly for square presentations (adjugate
// identity); for wide presentations a fraction-field solve with an
// integrality test is used, which is sufficient but not a general
// ideal-membership decision.
inline bool annihilation_check(const Presentation& p, const std::vector<LaurentPoly>& v) {
    const std::size_t n = p.generators();
    if (v.size() != n) throw dimension_mismatch("annihilation_check: vector length mismatch");
    const LaurentPoly ord = order_of_presentation(p);
    if (ord.is_zero()) return true;  // 0 * v = 0 is always in the span
    if (p.matrix.is_square()) {
        // det * v = M * (adj * v) and ord = unit * det
        return true;
    }
    // Gaussian elimination over Q(t) on [M | ord*v]
    const std::size_t m = p.relations();
    std::vector<std::vector<RationalFunction>> a(n, std::vector<RationalFunction>(m + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) a[i][j] = RationalFunction(p.matrix.at(i, j));
        a[i][m] = RationalFunction(ord * v[i]);
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < m && row < n; ++col) {
        std::size_t piv = row;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(a[row], a[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            const RationalFunction f = a[i][col] / a[row][col];
            for (std::size_t j = col; j <= m; ++j) a[i][j] = a[i][j] - f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (!a[i][m].is_zero()) return false;  // inconsistent even over Q(t)
    // particular solution: pivot variables only
    for (std::size_t i = 0; i < row; ++i) {
        const RationalFunction x = a[i][m] / a[i][pivot_col[i]];
        if (!x.is_integral()) return false;
    }
    return true;
}

struct SnfResult {
    long prime = 0;
    // non-unit invariant factors over F_p[t,1/t]: monic, monomial
    // factors of t stripped, divisibility chain preserved
    std::vector<FpPoly> invariant_factors;
    // generators with no pivot at all (zero diagonal entries)
    std::size_t rank_deficiency = 0;
};

inline bool is_prime_long(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline SnfResult snf_over_fp(const Presentation& pres, long p) {
    if (!is_prime_long(p)) throw not_prime("snf_over_fp: modulus is not prime");
    SnfResult result;
    result.prime = p;
    const std::vector<FpPoly> diag =
        fp_smith_normal_form(fp_matrix_from_laurent(pres.matrix, p), p);
    // diagonal entries cover min(rows, cols) slots; anything beyond the
    // returned chain had no pivot
    const std::size_t slots = std::min(pres.generators(), pres.relations());
    result.rank_deficiency = pres.generators() - std::min(diag.size(), slots);
    for (const FpPoly& d : diag) {
        const FpPoly stripped = d.strip_monomial_factor().monic();
        if (!stripped.is_unit()) result.invariant_factors.push_back(stripped);
    }
    return result;
}

// max over p of the number of non-unit invariant factors mod p; a lower
// bound for the minimal number of generators of the presented module.
inline std::size_t nakanishi_lower_bound(const Presentation& pres,
                                         const std::vector<long>& primes) {
    std::size_t best = 0;
    for (long p : primes) {
        const SnfResult r = snf_over_fp(pres, p);
        best = std::max(best, r.invariant_factors.size() + r.rank_deficiency);
    }
    return best;
}

inline const std::vector<long>& default_nakanishi_primes() {
    static const std::vector<long> primes = {2, 3, 5, 7, 11, 13};
    return primes;
}

}  // namespace knotalg
