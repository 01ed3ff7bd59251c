#pragma once

// The Blanchfield pairing of a knot from its Seifert matrix, the
// linking form of a hermitian matrix over Z[t,1/t], and exact equality
// of residues in Q(t)/Z[t,1/t].
//
// Convention: Bl(e_i, e_j) is the (i,j) entry of (t-1)(tV - V^T)^{-1}
// taken mod Z[t,1/t].  The table is checked to be hermitian and
// annihilated by the Alexander polynomial at construction time.

#include <cstddef>
#include <string>
#include <vector>

#include "knotalg/laurent.hpp"
#include "knotalg/matrix.hpp"
#include "knotalg/seifert.hpp"

namespace knotalg {

// numerator/denominator taken mod Z[t,1/t]; stored unreduced, compared
// by exact-division tests
struct ResidueClass {
    LaurentPoly numerator;
    LaurentPoly denominator = LaurentPoly(1);

    ResidueClass conjugate() const { return {numerator.conjugate(), denominator.conjugate()}; }

    bool is_integral() const {
        if (denominator.is_zero()) throw singular_matrix("residue with zero denominator");
        return divides(denominator, numerator);
    }

    friend ResidueClass operator+(const ResidueClass& a, const ResidueClass& b) {
        return {a.numerator * b.denominator + b.numerator * a.denominator,
                a.denominator * b.denominator};
    }
    friend ResidueClass operator-(const ResidueClass& a, const ResidueClass& b) {
        return {a.numerator * b.denominator - b.numerator * a.denominator,
                a.denominator * b.denominator};
    }
    friend ResidueClass operator*(const LaurentPoly& p, const ResidueClass& r) {
        return {p * r.numerator, r.denominator};
    }

    std::string render() const {
        return numerator.render() + " / " + denominator.render() + " (mod Z[t,1/t])";
    }
};

// x = y in Q(t)/Z[t,1/t]?
inline bool residue_equal(const ResidueClass& x, const ResidueClass& y) {
    return (x - y).is_integral();
}

struct BlanchfieldPresentation {
    LaurentMatrix presentation;  // tV - V^T
    LaurentPoly delta;           // normalized Alexander polynomial
    std::vector<std::vector<ResidueClass>> table;  // 2g x 2g pairing values

    std::size_t size() const { return table.size(); }

    // Bl extended sesquilinearly to column vectors over Z[t,1/t]
    ResidueClass pair(const std::vector<LaurentPoly>& x,
                      const std::vector<LaurentPoly>& y) const {
        if (x.size() != size() || y.size() != size())
            throw dimension_mismatch("Blanchfield pairing: vector length mismatch");
        ResidueClass acc{LaurentPoly(), LaurentPoly(1)};
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j) {
                if (x[i].is_zero() || y[j].is_zero()) continue;
                acc = acc + (x[i].conjugate() * y[j]) * table[i][j];
            }
        return acc;
    }
};

inline BlanchfieldPresentation blanchfield_table(const SeifertMatrix& v) {
    BlanchfieldPresentation b;
    b.presentation = v.alexander_presentation();
    b.delta = alexander_polynomial(v);
    const std::size_t n = v.size();
    b.table.assign(n, std::vector<ResidueClass>(n));
    if (n == 0) return b;
    const RationalFunctionMatrix inv = inverse_over_fraction_field(b.presentation);
    const LaurentPoly tm1 = LaurentPoly::t() - LaurentPoly(1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            b.table[i][j] = ResidueClass{tm1 * inv.numerators.at(i, j), inv.common_denominator};
    // convention self-checks: hermitian and Delta-annihilated
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!residue_equal(b.table[j][i], b.table[i][j].conjugate()))
                throw convention_self_check_failed("Blanchfield table is not hermitian");
            if (!(b.delta * b.table[i][j]).is_integral())
                throw convention_self_check_failed("Blanchfield table not Delta-annihilated");
        }
    return b;
}

// lambda(A)(x, y) = conj(x)^T A^{-1} y as a residue class
inline ResidueClass lambda_pairing(const LaurentMatrix& a, const std::vector<LaurentPoly>& x,
                                   const std::vector<LaurentPoly>& y) {
    if (!a.is_square()) throw non_square("lambda_pairing: matrix not square");
    if (x.size() != a.rows() || y.size() != a.rows())
        throw dimension_mismatch("lambda_pairing: vector length mismatch");
    if (!is_hermitian(a)) throw not_hermitian("lambda_pairing: matrix not hermitian");
    const RationalFunctionMatrix inv = inverse_over_fraction_field(a);
    LaurentPoly num;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j)
            num += x[i].conjugate() * inv.numerators.at(i, j) * y[j];
    return {num, inv.common_denominator};
}

struct PairingAuditReport {
    bool hermitian_ok = true;
    bool annihilation_ok = true;
    bool sesquilinear_ok = true;

    bool all_ok() const { return hermitian_ok && annihilation_ok && sesquilinear_ok; }
};

// Re-verify hermitian symmetry, Delta-annihilation, and sesquilinearity
// on a fixed sample of multipliers.  Vacuously passes on empty tables.
inline PairingAuditReport pairing_audit(const BlanchfieldPresentation& b) {
    PairingAuditReport report;
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!residue_equal(b.table[j][i], b.table[i][j].conjugate()))
                report.hermitian_ok = false;
            if (!(b.delta * b.table[i][j]).is_integral()) report.annihilation_ok = false;
        }
    if (n > 0) {
        const std::vector<LaurentPoly> samples = {
            LaurentPoly(2), LaurentPoly::t(), LaurentPoly::t(-1) - LaurentPoly(1),
            LaurentPoly::t(2) + LaurentPoly(3)};
        for (const LaurentPoly& p : samples)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    std::vector<LaurentPoly> x(n), y(n);
                    x[i] = p;
                    y[j] = LaurentPoly(1);
                    std::vector<LaurentPoly> xe(n);
                    xe[i] = LaurentPoly(1);
                    const ResidueClass lhs = b.pair(x, y);
                    const ResidueClass rhs = p.conjugate() * b.pair(xe, y);
                    if (!residue_equal(lhs, rhs)) report.sesquilinear_ok = false;
                }
    }
    return report;
}

}  // namespace knotalg
