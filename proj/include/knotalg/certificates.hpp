#pragma once

// Certificates for upper bounds on the algebraic unknotting number:
// a hermitian matrix A(t) presenting the Blanchfield form, a witness
// for the generator images, and a diagonalizer for A(1).  The verifier
// is the trusted component; the searcher only proposes candidates.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "knotalg/blanchfield.hpp"
#include "knotalg/fppoly.hpp"
#include "knotalg/laurent.hpp"
#include "knotalg/matrix.hpp"
#include "knotalg/orders.hpp"
#include "knotalg/quadform.hpp"
#include "knotalg/seifert.hpp"

namespace knotalg {

struct Certificate {
    LaurentMatrix A;          // n x n hermitian, det =-unit= Alexander polynomial
    LaurentMatrix witness_S;  // 2g x n generator images into the Seifert presentation
    IntMatrix diagonalizer_P; // n x n unimodular with P A(1) P^T diagonal (may be empty)

    std::size_t size() const { return A.rows(); }

    static Certificate block_sum(const Certificate& a, const Certificate& b) {
        Certificate c;
        c.A = LaurentMatrix::block_diag(a.A, b.A);
        c.witness_S = LaurentMatrix::block_diag(a.witness_S, b.witness_S);
        if (a.diagonalizer_P.rows() == a.A.rows() && b.diagonalizer_P.rows() == b.A.rows())
            c.diagonalizer_P = IntMatrix::block_diag(a.diagonalizer_P, b.diagonalizer_P);
        return c;
    }

    std::string render() const {
        return "A: " + A.render() + "\nS: " + witness_S.render() +
               "\nP: " + diagonalizer_P.render() + "\n";
    }
    static Certificate parse(const std::string& text);
};

inline Certificate Certificate::parse(const std::string& text) {
    Certificate c;
    bool have_a = false, have_s = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t colon = line.find(':');
        if (colon == std::string::npos) {
            bool blank = true;
            for (char ch : line)
                if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
            if (blank) continue;
            throw parse_error("certificate line without section tag: " + line);
        }
        const std::string tag = line.substr(0, colon);
        const std::string body = line.substr(colon + 1);
        if (tag == "A") {
            c.A = LaurentMatrix::parse(body);
            have_a = true;
        } else if (tag == "S") {
            c.witness_S = LaurentMatrix::parse(body);
            have_s = true;
        } else if (tag == "P") {
            c.diagonalizer_P = IntMatrix::parse(body);
        } else {
            throw parse_error("unknown certificate section: " + tag);
        }
    }
    if (!have_a || !have_s) throw parse_error("certificate needs A: and S: sections");
    return c;
}

struct CheckedBound {
    std::size_t n = 0;
    long n_plus = 0;
    long n_minus = 0;
    IntMatrix diagonalizer;
};

namespace detail {

inline IntMatrix evaluate_at_one(const LaurentMatrix& a) {
    IntMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const mpq_class v = a.at(i, j).evaluate(1);
            r.at(i, j) = v.get_num();  // denominator is 1 at t = 1
        }
    return r;
}

// mod-p cross check that the columns of [M | S] generate everything:
// the Smith normal form over F_p[t] must consist of units of F_p[t,1/t]
inline bool generates_mod_p(const LaurentMatrix& aug, std::size_t rows, long p) {
    const std::vector<FpPoly> diag = fp_smith_normal_form(fp_matrix_from_laurent(aug, p), p);
    if (diag.size() != rows) return false;
    for (const FpPoly& d : diag)
        if (!d.is_monomial()) return false;
    return true;
}

}  // namespace detail

// Run every check of the certificate scheme; throws the named failure
// of the first check that does not hold, returns the bound on success.
inline CheckedBound verify_certificate(const SeifertMatrix& v, const Certificate& cert,
                                       long radius = 10) {
    const std::size_t g2 = v.size();
    const std::size_t n = cert.size();
    if (!cert.A.is_square()) throw hermitian_fail("certificate A is not square");
    if (cert.witness_S.rows() != g2 || cert.witness_S.cols() != n)
        throw witness_not_well_defined("witness S has the wrong shape");

    const LaurentMatrix m = v.alexander_presentation();
    const LaurentPoly delta = alexander_polynomial(v);

    // (1) hermitian
    if (!is_hermitian(cert.A)) throw hermitian_fail("A is not hermitian");

    // (2) det(A) agrees with the Alexander polynomial up to units; this
    // pins the determinant chain det(A^-1) * Delta^2 / Delta to a unit
    const LaurentPoly det_a = determinant(cert.A);
    if (!doteq(det_a, delta)) throw determinant_fail("det(A) is not a unit multiple of Delta");

    if (n > 0 || g2 > 0) {
        const LaurentPoly det_m = determinant(m);
        const LaurentMatrix adj_m = adjugate(m);
        const LaurentMatrix adj_a = adjugate(cert.A);

        // (3) witness well-defined: M^-1 S A integral over Z[t,1/t]
        const LaurentMatrix num_w = adj_m * cert.witness_S * cert.A;
        for (std::size_t i = 0; i < g2; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!divides(det_m, num_w.at(i, j)))
                    throw witness_not_well_defined("M^-1 S A is not integral");

        // (4) pairing preserved: lambda(A)(e_i, e_j) = Bl(S e_i, S e_j)
        const LaurentPoly tm1 = LaurentPoly::t() - LaurentPoly(1);
        const LaurentMatrix bl_num =
            hermitian_conjugate(cert.witness_S) * (tm1 * adj_m) * cert.witness_S;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const ResidueClass lhs{adj_a.at(i, j), det_a};
                const ResidueClass rhs{bl_num.at(i, j), det_m};
                if (!residue_equal(lhs, rhs))
                    throw pairing_mismatch("lambda(A) does not match the Blanchfield pairing");
            }

        // (5) surjectivity proxy: the maximal minors of [M | S] are
        // coprime, cross-checked by mod-p Smith normal forms
        const LaurentMatrix aug = m.augment(cert.witness_S);
        if (g2 > 0) {
            if (!doteq(minors_gcd(aug, g2), LaurentPoly(1)))
                throw surjectivity_proxy_fail("maximal minors of [M | S] are not coprime");
            for (long p : {2L, 3L, 5L})
                if (!detail::generates_mod_p(aug, g2, p))
                    throw surjectivity_proxy_fail("mod-" + std::to_string(p) +
                                                  " specialization is not surjective");
        }
    }

    // (6) A(1) congruent-diagonalizable over Z
    const IntMatrix a1 = detail::evaluate_at_one(cert.A);
    DiagVerdict verdict;
    const bool p_given = cert.diagonalizer_P.rows() == n && cert.diagonalizer_P.cols() == n && n > 0;
    if (p_given) {
        // validate the supplied witness directly
        const mpz_class dp = int_determinant(cert.diagonalizer_P);
        const IntMatrix d = cert.diagonalizer_P * a1 * cert.diagonalizer_P.transpose();
        bool ok = (dp == 1 || dp == -1);
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                ok = (i == j) ? (d.at(i, i) == 1 || d.at(i, i) == -1) : (d.at(i, j) == 0);
        if (ok) {
            verdict.decision = DiagVerdict::Decision::yes;
            verdict.witness_P = cert.diagonalizer_P;
        }
    }
    if (verdict.decision != DiagVerdict::Decision::yes) {
        verdict = diagonalizable_over_Z(a1, radius);
        if (verdict.decision != DiagVerdict::Decision::yes)
            throw a1_not_diagonalizable("A(1) is not congruent-diagonalizable over Z");
    }
    CheckedBound bound;
    bound.n = n;
    bound.diagonalizer = verdict.witness_P;
    if (n > 0) {
        const auto [plus, minus] = signed_counts(verdict, a1);
        bound.n_plus = plus;
        bound.n_minus = minus;
    }
    return bound;
}

struct SearchOptions {
    long degree_bound = 2;
    long height_bound = 2;
    long radius = 10;
};

// Deterministic bounded enumeration of size-one certificates
// A = [+-Delta] with a single generator image x.  Returns the first
// candidate that verifies, under a fixed total order on candidates.
inline std::optional<Certificate> search_rank_one_certificate(const SeifertMatrix& v,
                                                              const SearchOptions& opt = {}) {
    const std::size_t g2 = v.size();
    Certificate cert;
    if (g2 == 0) return cert;  // empty certificate: n = 0
    const LaurentPoly delta = alexander_polynomial(v);
    const LaurentMatrix m = v.alexander_presentation();
    if (delta.is_one()) {
        // Alexander polynomial one: try the empty certificate
        cert.witness_S = LaurentMatrix(g2, 0);
        try {
            verify_certificate(v, cert, opt.radius);
            return cert;
        } catch (const certificate_error&) {
            return std::nullopt;
        }
    }
    // cheap impossibility filters: any certified lower bound >= 2 rules
    // out a size-one certificate
    if (nakanishi_lower_bound(Presentation{m}, {2, 3, 5}) >= 2) return std::nullopt;
    const long sigma = signature_at_minus_one(v);
    if ((sigma < 0 ? -sigma : sigma) >= 3) return std::nullopt;

    const LaurentPoly det_m = determinant(m);
    const LaurentMatrix adj_m = adjugate(m);
    const LaurentPoly tm1 = LaurentPoly::t() - LaurentPoly(1);

    const std::size_t places = static_cast<std::size_t>(opt.degree_bound + 1) * g2;
    const long base = 2 * opt.height_bound + 1;
    for (int sign : {-1, +1}) {
        const LaurentPoly a_entry = sign > 0 ? delta : -delta;
        LaurentMatrix a(1, 1);
        a.at(0, 0) = a_entry;
        const ResidueClass target{LaurentPoly(1), a_entry};  // lambda(A)(e,e) = 1/(+-Delta)
        // odometer over coefficient tuples
        std::vector<long> digits(places, 0);
        while (true) {
            std::vector<LaurentPoly> x(g2);
            bool nonzero = false;
            for (std::size_t i = 0; i < g2; ++i)
                for (long e = 0; e <= opt.degree_bound; ++e) {
                    // digit -> coefficient, small magnitudes first:
                    // 0, 1, -1, 2, -2, ...
                    const long d = digits[i * (opt.degree_bound + 1) + e];
                    const long c = (d % 2 == 1) ? (d + 1) / 2 : -(d / 2);
                    if (c != 0) {
                        x[i] += LaurentPoly::term(c, e);
                        nonzero = true;
                    }
                }
            if (nonzero) {
                // fast filter: the single pairing value must already match
                LaurentPoly num;
                for (std::size_t i = 0; i < g2; ++i)
                    for (std::size_t j = 0; j < g2; ++j)
                        num += x[i].conjugate() * adj_m.at(i, j) * x[j];
                if (residue_equal(target, ResidueClass{tm1 * num, det_m})) {
                    Certificate cand;
                    cand.A = a;
                    cand.witness_S = LaurentMatrix(g2, 1);
                    for (std::size_t i = 0; i < g2; ++i) cand.witness_S.at(i, 0) = x[i];
                    try {
                        verify_certificate(v, cand, opt.radius);
                        return cand;
                    } catch (const certificate_error&) {
                        // keep searching
                    }
                }
            }
            std::size_t pos = 0;
            while (pos < places && digits[pos] == base - 1) digits[pos++] = 0;
            if (pos == places) break;
            ++digits[pos];
        }
    }
    return std::nullopt;
}

// --- bound aggregation -------------------------------------------------------

struct NamedCertificate {
    std::string name;
    Certificate cert;
};

struct BoundsReport {
    std::string name;
    LaurentPoly delta;
    long sigma_minus1 = 0;
    std::size_t nakanishi_lb = 0;
    std::size_t lower = 0;
    std::vector<std::string> lower_sources;
    std::size_t upper = 0;
    bool upper_certified = false;
    std::string certificate_ref = "none";
    std::optional<std::pair<long, long>> signed_counts;
    bool exact = false;
    // per-certificate verification failures, for the record
    std::vector<std::string> rejected_certificates;
};

struct BoundsOptions {
    std::vector<long> primes = default_nakanishi_primes();
    SearchOptions search;
    bool auto_search = true;
};

inline BoundsReport bounds_report(const SeifertMatrix& v,
                                  const std::vector<NamedCertificate>& certs,
                                  const BoundsOptions& opt = {}) {
    BoundsReport report;
    report.delta = alexander_polynomial(v);
    report.sigma_minus1 = signature_at_minus_one(v);
    report.nakanishi_lb = nakanishi_lower_bound(Presentation{v.alexander_presentation()},
                                                opt.primes);

    const std::size_t sig_lb =
        static_cast<std::size_t>(((report.sigma_minus1 < 0 ? -report.sigma_minus1
                                                           : report.sigma_minus1) + 1) / 2);
    const std::size_t delta_lb = report.delta.is_one() ? 0 : 1;
    report.lower = std::max({report.nakanishi_lb, sig_lb, delta_lb});
    if (report.lower == report.nakanishi_lb && report.nakanishi_lb > 0)
        report.lower_sources.push_back("nakanishi");
    if (report.lower == sig_lb && sig_lb > 0) report.lower_sources.push_back("signature");
    if (report.lower == delta_lb && delta_lb > 0) report.lower_sources.push_back("delta!=1");

    // verified certificates: provided ones first, then an automatic
    // size-one search when it could still improve the bound
    std::optional<CheckedBound> best;
    for (const NamedCertificate& nc : certs) {
        try {
            const CheckedBound checked = verify_certificate(v, nc.cert, opt.search.radius);
            if (!best || checked.n < best->n) {
                best = checked;
                report.certificate_ref = nc.name;
            }
        } catch (const certificate_error& e) {
            report.rejected_certificates.push_back(nc.name + ": " + e.what());
        }
    }
    if (opt.auto_search && (!best || best->n > 1) && report.lower <= 1) {
        if (const auto found = search_rank_one_certificate(v, opt.search)) {
            const CheckedBound checked = verify_certificate(v, *found, opt.search.radius);
            if (!best || checked.n < best->n) {
                best = checked;
                report.certificate_ref = "(search)";
            }
        }
    }

    const std::size_t generic = static_cast<std::size_t>(report.delta.span()) + 1;
    if (best && best->n <= generic) {
        report.upper = best->n;
        report.upper_certified = true;
        report.signed_counts = std::make_pair(best->n_plus, best->n_minus);
    } else {
        report.upper = generic;
        report.upper_certified = false;
        report.certificate_ref = "none";
    }
    report.exact = report.upper_certified && report.lower == report.upper;
    return report;
}

}  // namespace knotalg
