#pragma once

// Seifert-matrix validation and the classical invariants: Alexander
// polynomial, exact ordinary signature, Levine-Tristram signatures,
// and connected sums.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

#include <Eigen/Dense>

#include "knotalg/intmatrix.hpp"
#include "knotalg/laurent.hpp"
#include "knotalg/matrix.hpp"
#include "knotalg/orders.hpp"

namespace knotalg {

// A valid Seifert pairing: square integer matrix of even size with
// det(V - V^T) = 1.  The empty matrix is the unknot.
class SeifertMatrix {
public:
    static SeifertMatrix validate(const IntMatrix& v) {
        if (!v.is_square()) throw not_seifert("Seifert matrix must be square");
        if (v.rows() % 2 != 0) throw not_seifert("Seifert matrix must have even size");
        if (int_determinant(v - v.transpose()) != 1)
            throw not_seifert("det(V - V^T) != 1");
        return SeifertMatrix(v);
    }

    const IntMatrix& matrix() const { return v_; }
    std::size_t size() const { return v_.rows(); }
    std::size_t genus() const { return v_.rows() / 2; }

    // tV - V^T, the square presentation matrix of the Alexander module
    LaurentMatrix alexander_presentation() const {
        const std::size_t n = size();
        LaurentMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = LaurentPoly::term(v_.at(i, j), 1) - LaurentPoly(v_.at(j, i));
        return m;
    }

private:
    explicit SeifertMatrix(IntMatrix v) : v_(std::move(v)) {}
    IntMatrix v_;
};

inline SeifertMatrix validate_seifert(const IntMatrix& v) { return SeifertMatrix::validate(v); }

// det(tV - V^T), normalized so that D(1) = 1 and D(1/t) = D(t)
inline LaurentPoly alexander_polynomial(const SeifertMatrix& v) {
    return normalize_alexander(determinant(v.alexander_presentation()));
}

// ordinary signature: sign count of V + V^T, exact rational arithmetic
inline long signature_at_minus_one(const SeifertMatrix& v) {
    return int_signature(v.matrix() + v.matrix().transpose());
}

struct SignatureSample {
    mpq_class theta;  // omega = exp(2*pi*i*theta)
    long value = 0;
};

// Signature of (1-w)V + (1-conj(w))V^T at w = exp(2*pi*i*theta) on the
// unit circle, via a dense hermitian eigensolver with a certification
// gap: eigenvalues within delta = 1e-9 * ||H|| of zero are refused.
inline SignatureSample levine_tristram_signature(const SeifertMatrix& v, const mpq_class& theta) {
    if (theta <= 0 || theta >= 1)
        throw error("levine_tristram_signature: theta must lie in (0,1)");
    const std::size_t n = v.size();
    if (n == 0) return {theta, 0};
    const double th = theta.get_d();
    const std::complex<double> omega = std::polar(1.0, 2.0 * std::numbers::pi * th);
    Eigen::MatrixXcd h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double vij = v.matrix().at(i, j).get_d();
            const double vji = v.matrix().at(j, i).get_d();
            h(i, j) = (1.0 - omega) * vij + (1.0 - std::conj(omega)) * vji;
        }
    // enforce exact hermitian storage against rounding
    h = (h + h.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    const double delta = 1e-9 * std::max(h.norm(), 1.0);
    long sig = 0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        const double lam = solver.eigenvalues()(i);
        if (std::abs(lam) < delta)
            throw omega_at_alexander_root(
                "uncertified eigenvalue sign near zero; perturb theta");
        sig += lam > 0 ? 1 : -1;
    }
    return {theta, sig};
}

// block-diagonal sum; Alexander polynomials multiply, signatures add
inline SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
    return SeifertMatrix::validate(IntMatrix::block_diag(a.matrix(), b.matrix()));
}

}  // namespace knotalg
