#pragma once

// Elements of the fraction field Q(t), represented as reduced quotients
// of Laurent polynomials.  Used internally for fraction-field solves;
// residue classes in Q(t)/Z[t,1/t] live in blanchfield.hpp instead.

#include "knotalg/laurent.hpp"

namespace knotalg {

class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(const LaurentPoly& n) : num_(n), den_(1) {}
    RationalFunction(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw singular_matrix("rational function with zero denominator");
        reduce();
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_.is_unit(); }

    // valid only when is_integral()
    LaurentPoly to_poly() const {
        auto q = divide_exact(num_, den_);
        if (!q) throw error("to_poly on non-integral rational function");
        return *q;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw singular_matrix("division by zero rational function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    RationalFunction operator-() const { return {-num_, den_}; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return (a.num_ * b.den_) == (b.num_ * a.den_);
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        const LaurentPoly g = laurent_gcd(num_, den_);
        num_ = *divide_exact(num_, g);
        den_ = *divide_exact(den_, g);
        // normalize the denominator to canonical unit form
        const LaurentPoly cden = canonicalize(den_);
        if (den_ != cden) {
            // den_ = u * cden with u a unit; divide both by u
            UnitFactor u;
            doteq(cden, den_, &u);
            num_ = *divide_exact(num_, u.poly());
            den_ = cden;
        }
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace knotalg
