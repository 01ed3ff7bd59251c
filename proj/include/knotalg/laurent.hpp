#pragma once

// Exact arithmetic in Z[t,1/t]: the ambient ring for every invariant
// computed by this library.  Coefficients are arbitrary-precision
// integers (GMP); a polynomial is a sparse map exponent -> coefficient
// with no zero entries stored.

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "knotalg/errors.hpp"

namespace knotalg {

class LaurentPoly {
public:
    using exp_t = std::int64_t;
    using coeff_map = std::map<exp_t, mpz_class>;

    LaurentPoly() = default;
    LaurentPoly(long c) { set(0, mpz_class(c)); }
    LaurentPoly(const mpz_class& c) { set(0, c); }

    static LaurentPoly term(const mpz_class& c, exp_t e) {
        LaurentPoly p;
        p.set(e, c);
        return p;
    }
    // the variable t^e
    static LaurentPoly t(exp_t e = 1) { return term(1, e); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const {
        return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
               coeffs_.begin()->second == 1;
    }
    // true iff +-t^k
    bool is_unit() const {
        if (coeffs_.size() != 1) return false;
        const mpz_class& c = coeffs_.begin()->second;
        return c == 1 || c == -1;
    }

    exp_t min_exp() const { return is_zero() ? 0 : coeffs_.begin()->first; }
    exp_t max_exp() const { return is_zero() ? 0 : coeffs_.rbegin()->first; }
    exp_t span() const { return is_zero() ? 0 : max_exp() - min_exp(); }

    mpz_class coeff(exp_t e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? mpz_class(0) : it->second;
    }
    mpz_class leading_coeff() const {
        return is_zero() ? mpz_class(0) : coeffs_.rbegin()->second;
    }

    const coeff_map& coeffs() const { return coeffs_; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.coeffs_) r.add(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.coeffs_) r.add(e, -c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }

    // p(1/t): the ring involution
    LaurentPoly conjugate() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(-e, c);
        return r;
    }

    // multiply by t^k
    LaurentPoly shifted(exp_t k) const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
        return r;
    }

    // exact rational value p(x), x != 0
    mpq_class evaluate(const mpq_class& x) const {
        if (x == 0) throw zero_evaluation_point("evaluate: x = 0");
        mpq_class acc = 0;
        for (const auto& [e, c] : coeffs_) {
            mpq_class p = 1;
            mpq_class base = e >= 0 ? x : mpq_class(1) / x;
            for (exp_t i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
            acc += c * p;
        }
        return acc;
    }

    // gcd of the absolute values of the coefficients (0 for the zero poly)
    mpz_class content() const {
        mpz_class g = 0;
        for (const auto& [e, c] : coeffs_) {
            mpz_class a = abs(c);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        }
        return g;
    }

    std::string render() const;
    static LaurentPoly parse(const std::string& s);

private:
    void set(exp_t e, const mpz_class& c) {
        if (c != 0) coeffs_[e] = c;
    }
    void add(exp_t e, const mpz_class& c) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            if (c != 0) coeffs_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    coeff_map coeffs_;
};

// +-t^k
struct UnitFactor {
    int sign = 1;  // +1 or -1
    LaurentPoly::exp_t power = 0;

    LaurentPoly poly() const { return LaurentPoly::term(sign, power); }
};

// --- rendering / parsing -------------------------------------------------
//
// Grammar: term = [sign] [int] ['t' ['^' int]], terms joined by '+'/'-'.
// Rendered highest exponent first, e.g. "t - 1 + t^-1".

inline std::string LaurentPoly::render() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const exp_t e = it->first;
        const mpz_class& c = it->second;
        const bool neg = c < 0;
        mpz_class mag = abs(c);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (e == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str();
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

inline LaurentPoly LaurentPoly::parse(const std::string& s) {
    LaurentPoly result;
    std::size_t i = 0;
    const std::size_t n = s.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto parse_int = [&]() -> std::string {
        std::string digits;
        if (i < n && (s[i] == '+' || s[i] == '-')) digits += s[i++];
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        return digits;
    };
    skip_ws();
    if (i == n) throw parse_error("empty polynomial");
    bool any = false;
    while (true) {
        skip_ws();
        if (i == n) break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (any) {
            throw parse_error("expected '+' or '-' between terms: " + s);
        }
        std::string digits;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        mpz_class coeff = digits.empty() ? mpz_class(1) : mpz_class(digits);
        exp_t exp = 0;
        bool has_t = false;
        skip_ws();
        if (i < n && s[i] == 't') {
            has_t = true;
            exp = 1;
            ++i;
            if (i < n && s[i] == '^') {
                ++i;
                std::string es = parse_int();
                if (es.empty() || es == "+" || es == "-")
                    throw parse_error("missing exponent after '^': " + s);
                exp = std::stoll(es);
            }
        }
        if (digits.empty() && !has_t)
            throw parse_error("expected term at position " + std::to_string(i) + ": " + s);
        result.add(exp, sign * coeff);
        any = true;
    }
    if (!any) throw parse_error("empty polynomial: " + s);
    return result;
}

// --- unit equivalence -----------------------------------------------------

// g = +-t^k * f?  When true and witness != nullptr the unit is reported.
inline bool doteq(const LaurentPoly& f, const LaurentPoly& g, UnitFactor* witness = nullptr) {
    if (f.is_zero() && g.is_zero()) {
        if (witness) *witness = UnitFactor{1, 0};
        return true;
    }
    if (f.is_zero() || g.is_zero()) return false;
    const LaurentPoly::exp_t k = g.min_exp() - f.min_exp();
    const LaurentPoly shifted = f.shifted(k);
    if (shifted == g) {
        if (witness) *witness = UnitFactor{1, k};
        return true;
    }
    if (-shifted == g) {
        if (witness) *witness = UnitFactor{-1, k};
        return true;
    }
    return false;
}

// --- exact division -------------------------------------------------------

// f / g when g divides f in Z[t,1/t]; nullopt otherwise.
inline std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) return std::nullopt;
    if (f.is_zero()) return LaurentPoly();
    LaurentPoly rem = f.shifted(-f.min_exp());
    const LaurentPoly den = g.shifted(-g.min_exp());
    LaurentPoly quot;
    while (!rem.is_zero()) {
        const LaurentPoly::exp_t d = rem.max_exp() - den.max_exp();
        if (d < 0) return std::nullopt;
        mpz_class q;
        mpz_class r;
        mpz_class lr = rem.leading_coeff();
        mpz_class ld = den.leading_coeff();
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lr.get_mpz_t(), ld.get_mpz_t());
        if (r != 0) return std::nullopt;
        const LaurentPoly step = LaurentPoly::term(q, d);
        quot += step;
        rem -= step * den;
    }
    return quot.shifted(f.min_exp() - g.min_exp());
}

inline bool divides(const LaurentPoly& g, const LaurentPoly& f) {
    return divide_exact(f, g).has_value();
}

// --- gcd ------------------------------------------------------------------

// canonical form: lowest exponent 0, positive leading coefficient
inline LaurentPoly canonicalize(const LaurentPoly& f) {
    if (f.is_zero()) return f;
    LaurentPoly r = f.shifted(-f.min_exp());
    if (r.leading_coeff() < 0) r = -r;
    return r;
}

namespace detail {

// f / content(f), for f != 0 already shifted into Z[t]
inline LaurentPoly primitive_part(const LaurentPoly& f) {
    if (f.is_zero()) return f;
    auto q = divide_exact(f, LaurentPoly(f.content()));
    return *q;
}

// pseudo-remainder of a by b in Z[t] (b != 0, dega >= degb not required)
inline LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
    const LaurentPoly::exp_t db = b.max_exp();
    const mpz_class lb = b.leading_coeff();
    while (!a.is_zero() && a.max_exp() >= db) {
        const LaurentPoly lead = LaurentPoly::term(a.leading_coeff(), a.max_exp() - db);
        a = LaurentPoly(lb) * a - lead * b;
    }
    return a;
}

}  // namespace detail

// gcd in the UFD Z[t,1/t], canonicalized.  Primitive pseudo-remainder
// sequence plus integer content gcd; exact throughout.
inline LaurentPoly laurent_gcd(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero()) return canonicalize(g);
    if (g.is_zero()) return canonicalize(f);
    mpz_class c;
    mpz_class cf = f.content();
    mpz_class cg = g.content();
    mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    LaurentPoly a = detail::primitive_part(f.shifted(-f.min_exp()));
    LaurentPoly b = detail::primitive_part(g.shifted(-g.min_exp()));
    if (a.max_exp() < b.max_exp()) std::swap(a, b);
    while (!b.is_zero()) {
        LaurentPoly r = detail::pseudo_rem(a, b);
        a = b;
        b = r.is_zero() ? r : detail::primitive_part(r);
    }
    return canonicalize(LaurentPoly(c) * detail::primitive_part(a));
}

// --- Alexander normalization ------------------------------------------------

// The unique representative D of the unit class of `raw` with D(1) = 1 and
// D(1/t) = D(t).  Requires |raw(1)| = 1 and a symmetrizable exponent span.
inline LaurentPoly normalize_alexander(const LaurentPoly& raw) {
    if (raw.is_zero()) throw not_normalizable("zero polynomial");
    const mpq_class at_one = raw.evaluate(1);
    if (at_one != 1 && at_one != -1)
        throw not_normalizable("|p(1)| != 1: " + raw.render());
    const LaurentPoly::exp_t s = raw.min_exp() + raw.max_exp();
    if (s % 2 != 0)
        throw not_normalizable("odd exponent span, no symmetric unit shift: " + raw.render());
    LaurentPoly cand = raw.shifted(-s / 2);
    if (at_one == -1) cand = -cand;
    if (cand.conjugate() != cand)
        throw not_normalizable("no unit multiple is symmetric: " + raw.render());
    return cand;
}

}  // namespace knotalg
