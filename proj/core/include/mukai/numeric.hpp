#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "mukai/errors.hpp"

namespace mukai {

using Int = mpz_class;
using Rat = mpq_class;

/// Exact rational from numerator/denominator, canonicalized.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int rat_num(const Rat& q) { return Int(q.get_num()); }
inline Int rat_den(const Rat& q) { return Int(q.get_den()); }

/// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0.
inline std::string format_rat(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "p" or "p/q". Sign may sit on either component; result is canonical.
Rat parse_rat(const std::string& text);

/// Floor division for exact integers (rounds toward minus infinity).
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// gcd of a coordinate vector; 0 for the zero vector.
inline Int vec_gcd(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

inline Int floor_rat(const Rat& q) { return floor_div(rat_num(q), rat_den(q)); }

inline double to_double(const Rat& q) { return q.get_d(); }

/// Complex number with exact rational real and imaginary parts.
struct CRat {
    Rat re;
    Rat im;

    CRat() = default;
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    explicit CRat(const Rat& r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    CRat conj() const { return {re, Rat(-im)}; }

    friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend CRat operator-(const CRat& a) { return {-a.re, -a.im}; }
    friend CRat operator*(const CRat& a, const CRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CRat operator*(const Rat& s, const CRat& a) { return {s * a.re, s * a.im}; }
    friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }
};

/// Divide by a nonzero rational scalar.
inline CRat div_by(const CRat& a, const Rat& s) {
    if (s == 0) throw ValidationError("division by zero scalar");
    return {a.re / s, a.im / s};
}

} // namespace mukai
