#pragma once

#include <gmpxx.h>

#include <string>

namespace dimers {

using Integer = mpz_class;
using Rational = mpq_class;

// 2^k as an unbounded integer.
inline Integer pow2(unsigned long k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

// Index of the lowest set bit, i.e. the 2-adic valuation. Requires x != 0.
inline long v2(const Integer& x) {
    return static_cast<long>(mpz_scan1(x.get_mpz_t(), 0));
}

// Canonical residue of x modulo 2^k, in [0, 2^k).
inline Integer mod_pow2(const Integer& x, unsigned long k) {
    Integer r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
    return r;
}

// Mathematical mod: result in [0, m) for m > 0, regardless of sign of a.
inline long math_mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Canonicalized rational num/den.
inline Rational make_rational(Integer num, Integer den) {
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace dimers
