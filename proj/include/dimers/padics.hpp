#pragma once

#include <optional>

#include "dimers/numeric.hpp"

namespace dimers {

/// A 2-adic integer known modulo 2^precision, stored as the canonical
/// residue in [0, 2^precision).
struct TwoAdicTrunc {
    Integer residue;
    unsigned precision = 1;

    friend bool operator==(const TwoAdicTrunc& a, const TwoAdicTrunc& b) = default;
};

/// 2-adic valuation of an exact rational; std::nullopt encodes +infinity
/// (the valuation of 0).
std::optional<long> val2(const Rational& x);

/// Reduces a rational with nonnegative 2-adic valuation modulo 2^K, via the
/// inverse of its (odd) denominator. Throws NegativeValuation when
/// val2(x) < 0 — that always signals a truncation bug upstream.
TwoAdicTrunc reduce_mod2k(const Rational& x, unsigned K);

/// Exact integer square root; std::nullopt when x is not a perfect square.
/// The candidate root is verified by a final multiplication.
std::optional<Integer> isqrt_exact(const Integer& x);

/// Square root of a mod 2^a.precision, lifted bit by bit from the mod-8
/// solution. Requires a.residue ≡ 1 (mod 8) and a.precision >= 3.
///
/// The odd solutions of x^2 ≡ a (mod 2^K) are {±x, ±x + 2^(K-1)}; fixing
/// x ≡ sign_mod4 (mod 4) with sign_mod4 in {1, 3} collapses them to a single
/// class mod 2^(K-1), so the result carries precision a.precision - 1.
TwoAdicTrunc hensel_sqrt(const TwoAdicTrunc& a, int sign_mod4);

}  // namespace dimers
