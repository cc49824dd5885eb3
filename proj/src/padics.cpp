#include "dimers/padics.hpp"

#include <stdexcept>
#include <string>

#include "dimers/errors.hpp"

namespace dimers {

std::optional<long> val2(const Rational& x) {
    if (x == 0) return std::nullopt;
    return v2(x.get_num()) - v2(x.get_den());
}

TwoAdicTrunc reduce_mod2k(const Rational& x, unsigned K) {
    if (K == 0) throw std::invalid_argument("reduce_mod2k: precision must be positive");
    if (x == 0) return {Integer(0), K};
    // x is canonical, so val2(x) >= 0 is the same as the denominator being odd.
    if (mpz_even_p(x.get_den().get_mpz_t()))
        throw NegativeValuation("reduce_mod2k: valuation " + std::to_string(*val2(x)) +
                                " is negative");
    const Integer modulus = pow2(K);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), modulus.get_mpz_t());
    return {mod_pow2(x.get_num() * inv, K), K};
}

std::optional<Integer> isqrt_exact(const Integer& x) {
    if (x < 0) throw std::invalid_argument("isqrt_exact: negative input");
    Integer root;
    mpz_sqrt(root.get_mpz_t(), x.get_mpz_t());
    if (root * root != x) return std::nullopt;
    return root;
}

TwoAdicTrunc hensel_sqrt(const TwoAdicTrunc& a, int sign_mod4) {
    if (sign_mod4 != 1 && sign_mod4 != 3)
        throw std::invalid_argument("hensel_sqrt: sign_mod4 must be 1 or 3");
    if (a.precision < 3)
        throw std::invalid_argument("hensel_sqrt: precision must be at least 3");
    if (mod_pow2(a.residue, 3) != 1)
        throw NotASquare("hensel_sqrt: residue is not 1 mod 8");

    // x ≡ sign_mod4 (mod 4) solves x^2 ≡ a (mod 8). Each step fixes one more
    // bit: if x^2 - a has 2-adic valuation exactly t, adding 2^(t-1) to the
    // odd x flips bit t of the difference without touching x mod 4 (t >= 3).
    Integer x = sign_mod4;
    for (unsigned t = 3; t < a.precision; ++t) {
        Integer diff = (x * x - a.residue) >> t;
        if (mpz_odd_p(diff.get_mpz_t())) x += pow2(t - 1);
    }
    return {mod_pow2(x, a.precision - 1), a.precision - 1};
}

}  // namespace dimers
