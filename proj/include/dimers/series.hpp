#pragma once

#include <cstddef>
#include <vector>

#include "dimers/numeric.hpp"
#include "dimers/padics.hpp"
#include "dimers/polynomial.hpp"

namespace dimers {

/// Truncated power series with exact rational coefficients, degree 0 upward.
struct RationalSeries {
    std::vector<Rational> coeffs;

    std::size_t order() const { return coeffs.size(); }
};

/// P_n(x) = prod over all (2n+1)-st roots of unity zeta of (x - (zeta+1/zeta)),
/// as the integer polynomial C_{2n+1}(x) - 2, where C_0 = 2, C_1 = x and
/// C_{m+1} = x*C_m - C_{m-1} (so C_m(2 cos t) = 2 cos(mt)). Degree 2n+1,
/// constant term -2.
IntPolynomial p_poly(long n);

/// The first `order` coefficients of C_m(x) - 2, without materializing the
/// full degree-m polynomial. Cost O(order^2 log m).
std::vector<Integer> p_poly_low_coeffs(unsigned long m, std::size_t order);

/// Taylor series of P'(x)/P(x) at 0, to the given order, by exact rational
/// series division. Requires P(0) != 0.
RationalSeries log_derivative_series(const IntPolynomial& P, std::size_t order);

/// U_k(n) = sum over (2n+1)-st roots of unity of (zeta+1/zeta)^-k for
/// k = 1..k_max; equals minus the Taylor coefficients of P_n'/P_n (the
/// coefficient of x^(k-1) is -U_k). Entry [k-1] holds U_k.
std::vector<Rational> u_values(long n, std::size_t k_max);

/// S_k = (U_k^2 - 2*U_{2k} + 4^-k) / 4 for k = 1..k_max, folding the full
/// double sum over root pairs down to the single sums U. Entry [k-1] holds
/// S_k; requires u.size() >= 2*k_max.
std::vector<Rational> s_values(const std::vector<Rational>& u, std::size_t k_max);

/// Elementary symmetric functions from power sums via the Newton identities
/// k*E_k = sum_{i=1..k} (-1)^(i-1) S_i E_{k-i}; returns E_0..E_{s.size()}.
std::vector<Rational> newton_e(const std::vector<Rational>& s);

/// (-1)^floor((n+1)/2), extended to all integers with period 4:
/// +1 for n ≡ 0,3 (mod 4), -1 for n ≡ 1,2 (mod 4).
int sign_factor(long n);

/// f(n)^2 mod 2^K as sign_factor(n) * sum_{k=0..K-1} 4^k E_k(n); the terms
/// with k >= K vanish mod 2^K because val2(E_k) >= -k. Requires e to cover
/// indices 0..K-1.
TwoAdicTrunc f_squared_mod(long n, unsigned K, const std::vector<Rational>& e);

/// f(n) mod 2^K from precomputed power sums U_1..U_{2K} (so the same chain
/// serves both the direct series path and quasi-polynomial evaluation).
/// Computes f^2 mod 2^(K+1) and takes the 2-adic square root with the
/// mod-4 sign 3 when n ≡ 2 (mod 4), else 1. Requires K >= 2.
TwoAdicTrunc f_mod_from_u(long n, unsigned K, const std::vector<Rational>& u);

/// f(n) mod 2^K via the direct series path; n must be nonnegative
/// (negative arguments go through the quasi-polynomial path instead).
TwoAdicTrunc f_mod(long n, unsigned K);

/// The full U/S/E chain at one argument: U_1..U_{2*k_max}, S_1..S_k_max,
/// E_0..E_k_max (u[k-1] = U_k, s[k-1] = S_k, e[k] = E_k).
struct PowerSumTable {
    long n = 0;
    std::vector<Rational> u;
    std::vector<Rational> s;
    std::vector<Rational> e;
};

PowerSumTable power_sum_table(long n, std::size_t k_max);

}  // namespace dimers
