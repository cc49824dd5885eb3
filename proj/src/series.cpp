#include "dimers/series.hpp"

#include <stdexcept>
#include <utility>

#include "dimers/errors.hpp"

namespace dimers {

namespace {

// Truncated integer series (fixed length), for the Chebyshev recurrences.
using TruncSeries = std::vector<Integer>;

TruncSeries trunc_mul(const TruncSeries& a, const TruncSeries& b, std::size_t len) {
    TruncSeries out(len);
    for (std::size_t i = 0; i < len && i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < len && j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// (C_m, C_{m+1}) mod x^len by fast doubling:
//   C_{2m} = C_m^2 - 2,  C_{2m+1} = C_m C_{m+1} - x.
TruncSeries cheb_x(std::size_t len) {
    TruncSeries x(len);
    if (len > 1) x[1] = 1;
    return x;
}

std::pair<TruncSeries, TruncSeries> cheb_pair(unsigned long m, std::size_t len) {
    if (m == 0) {
        TruncSeries c0(len);
        c0[0] = 2;
        return {std::move(c0), cheb_x(len)};
    }
    auto [a, b] = cheb_pair(m / 2, len);
    TruncSeries ab = trunc_mul(a, b, len);  // C_{2(m/2)+1} + x
    if (len > 1) ab[1] -= 1;
    if (m % 2 == 0) {
        TruncSeries aa = trunc_mul(a, a, len);
        aa[0] -= 2;
        return {std::move(aa), std::move(ab)};
    }
    TruncSeries bb = trunc_mul(b, b, len);
    bb[0] -= 2;
    return {std::move(ab), std::move(bb)};
}

// P'(x)/P(x) mod x^order from the low coefficients of P (length >= order+1).
RationalSeries log_derivative_low(const std::vector<Integer>& p, std::size_t order) {
    if (p.empty() || p[0] == 0)
        throw std::domain_error("log_derivative_series: P(0) must be nonzero");
    RationalSeries q;
    q.coeffs.resize(order);
    const Rational d0 = Rational(p[0]);
    for (std::size_t k = 0; k < order; ++k) {
        // numerator coefficient k of P': (k+1) * p[k+1]
        Rational acc = (k + 1 < p.size()) ? Rational(Integer(k + 1) * p[k + 1]) : Rational(0);
        for (std::size_t i = 1; i <= k; ++i)
            if (i < p.size()) acc -= Rational(p[i]) * q.coeffs[k - i];
        q.coeffs[k] = acc / d0;
    }
    return q;
}

}  // namespace

IntPolynomial p_poly(long n) {
    if (n < 0) throw std::invalid_argument("p_poly: n must be nonnegative");
    const unsigned long m = 2 * static_cast<unsigned long>(n) + 1;
    // Plain recurrence; full degree is only wanted at desk scale.
    std::vector<Integer> prev{2};      // C_0
    std::vector<Integer> cur{0, 1};    // C_1
    for (unsigned long i = 1; i < m; ++i) {
        std::vector<Integer> next(cur.size() + 1);
        for (std::size_t k = 0; k < cur.size(); ++k) next[k + 1] = cur[k];
        for (std::size_t k = 0; k < prev.size(); ++k) next[k] -= prev[k];
        prev = std::move(cur);
        cur = std::move(next);
    }
    cur[0] -= 2;
    return IntPolynomial(std::move(cur));
}

std::vector<Integer> p_poly_low_coeffs(unsigned long m, std::size_t order) {
    if (order == 0) return {};
    auto p = cheb_pair(m, order).first;
    p[0] -= 2;
    return p;
}

RationalSeries log_derivative_series(const IntPolynomial& P, std::size_t order) {
    return log_derivative_low(P.coeffs(), order);
}

std::vector<Rational> u_values(long n, std::size_t k_max) {
    if (n < 0) throw std::invalid_argument("u_values: n must be nonnegative");
    if (k_max == 0) return {};
    const unsigned long m = 2 * static_cast<unsigned long>(n) + 1;
    auto q = log_derivative_low(p_poly_low_coeffs(m, k_max + 1), k_max);
    std::vector<Rational> u(k_max);
    for (std::size_t k = 0; k < k_max; ++k) u[k] = -q.coeffs[k];
    return u;
}

std::vector<Rational> s_values(const std::vector<Rational>& u, std::size_t k_max) {
    if (u.size() < 2 * k_max)
        throw std::invalid_argument("s_values: need U_1..U_{2k_max}");
    std::vector<Rational> s(k_max);
    Rational four_to_minus_k(1);
    const Rational quarter = make_rational(1, 4);
    for (std::size_t k = 1; k <= k_max; ++k) {
        four_to_minus_k *= quarter;
        s[k - 1] = (u[k - 1] * u[k - 1] - 2 * u[2 * k - 1] + four_to_minus_k) * quarter;
    }
    return s;
}

std::vector<Rational> newton_e(const std::vector<Rational>& s) {
    std::vector<Rational> e(s.size() + 1);
    e[0] = 1;
    for (std::size_t k = 1; k <= s.size(); ++k) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            if (i % 2 == 1)
                acc += s[i - 1] * e[k - i];
            else
                acc -= s[i - 1] * e[k - i];
        }
        e[k] = acc / Rational(static_cast<unsigned long>(k));
    }
    return e;
}

int sign_factor(long n) {
    const long r = math_mod(n, 4);
    return (r == 0 || r == 3) ? 1 : -1;
}

TwoAdicTrunc f_squared_mod(long n, unsigned K, const std::vector<Rational>& e) {
    if (K == 0) throw std::invalid_argument("f_squared_mod: precision must be positive");
    if (e.size() < K) throw std::invalid_argument("f_squared_mod: need E_0..E_{K-1}");
    Integer acc = 0;
    Rational four_to_k(1);
    for (unsigned k = 0; k < K; ++k) {
        acc += reduce_mod2k(four_to_k * e[k], K).residue;
        four_to_k *= 4;
    }
    if (sign_factor(n) < 0) acc = -acc;
    return {mod_pow2(acc, K), K};
}

TwoAdicTrunc f_mod_from_u(long n, unsigned K, const std::vector<Rational>& u) {
    if (K < 2) throw std::invalid_argument("f_mod: precision must be at least 2");
    // f mod 2^K needs f^2 mod 2^(K+1): the square root costs one bit.
    auto s = s_values(u, K);
    auto e = newton_e(s);
    auto fsq = f_squared_mod(n, K + 1, e);
    const int sign4 = math_mod(n, 4) == 2 ? 3 : 1;
    return hensel_sqrt(fsq, sign4);
}

TwoAdicTrunc f_mod(long n, unsigned K) {
    if (n < 0)
        throw std::invalid_argument("f_mod: negative n goes through the quasi-polynomial path");
    // order 2K suffices; two extra terms of margin are cheap.
    return f_mod_from_u(n, K, u_values(n, 2 * static_cast<std::size_t>(K) + 2));
}

PowerSumTable power_sum_table(long n, std::size_t k_max) {
    PowerSumTable t;
    t.n = n;
    t.u = u_values(n, 2 * k_max);
    t.s = s_values(t.u, k_max);
    t.e = newton_e(t.s);
    return t;
}

}  // namespace dimers
