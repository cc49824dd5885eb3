#include "dimers/quasipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dimers/errors.hpp"
#include "dimers/series.hpp"

namespace dimers {

namespace {

// p(-1-x), by Horner in the polynomial ring.
RationalPolynomial reflect(const RationalPolynomial& p) {
    const RationalPolynomial arg(
        std::vector<Rational>{Rational(-1), Rational(-1)});
    RationalPolynomial out;
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        out = out * arg + RationalPolynomial::constant(p.coeffs()[i]);
    return out;
}

// Solves the dense rational system rows * x = rhs (augmented rows). Returns
// the unique solution; throws on inconsistency or rank deficiency.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> m, std::size_t unknowns) {
    const std::size_t rows = m.size();
    std::vector<std::size_t> pivot_of_col(unknowns, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < unknowns && rank < rows; ++col) {
        std::size_t piv = SIZE_MAX;
        for (std::size_t r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == SIZE_MAX) continue;
        std::swap(m[rank], m[piv]);
        const Rational inv = 1 / m[rank][col];
        for (auto& c : m[rank]) c *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (std::size_t c = col; c <= unknowns; ++c) m[r][c] -= factor * m[rank][c];
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (m[r][unknowns] != 0)
            throw InconsistentSamples("fit: samples admit no quasi-polynomial at this degree");
    if (rank < unknowns) throw UnderdeterminedFit("fit: sample set does not pin down the fit");
    std::vector<Rational> x(unknowns);
    for (std::size_t col = 0; col < unknowns; ++col) x[col] = m[pivot_of_col[col]][unknowns];
    return x;
}

}  // namespace

QuasiPolynomial fit(const std::vector<std::pair<long, Rational>>& samples, unsigned degree_bound) {
    std::map<long, Rational> by_n;
    for (const auto& [n, v] : samples) {
        auto [it, inserted] = by_n.emplace(n, v);
        if (!inserted && it->second != v)
            throw InconsistentSamples("fit: contradictory samples at n = " + std::to_string(n));
    }
    const std::size_t need = degree_bound + 1;
    std::size_t evens = 0, odds = 0;
    for (const auto& [n, v] : by_n) (math_mod(n, 2) == 0 ? evens : odds)++;
    if (by_n.size() < 2 * need || evens < need || odds < need)
        throw UnderdeterminedFit("fit: need at least " + std::to_string(need) +
                                 " samples of each parity");

    const std::size_t unknowns = 2 * need;  // a_0..a_d, b_0..b_d
    std::vector<std::vector<Rational>> m;
    m.reserve(by_n.size());
    for (const auto& [n, v] : by_n) {
        std::vector<Rational> row(unknowns + 1);
        const int parity_sign = math_mod(n, 2) == 0 ? 1 : -1;
        Rational p(1);
        for (std::size_t j = 0; j < need; ++j) {
            row[j] = p;
            row[need + j] = parity_sign * p;
            p *= Rational(Integer(n));
        }
        row[unknowns] = v;
        m.push_back(std::move(row));
    }
    auto x = solve_exact(std::move(m), unknowns);
    std::vector<Rational> a(x.begin(), x.begin() + need);
    std::vector<Rational> b(x.begin() + need, x.end());
    return {RationalPolynomial(std::move(a)), RationalPolynomial(std::move(b))};
}

Rational eval(const QuasiPolynomial& q, long n) {
    const Integer arg(n);
    Rational value = q.even_part.eval(arg);
    if (math_mod(n, 2) == 0)
        value += q.sign_part.eval(arg);
    else
        value -= q.sign_part.eval(arg);
    return value;
}

bool check_reflection(const QuasiPolynomial& q) {
    // q(-1-n) = A(-1-n) - (-1)^n B(-1-n), so the identity q(-1-n) = q(n)
    // amounts to A(-1-n) = A(n) and B(-1-n) = -B(n).
    return reflect(q.even_part) == q.even_part && reflect(q.sign_part) == -q.sign_part;
}

QuasiPolynomial fit_u(unsigned k) {
    if (k == 0) throw std::invalid_argument("fit_u: k must be positive");
    // Exact U_k(n) values, extended on demand.
    std::vector<Rational> values;
    auto value_at = [&](long n) -> const Rational& {
        while (static_cast<long>(values.size()) <= n)
            values.push_back(u_values(static_cast<long>(values.size()), k)[k - 1]);
        return values[static_cast<std::size_t>(n)];
    };

    for (unsigned degree = k; degree <= 2 * k + 4; ++degree) {
        const long fit_points = 2 * (static_cast<long>(degree) + 1);
        std::vector<std::pair<long, Rational>> samples;
        for (long n = 0; n < fit_points; ++n) samples.emplace_back(n, value_at(n));
        QuasiPolynomial q;
        try {
            q = fit(samples, degree);
        } catch (const InconsistentSamples&) {
            continue;
        }
        bool held_out_ok = true;
        for (long n = fit_points; n < fit_points + 5; ++n)
            if (eval(q, n) != value_at(n)) {
                held_out_ok = false;
                break;
            }
        if (!held_out_ok) continue;
        if (!check_reflection(q))
            throw CheckFailed("fit_u: fitted U_" + std::to_string(k) +
                              " violates the reflection identity");
        return q;
    }
    throw CheckFailed("fit_u: no quasi-polynomial of degree <= " + std::to_string(2 * k + 4) +
                      " fits U_" + std::to_string(k));
}

const QuasiPolynomial& UFits::get(unsigned k) {
    auto it = fits_.find(k);
    if (it == fits_.end()) it = fits_.emplace(k, fit_u(k)).first;
    return it->second;
}

std::vector<Rational> UFits::values_at(long n, std::size_t k_max) {
    std::vector<Rational> u(k_max);
    for (std::size_t k = 1; k <= k_max; ++k) u[k - 1] = eval(get(static_cast<unsigned>(k)), n);
    return u;
}

TwoAdicTrunc f_mod_quasi(long n, unsigned K, UFits& fits) {
    return f_mod_from_u(n, K, fits.values_at(n, 2 * static_cast<std::size_t>(K)));
}

FunctionalReport functional_check(long n, unsigned K, UFits& fits) {
    if (n < 0) throw std::invalid_argument("functional_check: n must be nonnegative");
    FunctionalReport report;
    report.n = n;
    report.bits = K;
    report.lhs = f_mod_quasi(-1 - n, K, fits);
    report.rhs = f_mod(n, K);
    const long r = math_mod(n, 4);
    report.sign = (r == 0 || r == 3) ? 1 : -1;
    const Integer expected = report.sign == 1 ? report.rhs.residue
                                              : mod_pow2(-report.rhs.residue, K);
    report.pass = (report.lhs.residue == expected);
    return report;
}

ContinuityReport continuity_scan(long n_max, unsigned k) {
    if (n_max < 1 || k == 0) throw std::invalid_argument("continuity_scan: bad arguments");
    std::vector<Integer> values(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n)
        values[static_cast<std::size_t>(n)] = mod_pow2(f_mod(n, std::max(k, 2u)).residue, k);

    ContinuityReport report;
    report.k = k;
    for (unsigned ell = 0;; ++ell) {
        // Does n ≡ m (mod 2^ell) force equal values mod 2^k?
        std::optional<std::pair<long, long>> counterexample;
        const long period = 1L << ell;
        for (long r = 0; r < period && r <= n_max && !counterexample; ++r) {
            long first = r;
            for (long n = r + period; n <= n_max; n += period)
                if (values[static_cast<std::size_t>(n)] !=
                    values[static_cast<std::size_t>(first)]) {
                    counterexample = {first, n};
                    break;
                }
        }
        if (!counterexample) {
            report.ell = ell;
            return report;
        }
        report.witness = counterexample;  // witness that this ell fails
    }
}

}  // namespace dimers
