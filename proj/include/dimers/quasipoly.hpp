#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dimers/numeric.hpp"
#include "dimers/padics.hpp"
#include "dimers/polynomial.hpp"

namespace dimers {

/// n -> A(n) + (-1)^n B(n) with exact rational polynomials A, B. The pair
/// (A, B) is unique given values on enough consecutive integers, and the
/// reflection n <-> -1-n (which flips parity) acts cleanly on it.
struct QuasiPolynomial {
    RationalPolynomial even_part;  // A
    RationalPolynomial sign_part;  // B

    friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;
};

/// Exact interpolation of samples (n, value) by a quasi-polynomial with
/// deg A, deg B <= degree_bound, via Gaussian elimination over Q.
/// Throws UnderdeterminedFit when fewer than 2(degree_bound+1) distinct
/// points, or fewer than degree_bound+1 of either parity, are supplied;
/// throws InconsistentSamples when no such quasi-polynomial exists.
QuasiPolynomial fit(const std::vector<std::pair<long, Rational>>& samples, unsigned degree_bound);

/// A(n) + (-1)^n B(n), exact.
Rational eval(const QuasiPolynomial& q, long n);

/// True iff q(-1-n) = q(n) holds as a formal identity, i.e.
/// A(-1-n) = A(n) and B(-1-n) = -B(n) coefficientwise.
bool check_reflection(const QuasiPolynomial& q);

/// Fits U_k as a quasi-polynomial from exact series values at n = 0, 1, ...,
/// adaptively raising the degree from k until the fit also predicts five
/// held-out values exactly; the result must pass check_reflection.
/// Throws CheckFailed if no degree up to 2k+4 works.
QuasiPolynomial fit_u(unsigned k);

/// Lazily built and cached quasi-polynomial fits of the U_k. Not
/// thread-safe; use one instance per thread.
class UFits {
public:
    const QuasiPolynomial& get(unsigned k);
    /// U_1..U_{k_max} at argument n (any integer), entry [k-1] = U_k.
    std::vector<Rational> values_at(long n, std::size_t k_max);

private:
    std::map<unsigned, QuasiPolynomial> fits_;
};

/// f(n) mod 2^K with the power sums evaluated from quasi-polynomial fits;
/// works for negative n, where the direct series path is unavailable.
TwoAdicTrunc f_mod_quasi(long n, unsigned K, UFits& fits);

/// One functional-equation check f(-1-n) = ±f(n) mod 2^K: the left side via
/// quasi-polynomial power sums, the right via the direct series, the sign
/// +1 for n ≡ 0,3 (mod 4) and -1 for n ≡ 1,2 (mod 4).
struct FunctionalReport {
    long n = 0;
    unsigned bits = 0;
    TwoAdicTrunc lhs;  // f(-1-n) mod 2^K
    TwoAdicTrunc rhs;  // f(n) mod 2^K
    int sign = 1;
    bool pass = false;
};

FunctionalReport functional_check(long n, unsigned K, UFits& fits);

/// Smallest l such that n ≡ m (mod 2^l) forces f(n) ≡ f(m) (mod 2^k) over
/// 0 <= n, m <= n_max, with a witness pair showing that l-1 fails (absent
/// when l = 0). Empirical evidence over a finite window, not a proof.
struct ContinuityReport {
    unsigned k = 0;
    unsigned ell = 0;
    std::optional<std::pair<long, long>> witness;
};

ContinuityReport continuity_scan(long n_max, unsigned k);

}  // namespace dimers
