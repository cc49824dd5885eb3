#pragma once

#include <memory>
#include <vector>

#include "dimers/numeric.hpp"
#include "dimers/polynomial.hpp"

namespace dimers {

/// The m-th cyclotomic polynomial, by exact division of z^m - 1 by the
/// product of Phi_d over the proper divisors d of m.
IntPolynomial cyclotomic_polynomial(unsigned long m);

class CycloElement;

/// Arithmetic context for Z[z]/Phi_m(z) with m odd, m >= 3. Working modulo
/// Phi_m rather than z^m - 1 means the rational integers are exactly the
/// constant coefficient vectors, so Galois-invariant products can be read
/// off directly.
class CycloRing {
public:
    explicit CycloRing(unsigned long order);

    unsigned long order() const { return data_->order; }
    std::size_t degree() const { return static_cast<std::size_t>(data_->modulus.degree()); }
    const IntPolynomial& modulus() const { return data_->modulus; }

    CycloElement zero() const;
    CycloElement constant(Integer c) const;
    /// zeta^exponent, with the exponent taken mod m (negative allowed).
    CycloElement zeta_power(long exponent) const;
    CycloElement reduce(const IntPolynomial& p) const;

    friend bool operator==(const CycloRing& a, const CycloRing& b) {
        return a.order() == b.order();
    }

private:
    struct Data {
        unsigned long order;
        IntPolynomial modulus;
    };
    std::shared_ptr<const Data> data_;
};

/// A residue in Z[z]/Phi_m(z): a coefficient vector of length deg Phi_m.
class CycloElement {
public:
    const CycloRing& ring() const { return ring_; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    bool is_constant() const;
    /// The value of a constant element. Throws CheckFailed otherwise.
    Integer as_integer() const;
    /// True iff some coefficient is odd, i.e. the image in F2[z]/Phi_m is
    /// nonzero.
    bool nonzero_mod2() const;

    CycloElement operator-() const;
    friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator+(const CycloElement& a, const Integer& c);
    friend CycloElement operator*(const Integer& c, const CycloElement& a);
    friend bool operator==(const CycloElement& a, const CycloElement& b);

private:
    friend class CycloRing;
    CycloElement(CycloRing ring, std::vector<Integer> coeffs);
    CycloRing ring_;
    std::vector<Integer> coeffs_;
};

/// Caps the pairwise products, which take n(n-1)/2 ring multiplications.
struct CycloBudget {
    long max_n = 16;
};

/// alpha_{i,j} = zeta^i + zeta^-i + zeta^j + zeta^-j in Z[z]/Phi_{2n+1}.
CycloElement alpha(const CycloRing& ring, long i, long j);
CycloElement alpha(long n, long i, long j);

/// f(n) = prod_{1 <= i < j <= n} (4 + alpha_{i,j}); reduces to an odd
/// positive rational integer. Throws CheckFailed if it does not.
Integer f_exact(long n, const CycloBudget& budget = {});

/// prod_{i=1..n} (2 + zeta^i + zeta^-i); always the constant 1.
/// Throws CheckFailed on any other outcome.
Integer unit_product(long n);

/// prod_{1 <= i < j <= n} alpha_{i,j}, which is always +1 or -1 (-1 exactly
/// when n ≡ 2 mod 4). Returns the computed sign; throws CheckFailed if the
/// product is not ±1.
int pair_product_sign(long n, const CycloBudget& budget = {});

/// prod_{t=1..n} (zeta^t + zeta^-t) = (-1)^floor((n+1)/2). Returns the sign;
/// throws CheckFailed on a mismatch with the closed form.
int cos_product_sign(long n);

struct FullProductResult {
    long valuation = 0;
    int sign = 1;

    friend bool operator==(const FullProductResult&, const FullProductResult&) = default;
};

/// prod_{i,j=1..n} alpha_{i,j} = (-1)^floor((n+1)/2) * 2^n. Returns the
/// 2-adic valuation and the sign of the odd part; throws CheckFailed if the
/// odd part is not ±1.
FullProductResult full_product_check(long n, const CycloBudget& budget = {});

}  // namespace dimers
