#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dimers/numeric.hpp"

namespace dimers {

/// Dense univariate polynomial with unbounded integer coefficients,
/// lowest degree first. The zero polynomial has an empty coefficient list;
/// otherwise the leading coefficient is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);

    static IntPolynomial constant(Integer c);
    static IntPolynomial monomial(std::size_t degree, Integer lead = 1);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    // Coefficient of z^k; 0 beyond the degree.
    const Integer& coeff(std::size_t k) const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    IntPolynomial derivative() const;
    Integer eval(const Integer& x) const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

    // Quotient and remainder by a monic divisor; exact over the integers.
    static std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& num,
                                                                const IntPolynomial& den);

    std::string to_string(const std::string& var = "z") const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Dense univariate polynomial over the exact rationals, lowest degree first.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    static RationalPolynomial constant(Rational c);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rational& coeff(std::size_t k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Integer& x) const;

    RationalPolynomial operator-() const;
    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) = default;

    std::string to_string(const std::string& var = "n") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

}  // namespace dimers
