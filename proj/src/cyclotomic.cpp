#include "dimers/cyclotomic.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "dimers/errors.hpp"

namespace dimers {

IntPolynomial cyclotomic_polynomial(unsigned long m) {
    if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    // Phi_d for all divisors d of m, in increasing order.
    std::map<unsigned long, IntPolynomial> phi;
    for (unsigned long d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        IntPolynomial num = IntPolynomial::monomial(d) - IntPolynomial::constant(1);
        IntPolynomial den = IntPolynomial::constant(1);
        for (const auto& [e, phi_e] : phi)
            if (d % e == 0) den = den * phi_e;
        auto [quot, rem] = IntPolynomial::divmod_monic(num, den);
        if (!rem.is_zero())
            throw CheckFailed("cyclotomic_polynomial: division by proper divisors not exact");
        phi.emplace(d, std::move(quot));
    }
    return phi.at(m);
}

CycloRing::CycloRing(unsigned long order) {
    if (order < 3 || order % 2 == 0)
        throw std::invalid_argument("CycloRing: order must be odd and at least 3");
    data_ = std::make_shared<const Data>(Data{order, cyclotomic_polynomial(order)});
}

CycloElement CycloRing::zero() const {
    return CycloElement(*this, std::vector<Integer>(degree()));
}

CycloElement CycloRing::constant(Integer c) const {
    std::vector<Integer> v(degree());
    v[0] = std::move(c);
    return CycloElement(*this, std::move(v));
}

CycloElement CycloRing::zeta_power(long exponent) const {
    const auto e = static_cast<std::size_t>(math_mod(exponent, static_cast<long>(order())));
    return reduce(IntPolynomial::monomial(e));
}

CycloElement CycloRing::reduce(const IntPolynomial& p) const {
    auto [quot, rem] = IntPolynomial::divmod_monic(p, modulus());
    (void)quot;
    std::vector<Integer> v(degree());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = rem.coeff(k);
    return CycloElement(*this, std::move(v));
}

CycloElement::CycloElement(CycloRing ring, std::vector<Integer> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

bool CycloElement::is_constant() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return false;
    return true;
}

Integer CycloElement::as_integer() const {
    if (!is_constant())
        throw CheckFailed("CycloElement: expected a rational integer, got a non-constant residue");
    return coeffs_[0];
}

bool CycloElement::nonzero_mod2() const {
    for (const auto& c : coeffs_)
        if (mpz_odd_p(c.get_mpz_t())) return true;
    return false;
}

namespace {

void require_same_ring(const CycloElement& a, const CycloElement& b) {
    if (!(a.ring() == b.ring()))
        throw std::invalid_argument("CycloElement: mixed ring orders " +
                                    std::to_string(a.ring().order()) + " and " +
                                    std::to_string(b.ring().order()));
}

}  // namespace

CycloElement CycloElement::operator-() const {
    std::vector<Integer> v(coeffs_.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = -coeffs_[k];
    return CycloElement(ring_, std::move(v));
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
    require_same_ring(a, b);
    std::vector<Integer> v(a.coeffs_.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeffs_[k] + b.coeffs_[k];
    return CycloElement(a.ring_, std::move(v));
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) {
    require_same_ring(a, b);
    std::vector<Integer> v(a.coeffs_.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeffs_[k] - b.coeffs_[k];
    return CycloElement(a.ring_, std::move(v));
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    require_same_ring(a, b);
    // Schoolbook product, then remainder mod Phi_m. Degrees here are tiny.
    return a.ring_.reduce(IntPolynomial(a.coeffs_) * IntPolynomial(b.coeffs_));
}

CycloElement operator+(const CycloElement& a, const Integer& c) {
    std::vector<Integer> v = a.coeffs_;
    v[0] += c;
    return CycloElement(a.ring_, std::move(v));
}

CycloElement operator*(const Integer& c, const CycloElement& a) {
    std::vector<Integer> v(a.coeffs_.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = c * a.coeffs_[k];
    return CycloElement(a.ring_, std::move(v));
}

bool operator==(const CycloElement& a, const CycloElement& b) {
    return a.ring() == b.ring() && a.coeffs_ == b.coeffs_;
}

CycloElement alpha(const CycloRing& ring, long i, long j) {
    return ring.zeta_power(i) + ring.zeta_power(-i) + ring.zeta_power(j) + ring.zeta_power(-j);
}

CycloElement alpha(long n, long i, long j) {
    if (n < 1) throw std::invalid_argument("alpha: n must be positive");
    return alpha(CycloRing(2 * static_cast<unsigned long>(n) + 1), i, j);
}

namespace {

void require_within_budget(long n, const CycloBudget& budget, const char* what) {
    if (n > budget.max_n)
        throw BudgetExceeded(std::string(what) + ": n = " + std::to_string(n) +
                             " exceeds budget " + std::to_string(budget.max_n));
}

int sign_closed_form(long n) { return ((n + 1) / 2) % 2 == 0 ? 1 : -1; }

}  // namespace

Integer f_exact(long n, const CycloBudget& budget) {
    if (n < 0) throw std::invalid_argument("f_exact: n must be nonnegative");
    require_within_budget(n, budget, "f_exact");
    if (n < 2) return 1;  // empty product over 1 <= i < j <= n
    CycloRing ring(2 * static_cast<unsigned long>(n) + 1);
    CycloElement prod = ring.constant(1);
    for (long i = 1; i < n; ++i)
        for (long j = i + 1; j <= n; ++j) prod = prod * (alpha(ring, i, j) + Integer(4));
    Integer value = prod.as_integer();
    if (value <= 0 || mpz_even_p(value.get_mpz_t()))
        throw CheckFailed("f_exact: product is not an odd positive integer: " + value.get_str());
    return value;
}

Integer unit_product(long n) {
    if (n < 1) throw std::invalid_argument("unit_product: n must be positive");
    CycloRing ring(2 * static_cast<unsigned long>(n) + 1);
    CycloElement prod = ring.constant(1);
    for (long i = 1; i <= n; ++i)
        prod = prod * (ring.zeta_power(i) + ring.zeta_power(-i) + Integer(2));
    Integer value = prod.as_integer();
    if (value != 1) throw CheckFailed("unit_product: expected 1, got " + value.get_str());
    return value;
}

int pair_product_sign(long n, const CycloBudget& budget) {
    if (n < 0) throw std::invalid_argument("pair_product_sign: n must be nonnegative");
    require_within_budget(n, budget, "pair_product_sign");
    if (n < 2) return 1;
    CycloRing ring(2 * static_cast<unsigned long>(n) + 1);
    CycloElement prod = ring.constant(1);
    for (long i = 1; i < n; ++i)
        for (long j = i + 1; j <= n; ++j) prod = prod * alpha(ring, i, j);
    Integer value = prod.as_integer();
    if (value != 1 && value != -1)
        throw CheckFailed("pair_product_sign: expected ±1, got " + value.get_str());
    return value == 1 ? 1 : -1;
}

int cos_product_sign(long n) {
    if (n < 1) throw std::invalid_argument("cos_product_sign: n must be positive");
    CycloRing ring(2 * static_cast<unsigned long>(n) + 1);
    CycloElement prod = ring.constant(1);
    for (long t = 1; t <= n; ++t) prod = prod * (ring.zeta_power(t) + ring.zeta_power(-t));
    Integer value = prod.as_integer();
    const int expected = sign_closed_form(n);
    if (value != expected)
        throw CheckFailed("cos_product_sign: expected " + std::to_string(expected) + ", got " +
                          value.get_str());
    return expected;
}

FullProductResult full_product_check(long n, const CycloBudget& budget) {
    if (n < 1) throw std::invalid_argument("full_product_check: n must be positive");
    require_within_budget(n, budget, "full_product_check");
    CycloRing ring(2 * static_cast<unsigned long>(n) + 1);
    CycloElement prod = ring.constant(1);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j) prod = prod * alpha(ring, i, j);
    Integer value = prod.as_integer();
    if (value == 0) throw CheckFailed("full_product_check: product vanished");
    const long valuation = v2(value);
    Integer odd = value >> static_cast<unsigned long>(valuation);
    if (odd != 1 && odd != -1)
        throw CheckFailed("full_product_check: odd part is not ±1: " + odd.get_str());
    return {valuation, odd == 1 ? 1 : -1};
}

}  // namespace dimers
