#include "dimers/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace dimers {

namespace {

const Integer kZeroInt = 0;
const Rational kZeroRat = 0;

template <typename Coeff>
void append_term(std::ostringstream& out, const Coeff& c, std::size_t k, const std::string& var,
                 bool first) {
    if (!first) out << (c < 0 ? " - " : " + ");
    Coeff a = (!first && c < 0) ? Coeff(-c) : c;
    if (k == 0) {
        out << a;
        return;
    }
    if (a != 1) out << a << "*";
    out << var;
    if (k > 1) out << "^" << k;
}

template <typename Coeff>
std::string poly_to_string(const std::vector<Coeff>& coeffs, const std::string& var) {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] == 0) continue;
        append_term(out, coeffs[i], i, var, first);
        first = false;
    }
    return first ? "0" : out.str();
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(Integer c) {
    if (c == 0) return IntPolynomial{};
    std::vector<Integer> v;
    v.push_back(std::move(c));
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, Integer lead) {
    if (lead == 0) return IntPolynomial{};
    std::vector<Integer> v(degree + 1);
    v[degree] = std::move(lead);
    return IntPolynomial(std::move(v));
}

const Integer& IntPolynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZeroInt;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return IntPolynomial{};
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Integer(k) * coeffs_[k];
    return IntPolynomial(std::move(d));
}

Integer IntPolynomial::eval(const Integer& x) const {
    Integer acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Integer> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial{};
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(v));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod_monic(const IntPolynomial& num,
                                                                    const IntPolynomial& den) {
    if (den.is_zero() || den.coeffs_.back() != 1)
        throw std::invalid_argument("divmod_monic: divisor must be monic");
    std::vector<Integer> rem = num.coeffs_;
    const long dd = den.degree();
    if (num.degree() < dd) return {IntPolynomial{}, num};
    std::vector<Integer> quot(num.degree() - dd + 1);
    for (long k = num.degree() - dd; k >= 0; --k) {
        Integer c = rem[k + dd];
        if (c == 0) continue;
        quot[k] = c;
        for (long i = 0; i <= dd; ++i) rem[k + i] -= c * den.coeffs_[i];
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

std::string IntPolynomial::to_string(const std::string& var) const {
    return poly_to_string(coeffs_, var);
}

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

RationalPolynomial RationalPolynomial::constant(Rational c) {
    if (c == 0) return RationalPolynomial{};
    std::vector<Rational> v;
    v.push_back(std::move(c));
    return RationalPolynomial(std::move(v));
}

const Rational& RationalPolynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZeroRat;
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::eval(const Integer& x) const {
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * Rational(x) + coeffs_[i];
    return acc;
}

RationalPolynomial RationalPolynomial::operator-() const {
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return RationalPolynomial(std::move(v));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return RationalPolynomial{};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(v));
}

std::string RationalPolynomial::to_string(const std::string& var) const {
    return poly_to_string(coeffs_, var);
}

}  // namespace dimers
