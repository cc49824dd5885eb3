#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dimers/errors.hpp"
#include "dimers/quasipoly.hpp"
#include "dimers/series.hpp"

using namespace dimers;

namespace {

Rational rat(long num, long den) { return make_rational(num, den); }

RationalPolynomial rpoly(std::vector<Rational> coeffs) {
    return RationalPolynomial(std::move(coeffs));
}

// g(n) = (2n+1) (-1)^n / 2, i.e. A = 0, B = n + 1/2
Rational g(long n) {
    const Rational v = rat(2 * n + 1, 2);
    return math_mod(n, 2) == 0 ? v : -v;
}

}  // namespace

TEST_CASE("fit") {
    SUBCASE("alternating linear samples") {
        std::vector<std::pair<long, Rational>> samples;
        for (long n = 0; n <= 3; ++n) samples.emplace_back(n, g(n));
        const auto q = fit(samples, 1);
        CHECK(q.even_part.is_zero());
        CHECK(q.sign_part == rpoly({rat(1, 2), Rational(1)}));
    }
    SUBCASE("constants and pure signs") {
        std::vector<std::pair<long, Rational>> constant;
        for (long n = 0; n <= 5; ++n) constant.emplace_back(n, Rational(7));
        const auto qc = fit(constant, 1);
        CHECK(qc.even_part == rpoly({Rational(7)}));
        CHECK(qc.sign_part.is_zero());

        std::vector<std::pair<long, Rational>> signs;
        for (long n = 0; n <= 5; ++n) signs.emplace_back(n, Rational(math_mod(n, 2) == 0 ? 1 : -1));
        const auto qs = fit(signs, 1);
        CHECK(qs.even_part.is_zero());
        CHECK(qs.sign_part == rpoly({Rational(1)}));
    }
    SUBCASE("underdetermined and inconsistent inputs") {
        std::vector<std::pair<long, Rational>> few = {{0, Rational(1)}, {1, Rational(2)}};
        CHECK_THROWS_AS(fit(few, 1), UnderdeterminedFit);

        std::vector<std::pair<long, Rational>> evens_only = {
            {0, Rational(1)}, {2, Rational(2)}, {4, Rational(3)}, {6, Rational(4)}};
        CHECK_THROWS_AS(fit(evens_only, 1), UnderdeterminedFit);

        // n^2 is not a degree-1 quasi-polynomial once enough points pin it down
        std::vector<std::pair<long, Rational>> quad;
        for (long n = 0; n <= 5; ++n) quad.emplace_back(n, Rational(n * n));
        CHECK_THROWS_AS(fit(quad, 1), InconsistentSamples);

        std::vector<std::pair<long, Rational>> contradictory = {
            {0, Rational(1)}, {0, Rational(2)}};
        CHECK_THROWS_AS(fit(contradictory, 0), InconsistentSamples);
    }
}

TEST_CASE("eval") {
    const QuasiPolynomial q{RationalPolynomial{}, rpoly({rat(1, 2), Rational(1)})};
    CHECK(eval(q, -4) == rat(-7, 2));
    CHECK(eval(q, 3) == rat(-7, 2));  // reflection through -1-n
    for (long n = 0; n <= 8; ++n) CHECK(eval(q, n) == g(n));

    const QuasiPolynomial c{rpoly({Rational(7)}), RationalPolynomial{}};
    CHECK(eval(c, 1000000000L) == 7);
}

TEST_CASE("check_reflection") {
    CHECK(check_reflection({RationalPolynomial{}, rpoly({rat(1, 2), Rational(1)})}));
    CHECK_FALSE(check_reflection({rpoly({Rational(0), Rational(1)}), RationalPolynomial{}}));
    CHECK(check_reflection({rpoly({Rational(0), Rational(1), Rational(1)}),
                            RationalPolynomial{}}));  // n^2 + n
    CHECK(check_reflection({rpoly({Rational(3)}), RationalPolynomial{}}));
}

TEST_CASE("fit_u") {
    SUBCASE("U_1 = (-1)^n (n + 1/2)") {
        const auto q = fit_u(1);
        CHECK(q.even_part.is_zero());
        CHECK(q.sign_part == rpoly({rat(1, 2), Rational(1)}));
        CHECK(eval(q, 5) == rat(-11, 2));
        CHECK(eval(q, 5) == u_values(5, 1)[0]);
    }
    SUBCASE("fits predict out-of-window values and reflect, k <= 8") {
        UFits fits;
        for (unsigned k = 1; k <= 8; ++k) {
            const auto& q = fits.get(k);
            CHECK(check_reflection(q));
            for (long n = 70; n < 75; ++n) CHECK(eval(q, n) == u_values(n, k)[k - 1]);
        }
    }
    SUBCASE("pointwise reflection through exact values") {
        UFits fits;
        for (unsigned k = 1; k <= 6; ++k)
            for (long n = 0; n <= 20; ++n)
                CHECK(eval(fits.get(k), -1 - n) == u_values(n, k)[k - 1]);
    }
    SUBCASE("S_k sample fits also reflect") {
        for (unsigned k = 1; k <= 4; ++k) {
            // S_k has quasi-polynomial degree at most 2k
            const unsigned degree = 2 * k;
            std::vector<std::pair<long, Rational>> samples;
            for (long n = 0; n < 2 * (static_cast<long>(degree) + 1) + 4; ++n)
                samples.emplace_back(n, s_values(u_values(n, 2 * k), k)[k - 1]);
            const auto q = fit(samples, degree);
            CHECK(check_reflection(q));
        }
    }
}

TEST_CASE("quasi-polynomial path matches the direct series on nonnegative n") {
    UFits fits;
    for (long n = 0; n <= 15; ++n) CHECK(f_mod_quasi(n, 8, fits) == f_mod(n, 8));
}

TEST_CASE("functional equation f(-1-n) = ±f(n)") {
    UFits fits;
    SUBCASE("frozen cases") {
        const auto r3 = functional_check(3, 8, fits);
        CHECK(r3.sign == 1);
        CHECK(r3.pass);
        const auto r1 = functional_check(1, 8, fits);
        CHECK(r1.sign == -1);
        CHECK(r1.pass);
        CHECK(r1.lhs.residue == 255);  // -1 mod 2^8
        const auto r0 = functional_check(0, 4, fits);
        CHECK(r0.pass);
        CHECK(r0.lhs.residue == 1);  // f(-1) = f(0) = 1
    }
    SUBCASE("sign pattern over a window") {
        for (long n = 0; n <= 16; ++n) {
            const auto rep = functional_check(n, 8, fits);
            CHECK(rep.pass);
            CHECK(rep.sign == ((math_mod(n, 4) == 0 || math_mod(n, 4) == 3) ? 1 : -1));
        }
    }
}

TEST_CASE("continuity scan") {
    const auto r1 = continuity_scan(50, 1);
    CHECK(r1.ell == 0);  // f is always odd
    CHECK_FALSE(r1.witness.has_value());

    const auto r2 = continuity_scan(50, 2);
    CHECK(r2.ell == 2);
    REQUIRE(r2.witness.has_value());
    // the witness shows l = 1 fails: same parity, different residues mod 4
    const auto [a, b] = *r2.witness;
    CHECK(math_mod(a, 2) == math_mod(b, 2));
    CHECK(f_mod(a, 2).residue != f_mod(b, 2).residue);

    SUBCASE("l(k) is nondecreasing in k") {
        unsigned prev = 0;
        for (unsigned k = 1; k <= 6; ++k) {
            const auto r = continuity_scan(40, k);
            CHECK(r.ell >= prev);
            prev = r.ell;
        }
    }
}
