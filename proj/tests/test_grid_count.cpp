#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dimers/errors.hpp"
#include "dimers/grid_count.hpp"
#include "oracles.hpp"

using namespace dimers;

TEST_CASE("known small boards") {
    CHECK(count_tilings({2, 2}) == 2);
    CHECK(count_tilings({3, 3}) == 0);
    CHECK(count_tilings({4, 4}) == 36);
    CHECK(count_tilings({8, 8}) == 12988816);
    CHECK(count_tilings({1, 2}) == 1);
    CHECK(count_tilings({2, 3}) == 3);
    CHECK(count_tilings({1, 3}) == 0);
    CHECK(count_tilings({2, 10}) == 89);
}

TEST_CASE("empty boards count the empty tiling") {
    CHECK(count_tilings({0, 0}) == 1);
    CHECK(count_tilings({0, 7}) == 1);
    CHECK(count_tilings({5, 0}) == 1);
}

TEST_CASE("agrees with exhaustive enumeration on small boards") {
    for (int r = 1; r <= 5; ++r)
        for (int c = r; c <= 5; ++c)
            CHECK(count_tilings({r, c}) == oracle::naive_count(r, c));
    CHECK(count_tilings({6, 6}) == oracle::naive_count(6, 6));  // 6728
}

TEST_CASE("agrees with the column transfer matrix for min side <= 12") {
    for (int r = 1; r <= 12; ++r)
        for (int c = r; c <= 12; ++c) {
            CAPTURE(r);
            CAPTURE(c);
            CHECK(count_tilings({r, c}) == oracle::transfer_count(r, c));
        }
    // elongated boards, frontier much shorter than the long side
    CHECK(count_tilings({5, 30}) == oracle::transfer_count(5, 30));
    CHECK(count_tilings({12, 21}) == oracle::transfer_count(12, 21));
}

TEST_CASE("symmetric in rows and columns") {
    for (int r = 1; r <= 7; ++r)
        for (int c = 1; c <= 10; ++c) CHECK(count_tilings({r, c}) == count_tilings({c, r}));
}

TEST_CASE("odd area gives zero, even rectangles with an even side tile") {
    for (int r = 2; r <= 10; ++r)
        for (int c = 2; c <= 10; ++c) {
            if ((r * c) % 2 != 0)
                CHECK(count_tilings({r, c}) == 0);
            else
                CHECK(count_tilings({r, c}) >= 1);
        }
}

TEST_CASE("square count factorization") {
    SUBCASE("frozen values") {
        auto f0 = factor_square_count(0);
        CHECK(f0.count == 1);
        CHECK(f0.two_exponent == 0);
        CHECK(f0.odd_root == 1);

        auto f3 = factor_square_count(3);
        CHECK(f3.count == 6728);
        CHECK(f3.two_exponent == 3);
        CHECK(f3.odd_root == 29);

        auto f4 = factor_square_count(4);
        CHECK(f4.count == 12988816);
        CHECK(f4.two_exponent == 4);
        CHECK(f4.odd_root == 901);
    }
    SUBCASE("count = 2^n * odd_root^2 with odd root, exactly") {
        for (long n = 1; n <= 6; ++n) {
            auto f = factor_square_count(n);
            CHECK(f.two_exponent == n);
            CHECK(mpz_odd_p(f.odd_root.get_mpz_t()));
            CHECK(f.odd_root > 0);
            CHECK(pow2(static_cast<unsigned long>(n)) * f.odd_root * f.odd_root == f.count);
        }
    }
}

TEST_CASE("budget errors") {
    CHECK_THROWS_AS(count_tilings({26, 26}), BudgetExceeded);
    CHECK_THROWS_AS(count_tilings({25, 26}), BudgetExceeded);
    CHECK_THROWS_AS(count_tilings({5, 6}, CountBudget{4}), BudgetExceeded);
    CHECK(count_tilings({4, 40}, CountBudget{4}) > 0);
    CHECK_THROWS_AS(factor_square_count(13), BudgetExceeded);
    CHECK_THROWS_AS(count_tilings({-1, 4}), std::invalid_argument);
}
