#include <catch2/catch_amalgamated.hpp>

#include "oracle_bruteforce.hpp"
#include "sphlat/theta.hpp"

using namespace sphlat;

TEST_CASE("r_1 row matches the square indicator") {
    ThetaTable t(1, 4);
    CHECK(t.count(1, 0) == 1);
    CHECK(t.count(1, 1) == 2);
    CHECK(t.count(1, 2) == 0);
    CHECK(t.count(1, 3) == 0);
    CHECK(t.count(1, 4) == 2);
}

TEST_CASE("small counts frozen from brute-force enumeration") {
    // values computed with brute_sphere_count / brute_ball_count
    ThetaTable t(5, 5);
    CHECK(t.count(4, 2) == 24);
    CHECK(t.count(5, 4) == 90);
    CHECK(t.count(5, 5) == 112);
    CHECK(t.ball(4, 4) == 89);
    CHECK(t.ball(3, 0) == 1);
    CHECK(t.ball(3, 1) == 7);

    ThetaTable t7(7, 1);
    CHECK(t7.count(7, 0) == 1);
    CHECK(t7.count(7, 1) == 14);
}

TEST_CASE("table agrees with the box oracle") {
    const long lam_max = 20;
    for (int d = 1; d <= 4; ++d) {
        ThetaTable t(d, lam_max);
        for (long lam = 0; lam <= lam_max; ++lam) {
            CAPTURE(d, lam);
            CHECK(t.count(d, lam) == brute_sphere_count(d, lam));
        }
        CHECK(t.ball(d, lam_max) == brute_ball_count(d, lam_max));
    }
}

TEST_CASE("parity and Lagrange positivity across the table") {
    ThetaTable t(8, 200);
    for (int d = 1; d <= 8; ++d) {
        for (long lam = 1; lam <= 200; ++lam) {
            mpz_class c = t.count(d, lam);
            CHECK(c % 2 == 0);
            if (d >= 4) CHECK(c > 0);
        }
    }
}

TEST_CASE("slice identity holds for distinct split points") {
    ThetaTable t(10, 200);
    CHECK(check_slice_identity(t, 2, 1, 5));
    CHECK(t.count(2, 5) == 8);
    CHECK(check_slice_identity(t, 6, 3, 12));
    CHECK(check_slice_identity(t, 5, 4, 0));
    for (int d = 2; d <= 10; ++d)
        for (int r = 1; r < d; ++r)
            for (long lam : {1L, 17L, 100L, 200L}) {
                CAPTURE(d, r, lam);
                CHECK(check_slice_identity(t, d, r, lam));
            }
}

TEST_CASE("ball/sphere sandwich") {
    ThetaTable t(10, 200);
    SECTION("named cases") {
        auto rep = check_ball_sphere_bounds(t, 5, 1);
        CHECK(rep.ok);
        CHECK(rep.lhs == 3);  // {-1, 0, 1} in Z^1
        CHECK(rep.mid == 10);
        CHECK(rep.rhs == 11);
        CHECK(check_ball_sphere_bounds(t, 6, 9).ok);
    }
    SECTION("full small-scale range") {
        for (int d = 5; d <= 10; ++d)
            for (long lam = 1; lam <= 200; ++lam) {
                CAPTURE(d, lam);
                CHECK(check_ball_sphere_bounds(t, d, lam).ok);
            }
    }
    SECTION("d=8 lambda=64") {
        ThetaTable t8(8, 64);
        CHECK(check_ball_sphere_bounds(t8, 8, 64).ok);
    }
    CHECK_THROWS_AS(check_ball_sphere_bounds(t, 4, 4), PreconditionError);
}

TEST_CASE("promotion to GMP rows is exact") {
    // d=64 rows overflow 128 bits quickly; cross-check the promoted rows
    // against the slice identity through a 128-bit row pair.
    ThetaTable t(64, 96);
    CHECK(t.row_is_wide(64));
    CHECK_FALSE(t.row_is_wide(8));
    for (long lam : {1L, 7L, 40L, 96L}) {
        CAPTURE(lam);
        CHECK(check_slice_identity(t, 64, 32, lam));
        CHECK(check_slice_identity(t, 64, 17, lam));
    }
    // parity survives promotion
    for (long lam = 1; lam <= 96; ++lam) CHECK(t.count(64, lam) % 2 == 0);
}

TEST_CASE("asymptotic growth trend at d=8") {
    // r_d(4 lambda)/r_d(lambda) tracks 4^{d/2-1} within a factor 4 once
    // lambda >= 10 d^3.
    const int d = 8;
    ThetaTable t(d, 4 * 8192);
    const double target = std::pow(4.0, d / 2.0 - 1.0);
    for (long lam : {5120L, 6000L, 7000L, 8192L}) {
        BigCount num = sphere_count(t, d, 4 * lam);
        BigCount den = sphere_count(t, d, lam);
        double ratio = std::exp(num.log_value - den.log_value);
        CAPTURE(lam, ratio);
        CHECK(ratio < 4.0 * target);
        CHECK(ratio > target / 4.0);
    }
}

TEST_CASE("size guards") {
    CHECK_THROWS_AS(ThetaTable(0, 4), SizeLimitError);
    CHECK_THROWS_AS(ThetaTable(65, 4), SizeLimitError);
    CHECK_THROWS_AS(ThetaTable(4, (1L << 22) + 1), SizeLimitError);
    ThetaTable t(3, 10);
    CHECK_THROWS_AS(t.count(4, 1), RangeError);
    CHECK_THROWS_AS(t.count(3, 11), RangeError);
}

TEST_CASE("BigCount log agrees with exact value") {
    ThetaTable t(16, 4096);
    BigCount c = sphere_count(t, 16, 4096);
    // compare against GMP's own double conversion (value fits in range)
    double expect = std::log(mpz_get_d(c.value.get_mpz_t()));
    CHECK(std::abs(c.log_value - expect) <= 1e-12 * std::abs(expect));
    CHECK(BigCount(mpz_class(0)).log_value == -std::numeric_limits<double>::infinity());
}
