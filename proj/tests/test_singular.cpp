#include <catch2/catch_amalgamated.hpp>

#include "sphlat/singular.hpp"
#include "sphlat/theta.hpp"

using namespace sphlat;

TEST_CASE("tail bound dominates the actual tail of the q-sum") {
    // sum_{q > P} q (2/q)^{d/2} computed far out numerically
    for (int d : {6, 10, 16}) {
        for (long p : {3L, 10L, 40L}) {
            double actual = 0;
            for (long q = p + 1; q <= 200000; ++q)
                actual += std::exp((0.5 * d) * std::log(2.0 / q) + std::log((double)q));
            CAPTURE(d, p);
            CHECK(singular_tail_bound(d, p) >= actual);
        }
    }
}

TEST_CASE("truncation level selection is minimal") {
    long p = choose_truncation_level(16, 1e-10);
    CHECK(singular_tail_bound(16, p) <= 1e-10);
    CHECK(singular_tail_bound(16, p - 1) > 1e-10);
}

TEST_CASE("theorem estimate 1/2 <= S_d(lambda) <= 3/2 for d >= 16") {
    auto v = singular_series(16, 1, 1e-10);
    CHECK(v.value >= 0.5);
    CHECK(v.value <= 1.5);
    CHECK(v.tail_bound <= 1e-10);

    auto w = singular_series(24, 7, 1e-10);
    CHECK(std::abs(w.value - 1.0) <= 0.5);
}

TEST_CASE("q=2 contributes nothing") {
    // S_d(lambda) = 1 + sum_{q>=3}: levels 1 and 2 agree exactly
    SingularSeriesEngine e1(16, 1), e2(16, 2);
    for (long lam : {1L, 2L, 9L, 100L}) {
        double a = e1.evaluate(lam).value;
        double b = e2.evaluate(lam).value;
        CHECK(a == b);
        CHECK(a == 1.0);  // q=1 term alone
    }
}

TEST_CASE("value is independent of the truncation level beyond tolerance") {
    for (int d : {8, 16}) {
        SingularSeriesEngine big(d, 64);
        for (long small_p : {6L, 12L, 24L}) {
            SingularSeriesEngine small(d, small_p);
            for (long lam : {1L, 5L, 12L}) {
                double gap = std::abs(big.evaluate(lam).value - small.evaluate(lam).value);
                CAPTURE(d, small_p, lam);
                CHECK(gap <= singular_tail_bound(d, small_p));
            }
        }
    }
}

TEST_CASE("bit-stable across thread counts") {
    SingularSeriesEngine e(16, 50);
    set_threads(1);
    double a = e.evaluate(17).value;
    set_threads(2);
    double b = e.evaluate(17).value;
    set_threads(0);
    CHECK(a == b);
}

TEST_CASE("waring main term ratio at d=16") {
    const int d = 16;
    const long lam = 65536;
    ThetaTable t(d, lam);
    BigCount exact = sphere_count(t, d, lam);
    auto s = singular_series(d, lam, 1e-10);
    double ratio = std::exp(exact.log_value - main_term_log(d, lam, s));
    CAPTURE(ratio);
    CHECK(std::abs(ratio - 1.0) < 0.25);
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(singular_series(4, 1, 1e-8), PreconditionError);
    CHECK_THROWS_AS(singular_series(16, 1, 0.0), PreconditionError);
    auto s = singular_series(16, 3, 1e-8);
    CHECK_THROWS_AS(main_term_log(16, 0, s), PreconditionError);
    SingularSeriesValue bad = s;
    bad.value = -0.1;
    CHECK_THROWS_AS(main_term_log(16, 3, bad), PreconditionError);
}
