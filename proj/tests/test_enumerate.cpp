#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "oracle_bruteforce.hpp"
#include "sphlat/enumerate.hpp"

using namespace sphlat;

TEST_CASE("enumerated points are exactly the sphere, sorted") {
    auto pts = enumerate_sphere(2, 2);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == std::vector<int>{-1, -1});
    CHECK(pts[1] == std::vector<int>{-1, 1});
    CHECK(pts[2] == std::vector<int>{1, -1});
    CHECK(pts[3] == std::vector<int>{1, 1});

    auto p39 = enumerate_sphere(3, 9);
    CHECK(p39.size() == 30);
    CHECK(std::find(p39.begin(), p39.end(), std::vector<int>{-3, 0, 0}) != p39.end());
    CHECK(std::find(p39.begin(), p39.end(), std::vector<int>{2, -2, 1}) != p39.end());

    CHECK(enumerate_sphere(1, 3).empty());
}

TEST_CASE("oracle equivalence against theta counts") {
    for (int d = 1; d <= 5; ++d) {
        ThetaTable t(d, 40);
        for (long lam = 0; lam <= 40; ++lam) {
            auto pts = enumerate_sphere(d, lam);
            CAPTURE(d, lam);
            CHECK(mpz_class(static_cast<unsigned long>(pts.size())) == t.count(d, lam));
            CHECK(std::is_sorted(pts.begin(), pts.end()));
            for (const auto& p : pts) {
                long s = 0;
                for (int v : p) s += static_cast<long>(v) * v;
                REQUIRE(s == lam);
            }
        }
    }
}

TEST_CASE("capacity and range guards") {
    CHECK_THROWS_AS(enumerate_sphere(11, 4), PreconditionError);
    CHECK_THROWS_AS(enumerate_sphere(4, 401), PreconditionError);
    try {
        enumerate_sphere(4, 4, 10);  // r_4(4) = 24 > 10
        FAIL("expected capacity error");
    } catch (const CapacityError& e) {
        CHECK(std::string(e.what()).find("24") != std::string::npos);
    }
}

TEST_CASE("profile histogram totals and named values") {
    SECTION("d=4 lambda=4") {
        auto h = profile_stats(4, 4, {1.0});
        CHECK(h.by_pm1[4] == 16);  // the (+-1,+-1,+-1,+-1) points
        CHECK(h.total() == brute_sphere_count(4, 4));
        // threshold histogram totals match too
        mpz_class sum = 0;
        for (const auto& [j, c] : h.by_large[0]) sum += c;
        CHECK(sum == h.total());
    }
    SECTION("d=3 lambda=1") {
        auto h = profile_stats(3, 1, {1.0});
        CHECK(h.by_pm1[1] == 6);
        CHECK(h.by_pm1.count(0) == 0);
    }
    SECTION("d=6 lambda=6 all-ones vertices") {
        auto h = profile_stats(6, 6, {});
        CHECK(h.by_pm1[6] == 64);
    }
}

TEST_CASE("profile histogram matches direct enumeration") {
    for (int d : {2, 3, 4}) {
        for (long lam : {5L, 9L, 12L}) {
            auto h = profile_stats(d, lam, {1.0, 2.0});
            auto pts = enumerate_sphere(d, lam);
            std::map<int, long> direct_pm1;
            std::map<int, long> direct_large2;
            for (const auto& p : pts) {
                int ones = 0, big = 0;
                for (int v : p) {
                    if (v == 1 || v == -1) ++ones;
                    if (std::abs(v) >= 2) ++big;
                }
                direct_pm1[ones]++;
                direct_large2[big]++;
            }
            CAPTURE(d, lam);
            for (const auto& [k, c] : direct_pm1) CHECK(h.by_pm1[k] == c);
            for (const auto& [j, c] : direct_large2) CHECK(h.by_large[1][j] == c);
            CHECK(h.total() == static_cast<long>(pts.size()));
        }
    }
}

TEST_CASE("orbit counting handles big spheres without expansion") {
    // d=10, lambda=400 has far more points than the enumeration cap
    ThetaTable t(10, 400);
    auto h = profile_stats(10, 400, {});
    CHECK(h.total() == t.count(10, 400));
}

TEST_CASE("lemma-7.3 style fraction is derivable") {
    auto h = profile_stats(6, 6, {});
    mpz_class all = h.total();
    // cumulative counts are monotone in the cutoff and exhaust the sphere
    mpz_class prev = 0;
    for (long cutoff = 0; cutoff <= 6; ++cutoff) {
        mpz_class cur = h.pm1_at_most(cutoff);
        CHECK(cur >= prev);
        prev = cur;
    }
    CHECK(prev == all);
    // the all-+-1 vertices are the ones missing from cutoff lambda - 1
    CHECK(all - h.pm1_at_most(5) == 64);
}
