#include <catch2/catch_amalgamated.hpp>

#include "sphlat/farey.hpp"

using namespace sphlat;

static long totient_sum(long n) {
    long sum = 0;
    for (long q = 1; q <= n; ++q) {
        long phi = 0;
        for (long p = 1; p <= q; ++p)
            if (std::gcd(p, q) == 1) ++phi;
        sum += phi;
    }
    return sum;
}

TEST_CASE("farey sequence members and order") {
    auto f1 = farey_sequence(1);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0] == ReducedFraction(1, 1));

    auto f3 = farey_sequence(3);
    REQUIRE(f3.size() == 4);
    CHECK(f3[0] == ReducedFraction(1, 3));
    CHECK(f3[1] == ReducedFraction(1, 2));
    CHECK(f3[2] == ReducedFraction(2, 3));
    CHECK(f3[3] == ReducedFraction(1, 1));

    CHECK(farey_sequence(5).size() == 10);
}

TEST_CASE("farey sequence length equals totient sum") {
    for (long n : {2L, 7L, 20L, 61L})
        CHECK(static_cast<long>(farey_sequence(n).size()) == totient_sum(n));
}

TEST_CASE("sequence is sorted, reduced and complete") {
    auto seq = farey_sequence(30);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        CHECK(seq[i].value() < seq[i + 1].value());
    for (const auto& f : seq) {
        CHECK(f.q <= 30);
        CHECK(std::gcd(f.p, f.q) == 1);
    }
}

TEST_CASE("arcs tile [0,1) with exact rational chaining") {
    for (long n : {1L, 2L, 3L, 17L, 120L}) {
        auto arcs = farey_arcs(n);
        CAPTURE(n);
        mpq_class total = 0;
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            CHECK(arcs[i].lo < arcs[i].hi);
            total += arcs[i].length();
            if (i + 1 < arcs.size()) CHECK(arcs[i].hi == arcs[i + 1].lo);
        }
        CHECK(total == 1);
        // wrap: last arc ends where the first begins, one turn later
        CHECK(arcs.back().hi - 1 == arcs.front().lo);
    }
}

TEST_CASE("named arc endpoints") {
    auto a2 = farey_arcs(2);
    REQUIRE(a2.size() == 2);
    CHECK(a2[0].center == ReducedFraction(1, 2));
    CHECK(a2[0].lo == mpq_class(1, 3));
    CHECK(a2[0].hi == mpq_class(2, 3));
    CHECK(a2[1].lo == mpq_class(2, 3));
    CHECK(a2[1].hi == mpq_class(4, 3));

    // N=1: one arc around 1/1 covering a full turn
    auto a1 = farey_arcs(1);
    REQUIRE(a1.size() == 1);
    CHECK(a1[0].lo == mpq_class(1, 2));
    CHECK(a1[0].hi == mpq_class(3, 2));
    CHECK(a1[0].length() == 1);
}

TEST_CASE("each arc sits between the half-width and full-width neighborhoods") {
    for (long n : {1L, 2L, 3L, 10L, 50L}) {
        auto arcs = farey_arcs(n);
        for (const auto& arc : arcs) {
            mpq_class center(arc.center.p, arc.center.q);
            mpq_class half(1, 2 * n * arc.center.q);
            mpq_class full(1, n * arc.center.q);
            CAPTURE(n, arc.center.p, arc.center.q);
            CHECK(center - arc.lo >= half);
            CHECK(center - arc.lo <= full);
            CHECK(arc.hi - center >= half);
            CHECK(arc.hi - center <= full);
        }
    }
}

TEST_CASE("level guard") {
    CHECK_THROWS_AS(farey_sequence(0), PreconditionError);
    CHECK_THROWS_AS(farey_sequence(kFareyLimit + 1), PreconditionError);
    CHECK_THROWS_AS(ReducedFraction(2, 4), PreconditionError);
    CHECK_THROWS_AS(ReducedFraction(3, 2), PreconditionError);
}
