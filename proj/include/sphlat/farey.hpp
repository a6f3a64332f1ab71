#pragma once

// Farey sequence H_N = {p/q : 1 <= p <= q <= N, (p,q)=1} and its mediant
// dissection of [0,1).  0/1 is identified with 1/1, whose arc wraps around;
// it is represented with hi > 1 so every arc is a single half-open interval
// [lo, hi) and endpoints chain exactly (mod 1).

#include <gmpxx.h>
#include <numeric>
#include <vector>

#include "sphlat/errors.hpp"

namespace sphlat {

struct ReducedFraction {
    long p = 1;
    long q = 1;

    ReducedFraction() = default;
    ReducedFraction(long p_, long q_) : p(p_), q(q_) {
        if (q < 1 || p < 1 || p > q || std::gcd(p, q) != 1)
            throw PreconditionError("fraction must satisfy 1 <= p <= q, (p,q)=1");
    }
    mpq_class value() const { return mpq_class(p, q); }
    bool operator==(const ReducedFraction&) const = default;
};

constexpr long kFareyLimit = 100000;

inline void check_farey_level(long n) {
    if (n < 1 || n > kFareyLimit)
        throw PreconditionError("farey level must be in [1, 1e5]");
}

// Ascending, from 1/N (or the smallest member) to 1/1.  Uses the standard
// neighbor recurrence on the classic Farey sequence and drops 0/1.
inline std::vector<ReducedFraction> farey_sequence(long n) {
    check_farey_level(n);
    std::vector<ReducedFraction> seq;
    long a = 0, b = 1, c = 1, d = n;
    while (c <= n) {
        long k = (n + b) / d;
        long a2 = c, b2 = d;
        c = k * c - a;
        d = k * d - b;
        a = a2;
        b = b2;
        seq.emplace_back(a, b);
    }
    return seq;
}

struct FareyArc {
    ReducedFraction center;
    mpq_class lo;
    mpq_class hi;  // hi > 1 exactly for the wrap-around arc of 1/1

    mpq_class length() const { return hi - lo; }
};

inline mpq_class mediant(long p1, long q1, long p2, long q2) {
    return mpq_class(p1 + p2, q1 + q2);
}

// Mediant arcs, one per member of H_N, tiling [0,1).
inline std::vector<FareyArc> farey_arcs(long n) {
    auto seq = farey_sequence(n);
    std::vector<FareyArc> arcs;
    arcs.reserve(seq.size());
    const std::size_t m = seq.size();
    for (std::size_t i = 0; i < m; ++i) {
        // cyclic neighbors; the left neighbor of the first member is
        // 1/1 - 1 = 0/1 and the right neighbor of 1/1 is first + 1
        long lp, lq, rp, rq;
        if (i == 0) {
            lp = 0;
            lq = 1;
        } else {
            lp = seq[i - 1].p;
            lq = seq[i - 1].q;
        }
        if (i + 1 < m) {
            rp = seq[i + 1].p;
            rq = seq[i + 1].q;
        } else {
            rp = seq[0].p + seq[0].q;  // first + 1
            rq = seq[0].q;
        }
        FareyArc arc;
        arc.center = seq[i];
        arc.lo = mediant(lp, lq, seq[i].p, seq[i].q);
        arc.hi = mediant(seq[i].p, seq[i].q, rp, rq);
        arcs.push_back(std::move(arc));
    }
    return arcs;
}

}  // namespace sphlat
