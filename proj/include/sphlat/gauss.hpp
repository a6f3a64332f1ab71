#pragma once

// Normalized quadratic Gauss sums
//
//   g(p/q; m) = q^{-1} sum_{n=1..q} e(( n^2 p + n m )/q),     e(x) = e^{2 pi i x},
//   G(p/q; x) = prod_j g(p/q; x_j)   for x in Z^d,
//
// evaluated by direct summation: phases are reduced to integer residues
// mod q and looked up in a unit-root table, and the accumulation is
// compensated.  No reciprocity shortcut is used here; a closed form serves
// only as a test oracle.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "sphlat/errors.hpp"

namespace sphlat {

using cdouble = std::complex<double>;

// Neumaier-compensated accumulator.
struct Kahan {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double get() const { return sum + comp; }
};

// Unit roots e(j/q), j = 0..q-1, shared across the p and m loops for one q.
struct RootTable {
    long q = 0;
    std::vector<double> re, im;

    explicit RootTable(long q_) : q(q_), re(q_), im(q_) {
        for (long j = 0; j < q; ++j) {
            double a = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(q);
            re[j] = std::cos(a);
            im[j] = std::sin(a);
        }
    }

    // g(p/q; m) with all phase arithmetic done on residues
    cdouble normalized_sum(long p, long m) const {
        m %= q;
        if (m < 0) m += q;
        Kahan sre, sim;
        long quad = 0;  // n^2 p mod q, advanced incrementally
        long lin = 0;   // n m mod q
        long dq = (2 * p) % q;
        long step = p % q;  // increment of quad goes (2n+1)p
        for (long n = 1; n <= q; ++n) {
            step = (step >= q) ? step - q : step;
            quad += step;
            quad = (quad >= q) ? quad - q : quad;
            lin += m;
            lin = (lin >= q) ? lin - q : lin;
            long idx = quad + lin;
            idx = (idx >= q) ? idx - q : idx;
            sre.add(re[idx]);
            sim.add(im[idx]);
            step += dq;
        }
        double inv = 1.0 / static_cast<double>(q);
        return {sre.get() * inv, sim.get() * inv};
    }
};

inline void check_coprime(long p, long q) {
    if (q < 1 || p < 1 || p > q || std::gcd(p, q) != 1)
        throw PreconditionError("gauss sum requires 1 <= p <= q with (p,q)=1");
}

inline cdouble gauss_sum_1d(long p, long q, long m) {
    check_coprime(p, q);
    return RootTable(q).normalized_sum(p, m);
}

inline cdouble gauss_sum(long p, long q, const std::vector<long>& x) {
    check_coprime(p, q);
    RootTable roots(q);
    cdouble prod{1.0, 0.0};
    for (long xi : x) prod *= roots.normalized_sum(p, xi);
    return prod;
}

// | sum_{m=1..q} |g(p/q;m)|^2 ^ d  - 1 |.  The d-dimensional Parseval sum
// factorizes through the product structure, so only the 1-D sum is needed.
inline double gauss_parseval_deviation(long p, long q, int d) {
    check_coprime(p, q);
    RootTable roots(q);
    Kahan acc;
    for (long m = 1; m <= q; ++m) acc.add(std::norm(roots.normalized_sum(p, m)));
    return std::abs(std::pow(acc.get(), d) - 1.0);
}

}  // namespace sphlat
