#pragma once

// Krawtchouk polynomials in exact rational arithmetic,
//
//   K_k^{(n)}(x) = binom(n,k)^{-1} sum_j (-1)^j binom(x,j) binom(n-x,k-j),
//
// for integer 0 <= k, x <= n.  Everything downstream (symmetry checks, the
// uniform-bound scan feeding the small-scale multiplier estimates) consumes
// the exact value; floats appear only when taking logarithms.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "sphlat/bigint.hpp"
#include "sphlat/errors.hpp"
#include "sphlat/parallel.hpp"

namespace sphlat {

constexpr int kKrawtchoukLimit = 512;

struct KrawtchoukValue {
    int n = 0, k = 0, x = 0;
    mpq_class value;
};

inline mpz_class binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline KrawtchoukValue krawtchouk(int n, int k, int x) {
    if (n < 0 || n > kKrawtchoukLimit || k < 0 || k > n || x < 0 || x > n)
        throw PreconditionError("krawtchouk: need 0 <= k, x <= n <= 512");
    mpz_class acc = 0;
    for (int j = 0; j <= k; ++j) {
        mpz_class term = binom(x, j) * binom(n - x, k - j);
        if (j & 1)
            acc -= term;
        else
            acc += term;
    }
    KrawtchoukValue out;
    out.n = n;
    out.k = k;
    out.x = x;
    out.value = mpq_class(acc, binom(n, k));
    out.value.canonicalize();
    return out;
}

// log |p/q| through the exact integers
inline double mpq_log_abs(const mpq_class& v) {
    return mpz_log(mpz_class(abs(v.get_num()))) - mpz_log(v.get_den());
}

// Scan of the uniform bound |K_k^{(n)}(x)| <= e^{-c k x / n}: returns the
// smallest admissible c over 1 <= x, k <= n/2, n <= n_max, i.e.
// min -(n/(kx)) ln |K|, skipping (and counting) exact zeros where the bound
// holds vacuously.
struct KrawtchoukScan {
    double c_min = std::numeric_limits<double>::infinity();
    std::int64_t zeros_skipped = 0;
    std::int64_t cases = 0;
    int argmin_n = 0, argmin_k = 0, argmin_x = 0;
};

inline KrawtchoukScan krawtchouk_bound_scan(int n_max) {
    if (n_max < 2 || n_max > 128)
        throw PreconditionError("krawtchouk bound scan: need 2 <= n_max <= 128");
    struct Slot {
        double c = std::numeric_limits<double>::infinity();
        std::int64_t zeros = 0;
        std::int64_t cases = 0;
        int k = 0, x = 0;
    };
    std::vector<Slot> slots(n_max + 1);
    parallel_for(2, static_cast<std::size_t>(n_max) + 1, [&](std::size_t n) {
        Slot& s = slots[n];
        for (int k = 1; 2 * k <= static_cast<int>(n); ++k) {
            for (int x = 1; 2 * x <= static_cast<int>(n); ++x) {
                auto v = krawtchouk(static_cast<int>(n), k, x);
                ++s.cases;
                if (v.value == 0) {
                    ++s.zeros;
                    continue;
                }
                double c = -(static_cast<double>(n) / (static_cast<double>(k) * x)) *
                           mpq_log_abs(v.value);
                if (c < s.c) {
                    s.c = c;
                    s.k = k;
                    s.x = x;
                }
            }
        }
    }, 1);
    KrawtchoukScan out;
    for (int n = 2; n <= n_max; ++n) {
        out.zeros_skipped += slots[n].zeros;
        out.cases += slots[n].cases;
        if (slots[n].c < out.c_min) {
            out.c_min = slots[n].c;
            out.argmin_n = n;
            out.argmin_k = slots[n].k;
            out.argmin_x = slots[n].x;
        }
    }
    return out;
}

}  // namespace sphlat
