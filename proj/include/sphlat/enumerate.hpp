#pragma once

// Brute-force lattice sphere enumeration.  This is the oracle everything
// else is checked against, so it stays deliberately simple: depth-first
// search over coordinates with remaining-mass pruning (a subtree dies as
// soon as the theta table says no completion exists).
//
// Profile statistics never expand orbits: solutions are generated as
// nonincreasing |coordinate| profiles and weighted by the exact orbit size
// d!/(prod multiplicities!) * 2^(#nonzero), which keeps spheres with
// billions of points countable.

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "sphlat/errors.hpp"
#include "sphlat/theta.hpp"

namespace sphlat {

inline long isqrt_floor(long n) {
    if (n < 0) return -1;
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square(long n) {
    if (n < 0) return false;
    long r = isqrt_floor(n);
    return r * r == n;
}

constexpr int kEnumDimLimit = 10;
constexpr long kEnumMassLimit = 400;
constexpr std::int64_t kEnumDefaultCap = 10'000'000;

// All x in Z^d with |x|^2 = lambda, lexicographically sorted.
inline std::vector<std::vector<int>> enumerate_sphere(int d, long lambda,
                                                      std::int64_t cap = kEnumDefaultCap) {
    if (d < 1 || d > kEnumDimLimit || lambda < 0 || lambda > kEnumMassLimit)
        throw PreconditionError("enumerate_sphere: need 1 <= d <= 10, 0 <= lambda <= 400");
    ThetaTable table(d, lambda);
    mpz_class total = table.count(d, lambda);
    if (total > cap)
        throw CapacityError("enumerate_sphere: sphere has " + total.get_str() +
                            " points, cap is " + std::to_string(cap));

    std::vector<std::vector<int>> points;
    points.reserve(total.get_ui());
    std::vector<int> x(d);
    // depth-first over x[0], x[1], ... in ascending coordinate order
    auto rec = [&](auto&& self, int i, long rem) -> void {
        if (i == d - 1) {
            if (rem == 0) {
                x[i] = 0;
                points.push_back(x);
            } else if (is_square(rem)) {
                long r = isqrt_floor(rem);
                x[i] = -static_cast<int>(r);
                points.push_back(x);
                x[i] = static_cast<int>(r);
                points.push_back(x);
            }
            return;
        }
        long r = isqrt_floor(rem);
        for (long v = -r; v <= r; ++v) {
            long rest = rem - v * v;
            if (table.count(d - i - 1, rest) == 0) continue;
            x[i] = static_cast<int>(v);
            self(self, i + 1, rest);
        }
    };
    rec(rec, 0, lambda);
    return points;
}

// Nonincreasing nonnegative profiles (a_1 >= ... >= a_d >= 0, sum a_i^2 =
// lambda); fn receives each profile once.
template <typename Fn>
void for_each_profile(int d, long lambda, const Fn& fn) {
    std::vector<long> a(d);
    auto rec = [&](auto&& self, int i, long rem, long hi) -> void {
        if (i == d) {
            if (rem == 0) fn(a);
            return;
        }
        long top = std::min(hi, isqrt_floor(rem));
        // remaining d-i slots must be able to carry rem: rem <= (d-i)*top^2
        for (long v = top; v >= 0; --v) {
            if (static_cast<long>(d - i) * v * v < rem) break;
            a[i] = v;
            self(self, i + 1, rem - v * v, v);
        }
    };
    rec(rec, 0, lambda, isqrt_floor(lambda));
}

inline mpz_class orbit_size(const std::vector<long>& profile) {
    mpz_class orbit;
    mpz_fac_ui(orbit.get_mpz_t(), profile.size());
    int run = 1;
    int nonzero = 0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (profile[i] != 0) ++nonzero;
        if (i + 1 < profile.size() && profile[i + 1] == profile[i]) {
            ++run;
        } else {
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), run);
            mpz_divexact(orbit.get_mpz_t(), orbit.get_mpz_t(), f.get_mpz_t());
            run = 1;
        }
    }
    return orbit << nonzero;
}

struct ProfileHistogram {
    int d = 0;
    long lambda = 0;
    std::vector<double> thresholds;
    // k -> #{x : |{i : x_i = +-1}| = k}
    std::map<int, mpz_class> by_pm1;
    // threshold index -> (j -> #{x : |{i : |x_i| >= theta}| = j})
    std::vector<std::map<int, mpz_class>> by_large;

    mpz_class total() const {
        mpz_class t = 0;
        for (const auto& [k, c] : by_pm1) t += c;
        return t;
    }

    // #{x : |{i : |x_i| >= thresholds[t]}| <= cutoff}
    mpz_class large_at_most(std::size_t t, int cutoff) const {
        mpz_class acc = 0;
        for (const auto& [j, c] : by_large[t])
            if (j <= cutoff) acc += c;
        return acc;
    }

    // #{x : |{i : x_i = +-1}| <= cutoff}, the set of Lemma-7.3 type
    mpz_class pm1_at_most(long cutoff) const {
        mpz_class acc = 0;
        for (const auto& [k, c] : by_pm1)
            if (k <= cutoff) acc += c;
        return acc;
    }
};

inline ProfileHistogram profile_stats(int d, long lambda, const std::vector<double>& thresholds) {
    if (d < 1 || d > kEnumDimLimit || lambda < 0 || lambda > kEnumMassLimit)
        throw PreconditionError("profile_stats: need 1 <= d <= 10, 0 <= lambda <= 400");
    ProfileHistogram h;
    h.d = d;
    h.lambda = lambda;
    h.thresholds = thresholds;
    h.by_large.resize(thresholds.size());
    for_each_profile(d, lambda, [&](const std::vector<long>& a) {
        mpz_class orbit = orbit_size(a);
        int ones = 0;
        for (long v : a)
            if (v == 1) ++ones;
        h.by_pm1[ones] += orbit;
        for (std::size_t t = 0; t < thresholds.size(); ++t) {
            int big = 0;
            for (long v : a)
                if (static_cast<double>(v) >= thresholds[t]) ++big;
            h.by_large[t][big] += orbit;
        }
    });
    return h;
}

}  // namespace sphlat
