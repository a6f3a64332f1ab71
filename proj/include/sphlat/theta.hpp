#pragma once

// Representation counts r_j(m) = #{x in Z^j : |x|^2 = m} for all 1 <= j <= d,
// 0 <= m <= mass_max, via iterated convolution of the one-dimensional square
// indicator row r_1 = (1, 2, 0, 0, 2, 0, ...).  All counts are exact.
//
// Rows are held in unsigned 128-bit words while they fit and promoted to GMP
// integers on the first checked-add overflow, so small tables stay compact
// and fast while deep tables (large d) remain exact.

#include <cstdint>
#include <utility>
#include <vector>

#include "sphlat/bigint.hpp"
#include "sphlat/errors.hpp"

namespace sphlat {

namespace detail {

struct ThetaRow {
    bool big = false;
    std::vector<uint128> small;   // used when !big
    std::vector<mpz_class> wide;  // used when big

    std::size_t size() const { return big ? wide.size() : small.size(); }

    mpz_class get(std::size_t m) const {
        return big ? wide[m] : mpz_from_u128(small[m]);
    }

    std::vector<mpz_class> as_wide() const {
        if (big) return wide;
        std::vector<mpz_class> out(small.size());
        for (std::size_t m = 0; m < small.size(); ++m) out[m] = mpz_from_u128(small[m]);
        return out;
    }
};

// out[m] = in[m] + 2 * sum_{k>=1, k^2<=m} in[m-k^2], 128-bit checked.
// Returns false if any addition overflowed.
inline bool convolve_small(const std::vector<uint128>& in, std::vector<uint128>& out) {
    const std::size_t n = in.size();
    out = in;
    for (std::size_t k = 1; k * k < n; ++k) {
        const std::size_t kk = k * k;
        for (std::size_t m = kk; m < n; ++m) {
            uint128 twice;
            if (__builtin_add_overflow(in[m - kk], in[m - kk], &twice)) return false;
            if (__builtin_add_overflow(out[m], twice, &out[m])) return false;
        }
    }
    return true;
}

inline void convolve_wide(const std::vector<mpz_class>& in, std::vector<mpz_class>& out) {
    const std::size_t n = in.size();
    out = in;
    for (std::size_t k = 1; k * k < n; ++k) {
        const std::size_t kk = k * k;
        for (std::size_t m = kk; m < n; ++m)
            mpz_addmul_ui(out[m].get_mpz_t(), in[m - kk].get_mpz_t(), 2);
    }
}

}  // namespace detail

class ThetaTable {
public:
    static constexpr int kDimLimit = 64;
    static constexpr long kMassLimit = 1L << 22;

    ThetaTable(int dim_max, long mass_max) : dim_max_(dim_max), mass_max_(mass_max) {
        if (dim_max < 1 || dim_max > kDimLimit)
            throw SizeLimitError("theta table: dimension must be in [1, 64], got " +
                                 std::to_string(dim_max));
        if (mass_max < 0 || mass_max > kMassLimit)
            throw SizeLimitError("theta table: mass must be in [0, 2^22], got " +
                                 std::to_string(mass_max));
        rows_.resize(dim_max);
        auto& r1 = rows_[0];
        r1.small.assign(mass_max + 1, 0);
        r1.small[0] = 1;
        for (long k = 1; k * k <= mass_max; ++k) r1.small[k * k] = 2;
        for (int j = 2; j <= dim_max; ++j) {
            const auto& prev = rows_[j - 2];
            auto& cur = rows_[j - 1];
            if (!prev.big) {
                if (detail::convolve_small(prev.small, cur.small)) continue;
                cur.small.clear();
                cur.small.shrink_to_fit();
                // overflowed 128 bits: redo this row in GMP
                detail::convolve_wide(prev.as_wide(), cur.wide);
                cur.big = true;
            } else {
                detail::convolve_wide(prev.wide, cur.wide);
                cur.big = true;
            }
        }
    }

    int dim_max() const { return dim_max_; }
    long mass_max() const { return mass_max_; }

    // r_d(lambda), exact
    mpz_class count(int d, long lambda) const {
        check_range(d, lambda);
        return rows_[d - 1].get(lambda);
    }

    // sum_{m<=lambda} r_d(m), exact
    mpz_class ball(int d, long lambda) const {
        check_range(d, lambda);
        const auto& row = rows_[d - 1];
        mpz_class acc = 0;
        if (!row.big) {
            uint128 partial = 0;
            for (long m = 0; m <= lambda; ++m) {
                uint128 next;
                if (__builtin_add_overflow(partial, row.small[m], &next)) {
                    acc += mpz_from_u128(partial);
                    partial = row.small[m];
                } else {
                    partial = next;
                }
            }
            acc += mpz_from_u128(partial);
        } else {
            for (long m = 0; m <= lambda; ++m) acc += row.wide[m];
        }
        return acc;
    }

    bool row_is_wide(int d) const { return rows_[d - 1].big; }

private:
    void check_range(int d, long lambda) const {
        if (d < 1 || d > dim_max_ || lambda < 0 || lambda > mass_max_)
            throw RangeError("theta table lookup (d=" + std::to_string(d) +
                             ", lambda=" + std::to_string(lambda) + ") outside table (" +
                             std::to_string(dim_max_) + ", " + std::to_string(mass_max_) + ")");
    }

    int dim_max_;
    long mass_max_;
    std::vector<detail::ThetaRow> rows_;
};

inline ThetaTable build_theta_table(int d, long mass_max) { return ThetaTable(d, mass_max); }

inline BigCount sphere_count(const ThetaTable& table, int d, long lambda) {
    return BigCount(table.count(d, lambda));
}

inline BigCount ball_count(const ThetaTable& table, int d, long lambda) {
    return BigCount(table.ball(d, lambda));
}

// ---------------------------------------------------------------------------
// Ball/sphere sandwich:
//   |B_t(d-4) cap Z^{d-4}| <= |S_t cap Z^d| <= |B_t(d) cap Z^d|
//                          <= (2t+1)^4 |S_t cap Z^d|,   t = sqrt(lambda).
// The right factor is irrational; with A = 16 lambda^2 + 24 lambda + 1 and
// B = 32 lambda + 8 we have (2 sqrt(lambda) + 1)^4 = A + B sqrt(lambda), so
// "ball <= (A + B sqrt(lambda)) s" is decided exactly by isolating the
// sqrt(lambda) term and squaring once.
// ---------------------------------------------------------------------------
struct SandwichReport {
    mpz_class lhs;   // |B_t(d-4)|
    mpz_class mid;   // |S_t(d)|
    mpz_class rhs;   // |B_t(d)|
    bool ok = false;
};

inline SandwichReport check_ball_sphere_bounds(const ThetaTable& table, int d, long lambda) {
    if (d < 5)
        throw PreconditionError("ball/sphere sandwich requires d >= 5, got " + std::to_string(d));
    SandwichReport rep;
    rep.lhs = table.ball(d - 4, lambda);
    rep.mid = table.count(d, lambda);
    rep.rhs = table.ball(d, lambda);

    bool chain = rep.lhs <= rep.mid && rep.mid <= rep.rhs;
    // rhs <= (A + B*sqrt(lambda)) * mid ?
    mpz_class lam(lambda);
    mpz_class a = 16 * lam * lam + 24 * lam + 1;
    mpz_class b = 32 * lam + 8;
    mpz_class excess = rep.rhs - a * rep.mid;
    bool upper = excess <= 0;
    if (!upper) {
        mpz_class right = b * rep.mid;
        upper = excess * excess <= right * right * lam;
    }
    rep.ok = chain && upper;
    return rep;
}

// r_d(lambda) == sum_l r_r(l) * r_{d-r}(lambda - l), exact.  The table rows
// are built by repeated r_1 convolution, so splitting at r is an independent
// route to the same number.
inline bool check_slice_identity(const ThetaTable& table, int d, int r, long lambda) {
    if (r < 1 || r >= d)
        throw PreconditionError("slice identity requires 1 <= r < d");
    mpz_class acc = 0;
    for (long l = 0; l <= lambda; ++l) acc += table.count(r, l) * table.count(d - r, lambda - l);
    return acc == table.count(d, lambda);
}

}  // namespace sphlat
