#pragma once

#include <cmath>
#include <gmpxx.h>
#include <limits>
#include <stdexcept>
#include <string>

namespace sphlat {

using uint128 = unsigned __int128;

inline mpz_class mpz_from_u128(uint128 v) {
    mpz_class hi(static_cast<unsigned long>(v >> 64));
    mpz_class lo(static_cast<unsigned long>(v & 0xffffffffffffffffULL));
    return (hi << 64) + lo;
}

// Natural logarithm of a positive mpz, accurate to ~1e-15 relative:
// ln(m * 2^e) with m the 53-bit leading mantissa.
inline double mpz_log(const mpz_class& v) {
    if (sgn(v) < 0) throw std::domain_error("mpz_log: negative argument");
    if (sgn(v) == 0) return -std::numeric_limits<double>::infinity();
    signed long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

// Exact count plus its floating-point log, for ratio arithmetic where the
// exact value can exceed any fixed-width type.
struct BigCount {
    mpz_class value;
    double log_value;

    BigCount() : value(0), log_value(-std::numeric_limits<double>::infinity()) {}
    explicit BigCount(mpz_class v) : value(std::move(v)), log_value(mpz_log(value)) {}

    bool is_zero() const { return sgn(value) == 0; }
    double to_double() const { return value.get_d(); }
    std::string str() const { return value.get_str(); }
};

}  // namespace sphlat
