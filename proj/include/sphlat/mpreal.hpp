#pragma once

// Thin RAII wrapper over MPFR, just enough surface for the quadrature code
// to be written once and instantiated with either double or MpReal.

#include <mpfr.h>

#include <cmath>
#include <string>
#include <utility>

namespace sphlat {

class MpReal {
public:
    MpReal() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit MpReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    MpReal(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    MpReal(const MpReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    MpReal(MpReal&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    MpReal& operator=(const MpReal& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    MpReal& operator=(MpReal&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~MpReal() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static mpfr_prec_t join(const MpReal& a, const MpReal& b) {
        return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
    }

    friend MpReal operator+(const MpReal& a, const MpReal& b) {
        MpReal r(join(a, b)); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend MpReal operator-(const MpReal& a, const MpReal& b) {
        MpReal r(join(a, b)); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend MpReal operator*(const MpReal& a, const MpReal& b) {
        MpReal r(join(a, b)); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    friend MpReal operator/(const MpReal& a, const MpReal& b) {
        MpReal r(join(a, b)); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
    }
    MpReal operator-() const { MpReal r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
    MpReal& operator+=(const MpReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    MpReal& operator-=(const MpReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    MpReal& operator*=(const MpReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend bool operator<(const MpReal& a, const MpReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const MpReal& a, const MpReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const MpReal& a, const MpReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const MpReal& a, const MpReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

private:
    mpfr_t v_;
};

inline MpReal mp_pi(mpfr_prec_t prec) {
    MpReal r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

#define SPHLAT_MP_UNARY(name, fn)                      \
    inline MpReal name(const MpReal& a) {              \
        MpReal r(a.prec());                            \
        fn(r.raw(), a.raw(), MPFR_RNDN);               \
        return r;                                      \
    }
SPHLAT_MP_UNARY(sin, mpfr_sin)
SPHLAT_MP_UNARY(cos, mpfr_cos)
SPHLAT_MP_UNARY(exp, mpfr_exp)
SPHLAT_MP_UNARY(log, mpfr_log)
SPHLAT_MP_UNARY(sqrt, mpfr_sqrt)
SPHLAT_MP_UNARY(abs, mpfr_abs)
SPHLAT_MP_UNARY(lgamma_pos, mpfr_lngamma)  // argument must be positive
#undef SPHLAT_MP_UNARY

// --- adapters so templated numeric code works for both double and MpReal ---

template <typename Real>
struct RealTraits;

template <>
struct RealTraits<double> {
    static double from_double(double x) { return x; }
    static double to_double(double x) { return x; }
    static double pi() { return M_PI; }
    static double eps() { return 0x1.0p-52; }
    static double lgamma_positive(double x) { return std::lgamma(x); }
};

template <>
struct RealTraits<MpReal> {
    // precision for fresh constants; set by the caller before use
    static mpfr_prec_t& working_prec() {
        static thread_local mpfr_prec_t p = 128;
        return p;
    }
    static MpReal from_double(double x) { return MpReal(x, working_prec()); }
    static MpReal to_double(const MpReal&) = delete;
    static MpReal pi() { return mp_pi(working_prec()); }
    static MpReal eps() {
        MpReal r(1.0, working_prec());
        mpfr_mul_2si(r.raw(), r.raw(), -static_cast<long>(working_prec()) + 1, MPFR_RNDN);
        return r;
    }
    static MpReal lgamma_positive(const MpReal& x) { return lgamma_pos(x); }
};

inline double to_double(double x) { return x; }
inline double to_double(const MpReal& x) { return x.to_double(); }

// double overloads so unqualified math calls in templated code resolve
// inside this namespace for both Real types
inline double sin(double x) { return std::sin(x); }
inline double cos(double x) { return std::cos(x); }
inline double exp(double x) { return std::exp(x); }
inline double log(double x) { return std::log(x); }
inline double sqrt(double x) { return std::sqrt(x); }

}  // namespace sphlat
