#pragma once

// Generic adaptive quadrature over a Real type (double or MpReal).
//
//  * gauss_legendre_adaptive: composite 16/32-point Gauss-Legendre with
//    interval bisection; node tables are generated by Newton iteration on
//    the Legendre recurrence at the working precision and cached.
//  * simpson_adaptive: the classical recursive Simpson scheme.
//
// Both return the integral together with an accumulated error estimate and
// the total absolute mass seen (used by callers to gauge cancellation).

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "sphlat/errors.hpp"
#include "sphlat/mpreal.hpp"

namespace sphlat {

inline double abs_value(double x) { return std::fabs(x); }
inline MpReal abs_value(const MpReal& x) { return abs(x); }

// ---------------------------------------------------------------- nodes ----

// Legendre polynomial value and derivative via the three-term recurrence.
template <typename Real>
std::pair<Real, Real> legendre_pd(int n, const Real& x) {
    Real pm1 = RealTraits<Real>::from_double(1.0);
    Real p = x;
    for (int k = 2; k <= n; ++k) {
        Real a = RealTraits<Real>::from_double((2.0 * k - 1.0) / k);
        Real b = RealTraits<Real>::from_double((k - 1.0) / k);
        Real pn = a * x * p - b * pm1;
        pm1 = p;
        p = pn;
    }
    Real nn = RealTraits<Real>::from_double(static_cast<double>(n));
    Real one = RealTraits<Real>::from_double(1.0);
    Real dp = nn * (x * p - pm1) / (x * x - one);
    return {p, dp};
}

template <typename Real>
struct GaussNodes {
    std::vector<Real> x, w;  // nodes in (-1,1), weights
};

// Newton refinement from the given seeds.  Stops on machine-level step size
// or stagnation, so it is cheap at any precision; seeding MPFR runs from
// the converged double nodes keeps the iteration count near log2(prec/53).
template <typename Real>
GaussNodes<Real> make_gauss_nodes(int n, const std::vector<double>& seeds) {
    GaussNodes<Real> g;
    g.x.resize(n);
    g.w.resize(n);
    Real one = RealTraits<Real>::from_double(1.0);
    Real two = RealTraits<Real>::from_double(2.0);
    Real tiny = RealTraits<Real>::eps() * RealTraits<Real>::from_double(4.0);
    for (int i = 0; i < n; ++i) {
        Real x = RealTraits<Real>::from_double(seeds[i]);
        Real prev = RealTraits<Real>::from_double(1.0);
        for (int it = 0; it < 100; ++it) {
            auto [p, dp] = legendre_pd(n, x);
            Real dx = p / dp;
            x -= dx;
            Real adx = abs_value(dx);
            if (adx <= tiny) break;
            if (it >= 2 && !(adx < prev)) break;
            prev = adx;
        }
        auto [p, dp] = legendre_pd(n, x);
        (void)p;
        g.x[i] = x;
        g.w[i] = two / ((one - x * x) * dp * dp);
    }
    return g;
}

inline std::vector<double> chebyshev_seeds(int n) {
    std::vector<double> s(n);
    for (int i = 0; i < n; ++i) s[i] = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    return s;
}

inline const GaussNodes<double>& gauss_nodes_double(int n) {
    static std::map<int, GaussNodes<double>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, make_gauss_nodes<double>(n, chebyshev_seeds(n))).first;
    return it->second;
}

inline const GaussNodes<MpReal>& gauss_nodes_mp(int n, mpfr_prec_t prec) {
    static std::map<std::pair<int, mpfr_prec_t>, GaussNodes<MpReal>> cache;
    static std::mutex mu;
    std::vector<double> seeds;
    {
        const auto& d = gauss_nodes_double(n);
        seeds = d.x;
    }
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, prec);
    auto it = cache.find(key);
    if (it == cache.end()) {
        mpfr_prec_t saved = RealTraits<MpReal>::working_prec();
        RealTraits<MpReal>::working_prec() = prec + 32;
        it = cache.emplace(key, make_gauss_nodes<MpReal>(n, seeds)).first;
        RealTraits<MpReal>::working_prec() = saved;
    }
    return it->second;
}

template <typename Real>
const GaussNodes<Real>& gauss_nodes(int n);
template <>
inline const GaussNodes<double>& gauss_nodes<double>(int n) {
    return gauss_nodes_double(n);
}
template <>
inline const GaussNodes<MpReal>& gauss_nodes<MpReal>(int n) {
    return gauss_nodes_mp(n, RealTraits<MpReal>::working_prec());
}

// ----------------------------------------------------------- quadrature ----

template <typename Real>
struct QuadResult {
    Real value;
    Real error;  // accumulated panel-difference estimate
    Real mass;   // integral of |f|, coarse
};

template <typename Real, typename F>
Real gauss_panel(const F& f, const Real& a, const Real& b, int n, Real* mass) {
    const auto& g = gauss_nodes<Real>(n);
    Real half = RealTraits<Real>::from_double(0.5);
    Real mid = (a + b) * half;
    Real rad = (b - a) * half;
    Real acc = RealTraits<Real>::from_double(0.0);
    Real m = RealTraits<Real>::from_double(0.0);
    for (int i = 0; i < n; ++i) {
        Real v = f(mid + rad * g.x[i]);
        acc += g.w[i] * v;
        if (mass) m += g.w[i] * abs_value(v);
    }
    if (mass) *mass += m * rad;
    return acc * rad;
}

// Composite adaptive Gauss-Legendre.  presplit_hint lets callers pre-slice
// oscillatory integrands so the adaptive stage only polishes.
template <typename Real, typename F>
QuadResult<Real> gauss_legendre_adaptive(const F& f, Real a, Real b, const Real& tol,
                                         int presplit_hint = 1, int max_depth = 80) {
    QuadResult<Real> out{RealTraits<Real>::from_double(0.0), RealTraits<Real>::from_double(0.0),
                         RealTraits<Real>::from_double(0.0)};
    struct Seg {
        Real a, b;
        int depth;
    };
    std::vector<Seg> stack;
    int pre = std::max(1, presplit_hint);
    Real width = (b - a) / RealTraits<Real>::from_double(static_cast<double>(pre));
    for (int i = pre - 1; i >= 0; --i) {
        Real lo = a + width * RealTraits<Real>::from_double(static_cast<double>(i));
        Real hi = (i == pre - 1) ? b : lo + width;
        stack.push_back({lo, hi, 0});
    }
    Real half = RealTraits<Real>::from_double(0.5);
    std::int64_t panels = 0;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (++panels > 2'000'000)
            throw AccuracyError("gauss quadrature: panel budget exhausted");
        Real coarse = gauss_panel<Real>(f, s.a, s.b, 16, nullptr);
        Real fine = gauss_panel<Real>(f, s.a, s.b, 32, &out.mass);
        Real diff = abs_value(fine - coarse);
        Real local_tol = tol * abs_value(s.b - s.a) / abs_value(b - a);
        if (diff <= local_tol || s.depth >= max_depth) {
            out.value += fine;
            out.error += diff;
        } else {
            Real mid = (s.a + s.b) * half;
            stack.push_back({mid, s.b, s.depth + 1});
            stack.push_back({s.a, mid, s.depth + 1});
        }
    }
    return out;
}

// Classical adaptive Simpson.
template <typename Real, typename F>
QuadResult<Real> simpson_adaptive(const F& f, Real a, Real b, const Real& tol,
                                  int presplit_hint = 1, int max_depth = 60) {
    QuadResult<Real> out{RealTraits<Real>::from_double(0.0), RealTraits<Real>::from_double(0.0),
                         RealTraits<Real>::from_double(0.0)};
    Real half = RealTraits<Real>::from_double(0.5);
    Real sixth = RealTraits<Real>::from_double(1.0 / 6.0);
    Real fifteen = RealTraits<Real>::from_double(15.0);
    auto simpson = [&](const Real& lo, const Real& hi, const Real& flo, const Real& fmid,
                       const Real& fhi) {
        return (hi - lo) * sixth * (flo + RealTraits<Real>::from_double(4.0) * fmid + fhi);
    };
    struct Seg {
        Real a, b, fa, fm, fb, whole;
        int depth;
    };
    std::vector<Seg> stack;
    int pre = std::max(1, presplit_hint);
    Real width = (b - a) / RealTraits<Real>::from_double(static_cast<double>(pre));
    for (int i = pre - 1; i >= 0; --i) {
        Real lo = a + width * RealTraits<Real>::from_double(static_cast<double>(i));
        Real hi = (i == pre - 1) ? b : lo + width;
        Real mid = (lo + hi) * half;
        Real fa = f(lo), fm = f(mid), fb = f(hi);
        stack.push_back({lo, hi, fa, fm, fb, simpson(lo, hi, fa, fm, fb), 0});
    }
    std::int64_t panels = 0;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (++panels > 8'000'000)
            throw AccuracyError("simpson quadrature: panel budget exhausted");
        Real mid = (s.a + s.b) * half;
        Real lm = (s.a + mid) * half;
        Real rm = (mid + s.b) * half;
        Real flm = f(lm), frm = f(rm);
        Real left = simpson(s.a, mid, s.fa, flm, s.fm);
        Real right = simpson(mid, s.b, s.fm, frm, s.fb);
        Real diff = abs_value(left + right - s.whole);
        Real local_tol = tol * abs_value(s.b - s.a) / abs_value(b - a);
        if (diff <= fifteen * local_tol || s.depth >= max_depth) {
            out.value += left + right + (left + right - s.whole) / fifteen;
            out.error += diff / fifteen;
            out.mass += abs_value(left) + abs_value(right);
        } else {
            stack.push_back({mid, s.b, s.fm, frm, s.fb, right, s.depth + 1});
            stack.push_back({s.a, mid, s.fa, flm, s.fm, left, s.depth + 1});
        }
    }
    return out;
}

}  // namespace sphlat
