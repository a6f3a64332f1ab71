#pragma once

// Singular series for sums of d squares,
//
//   S_d(lambda) = sum_{q>=1} sum_{p<=q, (p,q)=1} e(-lambda p/q) G(p/q; 0)^... ,
//   G(p/q; 0) = g(p/q; 0)^d,
//
// truncated at level P with the certified tail bound
//
//   |S_d(lambda) - S_d(lambda; P)| <= 2^{d/2} sum_{q>P} q^{1-d/2}
//                                  <= 2^{d/2} ( P^{2-d/2}/(d/2-2) + P^{1-d/2} ),
//
// obtained by comparing the sum with the integral of y^{1-d/2}.  Requires
// d >= 5 for absolute convergence.  The q-sweep parallelizes with per-q
// slots and a fixed-order reduction, so values are bit-stable across
// thread counts.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "sphlat/errors.hpp"
#include "sphlat/gauss.hpp"
#include "sphlat/parallel.hpp"

namespace sphlat {

struct SingularSeriesValue {
    int d = 0;
    long lambda = 0;
    long truncation_level = 0;  // P
    double value = 0.0;
    double tail_bound = 0.0;
};

inline double singular_tail_bound(int d, long p) {
    double half = 0.5 * static_cast<double>(d);
    double lp = std::log(static_cast<double>(p));
    // 2^{d/2} [ P^{2-d/2}/(d/2-2) + P^{1-d/2} ]
    double t1 = std::exp(half * M_LN2 + (2.0 - half) * lp) / (half - 2.0);
    double t2 = std::exp(half * M_LN2 + (1.0 - half) * lp);
    return t1 + t2;
}

inline long choose_truncation_level(int d, double target_tail) {
    if (d < 5) throw PreconditionError("singular series requires d >= 5 (divergence risk)");
    if (!(target_tail > 0)) throw PreconditionError("target tail must be positive");
    long lo = 2, hi = 2;
    while (singular_tail_bound(d, hi) > target_tail) {
        hi *= 2;
        if (hi > (1L << 40)) throw AccuracyError("singular series: unreachable tail target");
    }
    while (lo < hi) {  // least P with bound <= target
        long mid = lo + (hi - lo) / 2;
        if (singular_tail_bound(d, mid) <= target_tail)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

// Precomputes, for every q <= P, the coprime p's phases and G(p/q;0)^d once;
// evaluating a new lambda is then a table walk.  Worth it because sweeps
// evaluate hundreds of lambdas against one (d, P).
class SingularSeriesEngine {
public:
    SingularSeriesEngine(int d, long p_level) : d_(d), level_(p_level) {
        if (d < 5) throw PreconditionError("singular series requires d >= 5 (divergence risk)");
        terms_.resize(level_ + 1);
        parallel_for(1, static_cast<std::size_t>(level_) + 1, [&](std::size_t q) {
            build_q(static_cast<long>(q));
        }, 1);
    }

    int dim() const { return d_; }
    long level() const { return level_; }

    SingularSeriesValue evaluate(long lambda) const {
        std::vector<cdouble> by_q(level_ + 1, cdouble{0.0, 0.0});
        parallel_for(1, static_cast<std::size_t>(level_) + 1, [&](std::size_t q) {
            by_q[q] = q_contribution(static_cast<long>(q), lambda);
        }, 8);
        Kahan re, im;
        for (long q = 1; q <= level_; ++q) {
            re.add(by_q[q].real());
            im.add(by_q[q].imag());
        }
        double imag = im.get();
        if (std::abs(imag) >= 1e-12)
            throw AccuracyError("singular series: imaginary part " + std::to_string(imag) +
                                " not cancelled");
        SingularSeriesValue out;
        out.d = d_;
        out.lambda = lambda;
        out.truncation_level = level_;
        out.value = re.get();
        out.tail_bound = singular_tail_bound(d_, level_);
        return out;
    }

private:
    struct Term {
        long p;
        cdouble gd;  // G(p/q; 0) = g(p/q;0)^d
    };

    void build_q(long q) {
        RootTable roots(q);
        auto& list = terms_[q];
        for (long p = 1; p <= q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            cdouble g = roots.normalized_sum(p, 0);
            list.push_back({p, cpow(g, d_)});
        }
    }

    cdouble q_contribution(long q, long lambda) const {
        Kahan re, im;
        const double twopi_q = 2.0 * M_PI / static_cast<double>(q);
        for (const auto& term : terms_[q]) {
            long r = (lambda % q) * (term.p % q) % q;  // lambda p mod q
            double a = -twopi_q * static_cast<double>(r);
            cdouble v = cdouble{std::cos(a), std::sin(a)} * term.gd;
            re.add(v.real());
            im.add(v.imag());
        }
        return {re.get(), im.get()};
    }

    static cdouble cpow(cdouble base, int e) {
        cdouble acc{1.0, 0.0};
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    int d_;
    long level_;
    std::vector<std::vector<Term>> terms_;
};

inline SingularSeriesValue singular_series(int d, long lambda, double target_tail) {
    long p_level = choose_truncation_level(d, target_tail);
    return SingularSeriesEngine(d, p_level).evaluate(lambda);
}

// ln [ pi^{d/2} / Gamma(d/2) * lambda^{d/2-1} * S_d(lambda) ]
inline double main_term_log(int d, long lambda, const SingularSeriesValue& s) {
    if (lambda < 1) throw PreconditionError("main term requires lambda >= 1");
    if (!(s.value > 0))
        throw PreconditionError("singular series value must be positive (truncation failure?)");
    double half = 0.5 * static_cast<double>(d);
    return half * std::log(M_PI) - std::lgamma(half) +
           (half - 1.0) * std::log(static_cast<double>(lambda)) + std::log(s.value);
}

}  // namespace sphlat
