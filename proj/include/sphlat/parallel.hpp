#pragma once

// Deterministic work distribution.  Tasks are partitioned by index, every
// worker writes into its own preassigned slots, and reductions are performed
// in index order afterwards, so results do not depend on the thread count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace sphlat {

inline int& thread_limit() {
    static int limit = 0;  // 0 = use hardware concurrency
    return limit;
}

inline void set_threads(int n) { thread_limit() = n; }

inline int effective_threads() {
    int n = thread_limit();
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    return std::max(1, n);
}

// Runs body(i) for i in [begin, end).  Work is handed out in fixed-size
// chunks through an atomic counter; since each index owns its output slot,
// the schedule does not affect the result.
template <typename Body>
void parallel_for(std::size_t begin, std::size_t end, const Body& body,
                  std::size_t chunk = 16) {
    const std::size_t n = end - begin;
    const int workers = static_cast<int>(
        std::min<std::size_t>(effective_threads(), std::max<std::size_t>(n, 1)));
    if (workers <= 1 || n <= chunk) {
        for (std::size_t i = begin; i < end; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{begin};
    auto run = [&] {
        for (;;) {
            std::size_t lo = next.fetch_add(chunk);
            if (lo >= end) return;
            std::size_t hi = std::min(end, lo + chunk);
            for (std::size_t i = lo; i < hi; ++i) body(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
}

// Fixed-order max-reduction helper: fills values[i] = f(i) in parallel, then
// scans sequentially.  Returns (max value, argmax index).
template <typename F>
std::pair<double, std::size_t> parallel_max(std::size_t n, const F& f) {
    std::vector<double> values(n);
    parallel_for(0, n, [&](std::size_t i) { values[i] = f(i); });
    double best = -1.0;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i] > best) { best = values[i]; arg = i; }
    }
    return {best, arg};
}

}  // namespace sphlat
