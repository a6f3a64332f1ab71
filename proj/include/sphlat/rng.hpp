#pragma once

// Counter-based random numbers.  sample i of stream (seed) is a pure
// function of (seed, i), so parallel sweeps produce identical draws no
// matter how indices are scheduled across threads.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace sphlat {

// splitmix64 finalizer; passes standard avalanche tests.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct CounterRng {
    std::uint64_t seed;

    explicit CounterRng(std::uint64_t s) : seed(s) {}

    std::uint64_t bits(std::uint64_t index) const {
        return mix64(mix64(seed) ^ mix64(index * 0x9e3779b97f4a7c15ULL + 1));
    }

    // uniform in [0,1)
    double uniform01(std::uint64_t index) const {
        return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
    }

    // uniform in [-1/2, 1/2)
    double uniform_half(std::uint64_t index) const {
        return uniform01(index) - 0.5;
    }

    // torus point: d coordinates drawn from sub-stream (point, coord)
    std::vector<double> torus_coords(std::uint64_t point, int d) const {
        std::vector<double> x(d);
        for (int j = 0; j < d; ++j)
            x[j] = uniform_half(point * 1024 + static_cast<std::uint64_t>(j));
        return x;
    }

    // standard complex Gaussian via Box-Muller on two counter draws
    std::complex<double> gaussian(std::uint64_t index) const {
        double u1 = uniform01(2 * index);
        double u2 = uniform01(2 * index + 1);
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        double r = std::sqrt(-2.0 * std::log(u1));
        return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
    }
};

}  // namespace sphlat
