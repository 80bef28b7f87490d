#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace netlaw {

// Seeded random stream used by every stochastic component.
//
// The raw engine is std::mt19937_64 (seeding procedure is fixed by the
// standard), and all derived draws below are implemented here rather than
// with std::*_distribution so that a given seed produces the same stream on
// every platform. The stream identity is part of the repo's reproducibility
// contract (see README).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Unbiased integer in [0, bound) via rejection sampling.
    std::uint64_t uniform_index(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("uniform_index: bound must be positive");
        const std::uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random mantissa bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// r distinct values from [0, n), by partial Fisher-Yates. Output is in
    /// draw order, not sorted.
    std::vector<std::uint32_t> sample_without_replacement(std::uint32_t n, std::uint32_t r) {
        if (r > n) throw std::invalid_argument("sample_without_replacement: r > n");
        std::vector<std::uint32_t> pool(n);
        for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
        for (std::uint32_t i = 0; i < r; ++i) {
            const auto j = i + static_cast<std::uint32_t>(uniform_index(n - i));
            std::swap(pool[i], pool[j]);
        }
        pool.resize(r);
        return pool;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace netlaw
