#pragma once

// Synthetic distribution fixtures shared by the unit and acceptance suites.

#include <cmath>
#include <cstdint>

#include "netlaw/powerlaw.hpp"
#include "netlaw/rng.hpp"

namespace fixtures {

// noiseless table p(k) = c * k^(-lambda) on the given abscissas
inline netlaw::DistributionTable power_law_grid(const std::vector<double>& ks, double c,
                                                double lambda) {
    netlaw::DistributionTable table;
    table.sample_size = ks.size();
    for (double k : ks) {
        const double p = c * std::pow(k, -lambda);
        table.points.push_back({k, p, p});
    }
    return table;
}

// dense integer grid: flat below the threshold, exact power law above it,
// with multiplicative log-normal jitter
inline netlaw::DistributionTable plateau_table(std::uint64_t seed, double lambda_tail = 2.5,
                                               std::uint32_t threshold = 100,
                                               std::uint32_t kmax = 10000, double sigma = 0.02) {
    netlaw::Rng rng(seed);
    auto normal = [&]() {
        const double u1 = rng.uniform01(), u2 = rng.uniform01();
        return std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(6.283185307179586 * u2);
    };
    std::vector<double> p(kmax);
    double total = 0.0;
    for (std::uint32_t k = 1; k <= kmax; ++k) {
        double base = k < threshold
                          ? 1.0
                          : std::pow(static_cast<double>(k) / threshold, -lambda_tail);
        p[k - 1] = base * std::exp(sigma * normal());
        total += p[k - 1];
    }
    netlaw::DistributionTable table;
    table.sample_size = 1000000;  // nominal
    for (std::uint32_t k = 1; k <= kmax; ++k)
        table.points.push_back({static_cast<double>(k), 0.95 * p[k - 1] / total,
                                0.95 * p[k - 1] / total});
    return table;
}

inline long bin_index(double k, double base) {
    auto i = static_cast<long>(std::floor(std::log(k) / std::log(base)));
    while (k < std::pow(base, static_cast<double>(i))) --i;
    while (k >= std::pow(base, static_cast<double>(i + 1))) ++i;
    return i;
}

}  // namespace fixtures
