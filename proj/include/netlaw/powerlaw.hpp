#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "netlaw/graph.hpp"

namespace netlaw {

// One abscissa of a degree distribution. `value` is what gets plotted and
// fitted (probability mass for raw tables, mass per covered integer degree
// for log-binned tables); `mass` is always the raw probability mass, kept so
// range selection can reason about mass regardless of binning.
struct DistPoint {
    double k = 0.0;
    double value = 0.0;
    double mass = 0.0;
};

struct DistributionTable {
    std::vector<DistPoint> points;  // k strictly increasing, value > 0
    bool binned = false;
    double bin_base = 0.0;          // > 1 when binned
    std::size_t sample_size = 0;

    double total_mass() const;
};

/// Log-log OLS fit of P(k) ~ c * k^(-lambda).
struct PowerLawFit {
    double c = 0.0;
    double lambda = 0.0;
    double r_squared = 0.0;
    double k_min = 0.0;   // smallest abscissa actually fitted
    double k_max = 0.0;   // largest abscissa actually fitted
    std::size_t n_points = 0;
};

/// P(k) = count(k) / node_count over observed degrees k > 0. Zero-degree
/// nodes are excluded from the abscissas (log scale) but still counted in
/// sample_size. Throws if every degree is zero.
DistributionTable empirical_pmf(std::span<const std::uint32_t> degrees);
DistributionTable empirical_pmf(const DegreeSequence& degs);

// Geometric bins [base^i, base^(i+1)). Bin value = summed mass divided by
// the number of integer degrees the bin covers (clamped to >= 1); abscissa =
// geometric mean of the bin edges; empty bins dropped. Keeps sum(value) <= 1
// and leaves the exponent of an integer-supported power law intact.
DistributionTable log_bin(const DistributionTable& dist, double base);

// Scans candidate k_min over the table's abscissas and returns the one
// maximizing the OLS R^2 on points >= k_min, subject to keeping at least 3
// points and at least 25% of the raw mass. Ties within 1e-12 go to the
// smallest k_min. Pass `fixed` to skip the scan.
double select_linear_range(const DistributionTable& dist,
                           std::optional<double> fixed = std::nullopt);

/// Ordinary least squares of log10(value) on log10(k) over points with
/// k in [k_min, k_max]. lambda = -slope, c = 10^intercept, R^2 in log space.
PowerLawFit fit_ols_loglog(const DistributionTable& dist, double k_min, double k_max);

/// Discrete power-law maximum-likelihood exponent over samples >= k_min,
/// solved numerically to 1e-6. Requires >= 50 qualifying samples. Throws
/// when the likelihood diverges (all samples equal to k_min).
double fit_mle_discrete(std::span<const std::uint32_t> degrees, std::uint32_t k_min);
double fit_mle_discrete(const DegreeSequence& degs, std::uint32_t k_min);

}  // namespace netlaw
