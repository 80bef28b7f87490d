#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace netlaw {

struct EngagementRecord {
    std::string bpo_id;
    std::uint64_t interactions = 0;
    std::uint64_t likes = 1;  // >= 1
};

/// ER = interactions / likes.
double engagement_rate(const EngagementRecord& rec);

struct LogBenchmark {
    double intercept = 0.0;  // base-10
    double slope = 0.0;
    double r_squared = 0.0;
    std::map<std::string, double> residual_per_bpo;  // observed - predicted log10 interactions
    std::size_t excluded_zero_interactions = 0;
};

// OLS of log10(interactions) on log10(likes). Records with zero interactions
// are excluded from the fit (log undefined) and counted; at least 3 fittable
// records are required and their likes must not all coincide.
LogBenchmark fit_log_benchmark(std::span<const EngagementRecord> records);

/// Residual ranking, over-performers first; ties broken by id.
std::vector<std::pair<std::string, double>> benchmark_rank(const LogBenchmark& bench);

std::vector<EngagementRecord> read_engagement_csv(std::istream& in, std::string_view source_name);

/// CSV `bpo_id,er,residual,rank`, ranked records first; records excluded
/// from the fit follow with empty residual/rank cells.
void write_benchmark_csv(std::ostream& out, std::span<const EngagementRecord> records,
                         const LogBenchmark& bench);

}  // namespace netlaw
