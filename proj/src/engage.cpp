#include "netlaw/engage.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace netlaw {
namespace {

[[noreturn]] void fail(std::string_view source, std::size_t line, std::string_view what) {
    std::ostringstream msg;
    msg << source << ":" << line << ": " << what;
    throw std::runtime_error(msg.str());
}

std::uint64_t parse_count(std::string_view tok, std::string_view source, std::size_t line,
                          std::string_view field) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        fail(source, line,
             std::string(field) + ": expected a non-negative integer, got '" + std::string(tok) +
                 "'");
    return value;
}

}  // namespace

double engagement_rate(const EngagementRecord& rec) {
    if (rec.likes == 0) throw std::domain_error("engagement_rate: likes must be >= 1");
    return static_cast<double>(rec.interactions) / static_cast<double>(rec.likes);
}

LogBenchmark fit_log_benchmark(std::span<const EngagementRecord> records) {
    LogBenchmark bench;
    std::vector<const EngagementRecord*> fitted;
    for (const auto& rec : records) {
        if (rec.likes == 0) throw std::domain_error("fit_log_benchmark: likes must be >= 1");
        if (rec.interactions == 0) {
            ++bench.excluded_zero_interactions;
            continue;
        }
        fitted.push_back(&rec);
    }
    if (fitted.size() < 3)
        throw std::invalid_argument(
            "fit_log_benchmark: need at least 3 records with interactions >= 1");

    double xm = 0.0, ym = 0.0;
    for (const auto* rec : fitted) {
        xm += std::log10(static_cast<double>(rec->likes));
        ym += std::log10(static_cast<double>(rec->interactions));
    }
    xm /= static_cast<double>(fitted.size());
    ym /= static_cast<double>(fitted.size());
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto* rec : fitted) {
        const double dx = std::log10(static_cast<double>(rec->likes)) - xm;
        const double dy = std::log10(static_cast<double>(rec->interactions)) - ym;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0)
        throw std::runtime_error("fit_log_benchmark: all likes equal, fit is singular");
    bench.slope = sxy / sxx;
    bench.intercept = ym - bench.slope * xm;

    double ssres = 0.0;
    for (const auto* rec : fitted) {
        const double x = std::log10(static_cast<double>(rec->likes));
        const double y = std::log10(static_cast<double>(rec->interactions));
        const double resid = y - (bench.intercept + bench.slope * x);
        ssres += resid * resid;
        if (!bench.residual_per_bpo.emplace(rec->bpo_id, resid).second)
            throw std::invalid_argument("fit_log_benchmark: duplicate bpo_id '" + rec->bpo_id +
                                        "'");
    }
    bench.r_squared = syy == 0.0 ? 1.0 : 1.0 - ssres / syy;
    return bench;
}

std::vector<std::pair<std::string, double>> benchmark_rank(const LogBenchmark& bench) {
    std::vector<std::pair<std::string, double>> ranked(bench.residual_per_bpo.begin(),
                                                       bench.residual_per_bpo.end());
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return ranked;
}

std::vector<EngagementRecord> read_engagement_csv(std::istream& in,
                                                  std::string_view source_name) {
    std::vector<EngagementRecord> records;
    std::string raw;
    std::size_t lineno = 0;
    if (!std::getline(in, raw)) fail(source_name, 1, "missing header");
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw != "bpo_id,interactions,likes")
        fail(source_name, 1, "expected header 'bpo_id,interactions,likes'");
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty()) continue;
        std::string_view line = raw;
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
        if (c1 == std::string_view::npos || c2 == std::string_view::npos)
            fail(source_name, lineno, "malformed record: expected 3 fields");
        EngagementRecord rec;
        rec.bpo_id = std::string(line.substr(0, c1));
        if (rec.bpo_id.empty()) fail(source_name, lineno, "empty bpo_id");
        rec.interactions = parse_count(line.substr(c1 + 1, c2 - c1 - 1), source_name, lineno,
                                       "interactions");
        rec.likes = parse_count(line.substr(c2 + 1), source_name, lineno, "likes");
        if (rec.likes == 0) fail(source_name, lineno, "likes must be >= 1");
        records.push_back(std::move(rec));
    }
    return records;
}

void write_benchmark_csv(std::ostream& out, std::span<const EngagementRecord> records,
                         const LogBenchmark& bench) {
    char buf[64];
    auto fmt = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.10g", v);
        return std::string(buf);
    };
    std::unordered_map<std::string_view, const EngagementRecord*> by_id;
    for (const auto& r : records) by_id.emplace(r.bpo_id, &r);
    out << "bpo_id,er,residual,rank\n";
    std::size_t rank = 0;
    for (const auto& [id, resid] : benchmark_rank(bench)) {
        ++rank;
        const auto it = by_id.find(id);
        out << id << ',' << (it != by_id.end() ? fmt(engagement_rate(*it->second)) : "") << ','
            << fmt(resid) << ',' << rank << '\n';
    }
    for (const auto& rec : records) {
        if (bench.residual_per_bpo.count(rec.bpo_id)) continue;
        out << rec.bpo_id << ',' << fmt(engagement_rate(rec)) << ",,\n";
    }
}

}  // namespace netlaw
