#include "netlaw/powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

namespace netlaw {
namespace {

// Hurwitz zeta(s, a) for s > 1, a >= 1, by Euler-Maclaurin. Direct terms up
// to a+M with tail corrections; relative error ~1e-14 over the exponent
// range the MLE scans.
double hurwitz_zeta(double s, double a) {
    const double cutoff = std::max(30.0, 2.0 * s);  // keep the asymptotic series converging
    double sum = 0.0;
    double ap = a;
    while (ap < cutoff) {
        sum += std::pow(ap, -s);
        ap += 1.0;
    }
    const double inv = 1.0 / ap;
    const double t = std::pow(ap, -s);
    sum += t * ap / (s - 1.0);  // integral term
    sum += 0.5 * t;
    sum += t * inv * s / 12.0;
    sum -= t * inv * inv * inv * s * (s + 1.0) * (s + 2.0) / 720.0;
    sum += t * inv * inv * inv * inv * inv * s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) /
           30240.0;
    return sum;
}

struct OlsLine {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;
};

// two-pass centered OLS of y on x; throws when every x coincides
OlsLine ols(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    double xm = 0.0, ym = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        xm += x[i];
        ym += y[i];
    }
    xm /= static_cast<double>(n);
    ym /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - xm;
        const double dy = y[i] - ym;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0)
        throw std::runtime_error("fit_ols_loglog: identical abscissas, fit is singular");
    OlsLine line;
    line.slope = sxy / sxx;
    line.intercept = ym - line.slope * xm;
    double ssres = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - line.intercept - line.slope * x[i];
        ssres += r * r;
    }
    line.r_squared = syy == 0.0 ? 1.0 : 1.0 - ssres / syy;
    return line;
}

}  // namespace

double DistributionTable::total_mass() const {
    double total = 0.0;
    for (const auto& p : points) total += p.mass;
    return total;
}

DistributionTable empirical_pmf(std::span<const std::uint32_t> degrees) {
    if (degrees.empty()) throw std::invalid_argument("empirical_pmf: no nodes");
    std::map<std::uint32_t, std::uint64_t> counts;
    for (auto d : degrees)
        if (d > 0) ++counts[d];
    if (counts.empty())
        throw std::invalid_argument("empirical_pmf: every degree is zero, distribution is empty");
    DistributionTable table;
    table.sample_size = degrees.size();
    table.points.reserve(counts.size());
    const double n = static_cast<double>(degrees.size());
    for (const auto& [k, c] : counts) {
        const double p = static_cast<double>(c) / n;
        table.points.push_back({static_cast<double>(k), p, p});
    }
    return table;
}

DistributionTable empirical_pmf(const DegreeSequence& degs) { return empirical_pmf(degs.degrees); }

DistributionTable log_bin(const DistributionTable& dist, double base) {
    if (dist.binned) throw std::invalid_argument("log_bin: table is already binned");
    if (!(base > 1.0)) throw std::invalid_argument("log_bin: base must exceed 1");
    DistributionTable out;
    out.binned = true;
    out.bin_base = base;
    out.sample_size = dist.sample_size;

    const double logb = std::log(base);
    auto bin_of = [&](double k) {
        auto i = static_cast<long>(std::floor(std::log(k) / logb));
        // settle points that land on a computed edge
        while (k < std::pow(base, static_cast<double>(i))) --i;
        while (k >= std::pow(base, static_cast<double>(i + 1))) ++i;
        return i;
    };

    std::size_t idx = 0;
    while (idx < dist.points.size()) {
        const long bin = bin_of(dist.points[idx].k);
        const double lo = std::pow(base, static_cast<double>(bin));
        const double hi = std::pow(base, static_cast<double>(bin + 1));
        double mass = 0.0;
        while (idx < dist.points.size() && dist.points[idx].k < hi) {
            mass += dist.points[idx].mass;
            ++idx;
        }
        // integer degrees covered by [lo, hi)
        const double width = std::max(1.0, std::ceil(hi) - std::ceil(lo));
        out.points.push_back({std::sqrt(lo * hi), mass / width, mass});
    }
    return out;
}

double select_linear_range(const DistributionTable& dist, std::optional<double> fixed) {
    if (dist.points.size() < 4)
        throw std::invalid_argument("select_linear_range: need at least 4 points");
    if (fixed) return *fixed;

    const std::size_t n = dist.points.size();
    std::vector<double> suffix_mass(n + 1, 0.0);
    for (std::size_t i = n; i-- > 0;)
        suffix_mass[i] = suffix_mass[i + 1] + dist.points[i].mass;
    const double needed = 0.25 * suffix_mass[0];

    double best_k = dist.points.front().k;
    double best_r2 = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 3 <= n; ++i) {
        if (suffix_mass[i] < needed) break;
        const auto fit =
            fit_ols_loglog(dist, dist.points[i].k, dist.points.back().k);
        if (fit.r_squared > best_r2 + 1e-12) {  // ties keep the smallest k_min
            best_r2 = fit.r_squared;
            best_k = dist.points[i].k;
        }
    }
    return best_k;
}

PowerLawFit fit_ols_loglog(const DistributionTable& dist, double k_min, double k_max) {
    std::vector<double> x, y;
    double lo = 0.0, hi = 0.0;
    for (const auto& p : dist.points) {
        if (p.k < k_min || p.k > k_max) continue;
        if (x.empty() || p.k < lo) lo = p.k;
        if (x.empty() || p.k > hi) hi = p.k;
        x.push_back(std::log10(p.k));
        y.push_back(std::log10(p.value));
    }
    if (x.size() < 2)
        throw std::invalid_argument("fit_ols_loglog: fewer than 2 points in [k_min, k_max]");
    const OlsLine line = ols(x, y);
    PowerLawFit fit;
    fit.lambda = -line.slope;
    fit.c = std::pow(10.0, line.intercept);
    fit.r_squared = line.r_squared;
    fit.k_min = lo;
    fit.k_max = hi;
    fit.n_points = x.size();
    return fit;
}

double fit_mle_discrete(std::span<const std::uint32_t> degrees, std::uint32_t k_min) {
    if (k_min < 1) throw std::invalid_argument("fit_mle_discrete: k_min must be >= 1");
    std::uint64_t n = 0;
    double sum_log = 0.0;
    bool all_equal = true;
    std::uint32_t first = 0;
    for (auto d : degrees) {
        if (d < k_min) continue;
        if (n == 0)
            first = d;
        else if (d != first)
            all_equal = false;
        ++n;
        sum_log += std::log(static_cast<double>(d));
    }
    if (n < 50)
        throw std::invalid_argument("fit_mle_discrete: need at least 50 samples >= k_min");
    if (all_equal)
        throw std::runtime_error(
            "fit_mle_discrete: all samples equal, likelihood diverges (lambda -> infinity)");

    const double a = static_cast<double>(k_min);
    const double nn = static_cast<double>(n);
    auto neg_loglik = [&](double lambda) {
        return lambda * sum_log + nn * std::log(hurwitz_zeta(lambda, a));
    };

    // golden-section minimization; interval shrinks well past the 1e-6 target
    double lo = 1.000001, hi = 64.0;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = neg_loglik(c), fd = neg_loglik(d);
    for (int iter = 0; iter < 120; ++iter) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = neg_loglik(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = neg_loglik(d);
        }
    }
    const double lambda = 0.5 * (lo + hi);
    if (lambda > 63.0)
        throw std::runtime_error("fit_mle_discrete: likelihood diverges (lambda -> infinity)");
    return lambda;
}

double fit_mle_discrete(const DegreeSequence& degs, std::uint32_t k_min) {
    return fit_mle_discrete(std::span<const std::uint32_t>(degs.degrees), k_min);
}

}  // namespace netlaw
