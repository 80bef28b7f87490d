// netlaw: generate, crawl, fit, diagnose, engage — one binary around the
// library, composable through files.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "netlaw/crawl.hpp"
#include "netlaw/diagnostics.hpp"
#include "netlaw/engage.hpp"
#include "netlaw/graph.hpp"
#include "netlaw/graph_io.hpp"
#include "netlaw/powerlaw.hpp"
#include "netlaw/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kDefaultSeed = 42;  // fixed so unseeded runs reproduce

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

void require_readable(const fs::path& path, const std::string& flag) {
    if (!fs::exists(path))
        throw std::runtime_error(flag + ": no such file: " + path.string());
    if (fs::is_directory(path))
        throw std::runtime_error(flag + ": is a directory: " + path.string());
}

std::ofstream open_output(const fs::path& path, const std::string& flag) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(flag + ": cannot write file: " + path.string());
    return out;
}

// a degrees file is a single column; an edge list has a TAB
bool looks_like_edge_list(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("--in: cannot open file: " + path.string());
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        return line.find('\t') != std::string::npos;
    }
    throw std::runtime_error("--in: file has no data lines: " + path.string());
}

struct GenerateArgs {
    std::string model;
    std::size_t n = 0;
    std::size_t m = 3;
    double p = -1.0;
    std::uint64_t seed = kDefaultSeed;
    std::string out;
};

int run_generate(const GenerateArgs& args) {
    netlaw::Graph g;
    if (args.model == "ba") {
        g = netlaw::generate_ba({args.n, args.m, args.seed});
    } else {
        if (args.p < 0.0) throw std::runtime_error("--p: required for --model er");
        g = netlaw::generate_er({args.n, args.p, args.seed});
    }
    auto out = open_output(args.out, "--out");
    netlaw::write_edge_list(out, g);
    std::cerr << "generated " << args.model << " graph: " << g.node_count() << " nodes, "
              << g.edge_count() << " edges -> " << args.out << "\n";
    return 0;
}

struct CrawlArgs {
    std::string in, seeds, out, log;
    std::size_t page_size = 100;
    std::uint64_t budget = netlaw::kUnlimitedBudget;
};

int run_crawl(const CrawlArgs& args) {
    require_readable(args.in, "--in");
    require_readable(args.seeds, "--seeds");
    const auto g = netlaw::load_graph(args.in);

    std::vector<std::string> seed_labels;
    {
        std::ifstream in(args.seeds);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            seed_labels.push_back(line);
        }
        if (seed_labels.empty())
            throw std::runtime_error("--seeds: no seed labels in " + args.seeds);
    }

    const auto api = netlaw::serve_snapshot(g, args.page_size);
    const auto result = netlaw::bfs_crawl(api, seed_labels, args.budget);
    const auto coverage = netlaw::crawl_coverage(result, g);

    if (!args.out.empty()) {
        auto out = open_output(args.out, "--out");
        netlaw::write_edge_list(out, netlaw::crawl_to_graph(result, g));
    }
    if (!args.log.empty()) {
        auto out = open_output(args.log, "--log");
        netlaw::write_crawl_log(out, result, g);
    }

    ordered_json report;
    report["api_calls"] = result.api_calls;
    report["truncated"] = result.truncated;
    report["visited"] = result.visit_order.size();
    report["frontier_remaining"] = result.frontier_remaining.size();
    report["edges_discovered"] = coverage.edges_discovered;
    report["node_recall"] = coverage.node_recall;
    report["edge_recall"] = coverage.edge_recall;
    std::cout << report.dump(2) << "\n";
    return 0;
}

struct FitArgs {
    std::string in, kmin = "auto", mode = "in", out, plot;
    double base = 1.5;
};

void write_series_tsv(const fs::path& path, const netlaw::DistributionTable& table,
                      const std::string& flag) {
    auto out = open_output(path, flag);
    for (const auto& p : table.points)
        out << fmt("%.12g", p.k) << '\t' << fmt("%.12g", p.value) << '\n';
}

int run_fit(const FitArgs& args) {
    require_readable(args.in, "--in");
    std::optional<double> fixed_kmin;
    if (args.kmin != "auto") {
        try {
            fixed_kmin = std::stod(args.kmin);
        } catch (const std::exception&) {
            throw std::runtime_error("--kmin: expected 'auto' or a number, got '" + args.kmin +
                                     "'");
        }
        if (!(*fixed_kmin > 0)) throw std::runtime_error("--kmin: must be positive");
    }

    std::vector<std::uint32_t> degrees;
    if (looks_like_edge_list(args.in)) {
        const auto g = netlaw::load_graph(args.in);
        degrees = netlaw::degree_sequence(g, netlaw::degree_mode_from_string(args.mode)).degrees;
    } else {
        degrees = netlaw::load_degree_file(args.in);
    }

    const auto pmf = netlaw::empirical_pmf(degrees);
    const auto binned = netlaw::log_bin(pmf, args.base);
    const double k_min = netlaw::select_linear_range(binned, fixed_kmin);
    const auto ols = netlaw::fit_ols_loglog(binned, k_min, binned.points.back().k);

    const std::string network = fs::path(args.in).stem().string();
    ordered_json report = ordered_json::array();
    ordered_json ols_row;
    ols_row["network"] = network;
    ols_row["c"] = ols.c;
    ols_row["lambda"] = ols.lambda;
    ols_row["r2"] = ols.r_squared;
    ols_row["k_min"] = ols.k_min;
    ols_row["k_max"] = ols.k_max;
    ols_row["n_points"] = ols.n_points;
    ols_row["method"] = "ols-logbin";
    report.push_back(ols_row);

    std::cout << "network\tc\tlambda\tr2\tmethod\n";
    std::cout << network << '\t' << fmt("%.3g", ols.c) << '\t' << fmt("%.3f", ols.lambda) << '\t'
              << fmt("%.3f", ols.r_squared) << "\tols-logbin\n";

    try {
        const auto mle_kmin = static_cast<std::uint32_t>(std::max(1.0, std::ceil(k_min)));
        const double mle = netlaw::fit_mle_discrete(degrees, mle_kmin);
        std::uint32_t k_max_deg = 0;
        std::size_t tail = 0;
        for (auto d : degrees)
            if (d >= mle_kmin) {
                ++tail;
                k_max_deg = std::max(k_max_deg, d);
            }
        ordered_json mle_row;
        mle_row["network"] = network;
        mle_row["c"] = nullptr;
        mle_row["lambda"] = mle;
        mle_row["r2"] = nullptr;
        mle_row["k_min"] = mle_kmin;
        mle_row["k_max"] = k_max_deg;
        mle_row["n_points"] = tail;
        mle_row["method"] = "mle-discrete";
        report.push_back(mle_row);
        std::cout << network << "\t-\t" << fmt("%.3f", mle) << "\t-\tmle-discrete\n";
    } catch (const std::exception& e) {
        std::cerr << "mle cross-check skipped: " << e.what() << "\n";
    }

    if (!args.out.empty()) open_output(args.out, "--out") << report.dump(2) << "\n";
    if (!args.plot.empty()) {
        write_series_tsv(args.plot + ".raw.tsv", pmf, "--plot");
        write_series_tsv(args.plot + ".binned.tsv", binned, "--plot");
    }
    return 0;
}

struct DiagnoseArgs {
    std::string in, strategy, out;
    double fraction = 0.05;
    std::size_t trials = 20;
    std::size_t sources = 100;
    std::uint64_t seed = kDefaultSeed;
};

int run_diagnose(const DiagnoseArgs& args) {
    require_readable(args.in, "--in");
    const auto g = netlaw::load_graph(args.in);

    const auto paths = netlaw::avg_path_length_sampled(g, args.sources, args.seed);
    std::vector<netlaw::RobustnessReport> removals;
    if (args.strategy.empty() || args.strategy == "random")
        removals.push_back(netlaw::removal_experiment(
            g, args.fraction, netlaw::RemovalStrategy::random, args.trials, args.seed));
    if (args.strategy.empty() || args.strategy == "targeted")
        removals.push_back(netlaw::removal_experiment(
            g, args.fraction, netlaw::RemovalStrategy::targeted, args.trials, args.seed));
    if (removals.empty())
        throw std::runtime_error("--strategy: expected 'random' or 'targeted', got '" +
                                 args.strategy + "'");

    std::cout << "avg_path_length\t" << fmt("%.4f", paths.mean_distance) << "\t(sources="
              << paths.sample_sources << ", reachable_pairs=" << paths.reachable_pairs << ")\n";
    std::cout << "strategy\tfraction\tgiant_fraction_mean\ttrials\n";
    for (const auto& rep : removals)
        std::cout << netlaw::to_string(rep.strategy) << '\t' << fmt("%.4g", rep.fraction_removed)
                  << '\t' << fmt("%.6f", rep.giant_fraction_mean) << '\t' << rep.trials << "\n";

    if (!args.out.empty()) {
        ordered_json report;
        report["path_length"] = {{"sample_sources", paths.sample_sources},
                                 {"mean_distance", paths.mean_distance},
                                 {"reachable_pairs", paths.reachable_pairs},
                                 {"unreachable_pairs", paths.unreachable_pairs}};
        auto& arr = report["removal"] = ordered_json::array();
        for (const auto& rep : removals) {
            ordered_json row;
            row["strategy"] = std::string(netlaw::to_string(rep.strategy));
            row["fraction_removed"] = rep.fraction_removed;
            row["trials"] = rep.trials;
            row["nodes_removed"] = rep.nodes_removed;
            row["giant_fraction_mean"] = rep.giant_fraction_mean;
            row["giant_fraction_per_trial"] = rep.giant_fraction_per_trial;
            arr.push_back(row);
        }
        open_output(args.out, "--out") << report.dump(2) << "\n";
    }
    return 0;
}

struct EngageArgs {
    std::string in, out;
};

int run_engage(const EngageArgs& args) {
    require_readable(args.in, "--in");
    std::ifstream in(args.in);
    const auto records = netlaw::read_engagement_csv(in, args.in);
    const auto bench = netlaw::fit_log_benchmark(records);

    std::cout << "slope\t" << fmt("%.6f", bench.slope) << "\n";
    std::cout << "intercept\t" << fmt("%.6f", bench.intercept) << "\n";
    std::cout << "r2\t" << fmt("%.6f", bench.r_squared) << "\n";
    std::cout << "fitted\t" << bench.residual_per_bpo.size() << "\n";
    std::cout << "excluded_zero_interactions\t" << bench.excluded_zero_interactions << "\n";

    if (!args.out.empty()) {
        auto out = open_output(args.out, "--out");
        netlaw::write_benchmark_csv(out, records, bench);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"netlaw: scale-free network lab - synthesize, crawl, fit, diagnose"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* cmd_gen = app.add_subcommand("generate", "Synthesize a BA or ER graph edge list");
    cmd_gen->add_option("--model", gen.model, "Graph model")
        ->required()
        ->check(CLI::IsMember({"ba", "er"}));
    cmd_gen->add_option("--n", gen.n, "Node count")->required();
    cmd_gen->add_option("--m", gen.m, "BA: edges per new node (default 3)");
    cmd_gen->add_option("--p", gen.p, "ER: edge probability");
    cmd_gen->add_option("--seed", gen.seed, "RNG seed (default 42)");
    cmd_gen->add_option("--out", gen.out, "Output edge-list path")->required();

    CrawlArgs crawl;
    auto* cmd_crawl = app.add_subcommand("crawl", "BFS-crawl a graph through the paged API");
    cmd_crawl->add_option("--in", crawl.in, "Snapshot edge-list path")->required();
    cmd_crawl->add_option("--seeds", crawl.seeds, "File with one seed label per line")->required();
    cmd_crawl->add_option("--page-size", crawl.page_size, "Neighbors per API page (default 100)")
        ->check(CLI::PositiveNumber);
    cmd_crawl->add_option("--budget", crawl.budget, "Max API calls (default unlimited)");
    cmd_crawl->add_option("--out", crawl.out, "Write discovered edges here");
    cmd_crawl->add_option("--log", crawl.log, "Write JSON-lines call log here");

    FitArgs fit;
    auto* cmd_fit = app.add_subcommand("fit", "Fit a power law to a degree distribution");
    cmd_fit->add_option("--in", fit.in, "Edge list or single-column degree file")->required();
    cmd_fit->add_option("--kmin", fit.kmin, "'auto' or a fixed lower degree bound")
        ->check(CLI::Validator(
            [](std::string& s) -> std::string {
                if (s == "auto") return {};
                try {
                    if (std::stod(s) > 0) return {};
                } catch (const std::exception&) {
                }
                return "expected 'auto' or a positive number, got '" + s + "'";
            },
            "KMIN"));
    cmd_fit->add_option("--base", fit.base, "Log-binning base (default 1.5)")
        ->check(CLI::Range(1.0 + 1e-9, 1e9));
    cmd_fit->add_option("--mode", fit.mode, "Degree mode for edge-list input")
        ->check(CLI::IsMember({"in", "out", "total"}));
    cmd_fit->add_option("--out", fit.out, "Write JSON fit report here");
    cmd_fit->add_option("--plot", fit.plot, "Prefix for <prefix>.raw.tsv / <prefix>.binned.tsv");

    DiagnoseArgs diag;
    auto* cmd_diag = app.add_subcommand("diagnose", "Path length and removal robustness");
    cmd_diag->add_option("--in", diag.in, "Edge-list path")->required();
    cmd_diag->add_option("--fraction", diag.fraction, "Fraction of nodes to remove (default 0.05)");
    cmd_diag->add_option("--strategy", diag.strategy, "random|targeted (default: both)")
        ->check(CLI::IsMember({"random", "targeted"}));
    cmd_diag->add_option("--trials", diag.trials, "Random-removal trials (default 20)");
    cmd_diag->add_option("--sources", diag.sources, "BFS sources for path sampling (default 100)");
    cmd_diag->add_option("--seed", diag.seed, "RNG seed (default 42)");
    cmd_diag->add_option("--out", diag.out, "Write JSON report here");

    EngageArgs eng;
    auto* cmd_eng = app.add_subcommand("engage", "Engagement rates and log-log benchmark");
    cmd_eng->add_option("--in", eng.in, "CSV with header bpo_id,interactions,likes")->required();
    cmd_eng->add_option("--out", eng.out, "Write ranked CSV here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_gen) return run_generate(gen);
        if (*cmd_crawl) return run_crawl(crawl);
        if (*cmd_fit) return run_fit(fit);
        if (*cmd_diag) return run_diagnose(diag);
        if (*cmd_eng) return run_engage(eng);
    } catch (const std::exception& e) {
        std::cerr << "netlaw: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
