// ncb — community detection CLI: detection runs, baseline comparison,
// degree/conductance profiling, scaling benchmarks.
//
// Exit codes: 0 success, 2 usage/config error, 3 input parse error,
// 4 runtime error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncb/bench.hpp"
#include "ncb/community.hpp"
#include "ncb/conductance.hpp"
#include "ncb/detect.hpp"
#include "ncb/error.hpp"
#include "ncb/graph.hpp"
#include "ncb/greedy_modularity.hpp"
#include "ncb/io.hpp"
#include "ncb/lpa.hpp"
#include "ncb/metrics.hpp"
#include "ncb/partition_io.hpp"
#include "ncb/published.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitRuntime = 4;

struct run_config {
    std::string input;
    std::string format = "auto";  // auto | edge-list | gml
    std::string algorithm = "ncb";
    std::uint64_t seed = 1;
    std::string ground_truth;
    std::string output;
    std::string output_format = "csv";
    bool trace = false;
    std::uint32_t repeats = 5;
};

ncb::loaded_graph load_input(const std::string& path, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw ncb::parse_error("cannot open input file: " + path);
    std::string fmt = format;
    if (fmt == "auto") {
        auto dot = path.rfind('.');
        fmt = (dot != std::string::npos && path.substr(dot) == ".gml") ? "gml" : "edge-list";
    }
    if (fmt == "gml") return ncb::load_gml(in);
    return ncb::load_edge_list(in);
}

ncb::partition load_truth(const std::string& path, const ncb::graph& g) {
    std::ifstream in(path);
    if (!in) throw ncb::parse_error("cannot open ground-truth file: " + path);
    return ncb::read_partition_csv(in, g);
}

struct timed_run {
    ncb::partition part;
    double seconds = 0;
    std::vector<ncb::detect_event> trace;
};

timed_run run_algorithm(const ncb::graph& g, const std::string& algorithm, std::uint64_t seed) {
    timed_run out;
    auto start = std::chrono::steady_clock::now();
    if (algorithm == "ncb") {
        ncb::detect_result res = ncb::detect(g);
        out.part = std::move(res.part);
        out.trace = std::move(res.trace);
    } else if (algorithm == "lpa") {
        out.part = ncb::lpa(g, seed);
    } else if (algorithm == "greedy-modularity") {
        out.part = ncb::greedy_modularity(g);
    } else {
        throw ncb::config_error("unknown algorithm: " + algorithm);
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

void emit_trace(std::ostream& out, const ncb::graph& g, const std::vector<ncb::detect_event>& trace) {
    for (const auto& ev : trace) {
        out << ncb::to_string(ev.kind) << " node=" << g.label(ev.node) << " community=" << ev.community;
        if (ev.kind == ncb::event_kind::accept || ev.kind == ncb::event_kind::reject ||
            ev.kind == ncb::event_kind::leftover)
            out << " gravitation=" << ev.grav.str() << " eps=" << ev.eps.str();
        out << "\n";
    }
}

void write_partition_file(const std::string& path, const std::string& format, const ncb::graph& g,
                          const ncb::partition& p) {
    std::ofstream out(path);
    if (!out) throw ncb::error("cannot open output file: " + path);
    if (format == "json") ncb::write_partition_json(out, g, p);
    else ncb::write_partition_csv(out, g, p);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

int cmd_detect(const run_config& cfg) {
    ncb::loaded_graph loaded = load_input(cfg.input, cfg.format);
    const ncb::graph& g = loaded.g;
    if (loaded.stats.self_loops || loaded.stats.duplicates)
        std::cerr << "warning: dropped " << loaded.stats.self_loops << " self-loops, "
                  << loaded.stats.duplicates << " duplicate edges\n";
    std::optional<ncb::partition> truth;
    if (!cfg.ground_truth.empty()) truth = load_truth(cfg.ground_truth, g);

    timed_run run = run_algorithm(g, cfg.algorithm, cfg.seed);
    if (cfg.trace && !run.trace.empty()) emit_trace(std::cerr, g, run.trace);

    ncb::metric_report report =
        ncb::evaluate(g, run.part, truth ? &*truth : nullptr, cfg.algorithm, cfg.input, run.seconds);
    std::cout << "algorithm=" << report.algorithm << " nodes=" << g.n() << " edges=" << g.m()
              << " communities=" << report.communities << " modularity=" << format_double(report.modularity);
    if (report.nmi) std::cout << " nmi=" << format_double(*report.nmi);
    std::cout << " time_s=" << format_double(report.seconds) << "\n";

    if (!cfg.output.empty()) write_partition_file(cfg.output, cfg.output_format, g, run.part);
    return 0;
}

struct compare_row {
    std::string algorithm;
    std::string source;       // run | published
    std::string modularity;   // may carry a mean[min,max] band
    std::string nmi;
    std::string communities;
    std::string time_s;
};

// RFC-4180 quoting for fields carrying commas (the LPA mean[min,max] band).
std::string csv_field(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

int cmd_compare(const run_config& cfg, bool single_algorithm) {
    if (cfg.repeats == 0) throw ncb::config_error("--repeats must be positive");
    ncb::loaded_graph loaded = load_input(cfg.input, cfg.format);
    const ncb::graph& g = loaded.g;
    std::optional<ncb::partition> truth;
    if (!cfg.ground_truth.empty()) truth = load_truth(cfg.ground_truth, g);
    const ncb::partition* truth_ptr = truth ? &*truth : nullptr;

    std::vector<std::string> algorithms = {"ncb", "greedy-modularity", "lpa"};
    if (single_algorithm) algorithms = {cfg.algorithm};

    std::vector<compare_row> rows;
    for (const std::string& alg : algorithms) {
        if (alg == "lpa") continue;  // aggregated below
        timed_run run = run_algorithm(g, alg, cfg.seed);
        ncb::metric_report r = ncb::evaluate(g, run.part, truth_ptr, alg, cfg.input, run.seconds);
        rows.push_back({r.algorithm, "run", format_double(r.modularity),
                        r.nmi ? format_double(*r.nmi) : "", std::to_string(r.communities),
                        format_double(r.seconds)});
    }
    if (std::find(algorithms.begin(), algorithms.end(), "lpa") != algorithms.end()) {
        // LPA: aggregate over `repeats` seeded runs, reported mean[min,max]
        double q_sum = 0, q_min = 0, q_max = 0, nmi_sum = 0, t_sum = 0, comm_sum = 0;
        for (std::uint32_t i = 0; i < cfg.repeats; ++i) {
            timed_run run = run_algorithm(g, "lpa", cfg.seed + i);
            ncb::metric_report r = ncb::evaluate(g, run.part, truth_ptr, "lpa", cfg.input, run.seconds);
            if (i == 0) q_min = q_max = r.modularity;
            q_min = std::min(q_min, r.modularity);
            q_max = std::max(q_max, r.modularity);
            q_sum += r.modularity;
            if (r.nmi) nmi_sum += *r.nmi;
            t_sum += r.seconds;
            comm_sum += static_cast<double>(r.communities);
        }
        double k = cfg.repeats;
        char q_cell[128];
        std::snprintf(q_cell, sizeof q_cell, "%.6f[%.6f,%.6f]", q_sum / k, q_min, q_max);
        char comm_cell[32];
        std::snprintf(comm_cell, sizeof comm_cell, "%g", comm_sum / k);
        rows.push_back({"lpa", "run", q_cell, truth_ptr ? format_double(nmi_sum / k) : "", comm_cell,
                        format_double(t_sum / k)});
    }
    if (auto ds = ncb::dataset_from_path(cfg.input); ds && !single_algorithm) {
        for (const auto& p : ncb::published_small_rows(*ds)) {
            std::string q = format_double(p.modularity);
            if (p.has_band) {
                char cell[128];
                std::snprintf(cell, sizeof cell, "%.6f[%.6f,%.6f]", p.modularity, p.band_lo, p.band_hi);
                q = cell;
            }
            rows.push_back({p.algorithm, "published", q, "", "", ""});
        }
        for (const auto& p : ncb::published_large_rows(*ds))
            rows.push_back({p.algorithm, "published", format_double(p.modularity), "",
                            std::to_string(p.communities), format_double(p.seconds)});
    }

    std::ostringstream csv;
    csv << "algorithm,source,modularity,nmi,communities,time_s\n";
    for (const auto& r : rows)
        csv << r.algorithm << "," << r.source << "," << csv_field(r.modularity) << "," << r.nmi << ","
            << r.communities << "," << r.time_s << "\n";
    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output);
        if (!out) throw ncb::error("cannot open output file: " + cfg.output);
        out << csv.str();
    }
    std::cout << csv.str();
    return 0;
}

int cmd_profile(const run_config& cfg) {
    ncb::loaded_graph loaded = load_input(cfg.input, cfg.format);
    std::ostringstream csv;
    csv << "node,degree,conductance\n";
    for (const auto& row : ncb::profile(loaded.g)) {
        csv << loaded.g.label(row.node) << "," << row.degree << ",";
        if (row.conductance) csv << format_double(row.conductance->value());
        csv << "\n";
    }
    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output);
        if (!out) throw ncb::error("cannot open output file: " + cfg.output);
        out << csv.str();
    } else {
        std::cout << csv.str();
    }
    return 0;
}

int cmd_bench(std::uint64_t min_edges, std::uint64_t max_edges, std::uint32_t repeats, std::uint64_t seed) {
    if (min_edges == 0 || max_edges < min_edges) throw ncb::config_error("bench: need 0 < min-edges <= max-edges");
    std::vector<std::uint64_t> targets;
    for (std::uint64_t e = min_edges; e <= max_edges; e *= 2) targets.push_back(e);
    ncb::bench_result res = ncb::run_bench(targets, repeats, seed);
    std::cout << "target_e,nodes,edges,seconds,ratio\n";
    for (std::size_t i = 0; i < res.rows.size(); ++i) {
        const auto& row = res.rows[i];
        std::cout << row.target_edges << "," << row.nodes << "," << row.edges << ","
                  << format_double(row.seconds) << ",";
        if (i > 0) std::cout << format_double(res.ratios[i - 1]);
        std::cout << "\n";
    }
    std::cout << "mean_doubling_ratio=" << format_double(res.mean_ratio) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"NCB community detection: conductance-seeded, gravitation-driven community growth"};
    app.require_subcommand(1);

    run_config cfg;
    std::uint64_t bench_min = 12500, bench_max = 100000, bench_seed = 1;
    std::uint32_t bench_repeats = 3;

    auto add_io_flags = [&](CLI::App* cmd, bool with_algorithm) {
        cmd->add_option("--input", cfg.input, "input graph file")->required();
        cmd->add_option("--format", cfg.format, "input format: edge-list | gml (default: by extension)")
            ->check(CLI::IsMember({"auto", "edge-list", "gml"}));
        if (with_algorithm) {
            cmd->add_option("--algorithm", cfg.algorithm, "ncb | lpa | greedy-modularity")
                ->check(CLI::IsMember({"ncb", "lpa", "greedy-modularity"}));
            cmd->add_option("--seed", cfg.seed, "RNG seed (lpa)");
            cmd->add_option("--ground-truth", cfg.ground_truth, "partition CSV with the reference communities");
        }
        cmd->add_option("--output", cfg.output, "write results to this file");
    };

    CLI::App* detect_cmd = app.add_subcommand("detect", "run one algorithm and report metrics");
    add_io_flags(detect_cmd, true);
    detect_cmd->add_option("--output-format", cfg.output_format, "partition file format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    detect_cmd->add_flag("--trace", cfg.trace, "emit accept/reject event log to stderr");

    CLI::App* compare_cmd = app.add_subcommand("compare", "run all algorithms plus published reference rows");
    add_io_flags(compare_cmd, true);
    compare_cmd->add_option("--repeats", cfg.repeats, "LPA repeat count (default 5)");

    CLI::App* profile_cmd = app.add_subcommand("profile", "per-node degree/conductance CSV");
    add_io_flags(profile_cmd, false);

    CLI::App* bench_cmd = app.add_subcommand("bench", "detect runtime scaling over planted partitions");
    bench_cmd->add_option("--min-edges", bench_min, "smallest edge target (default 12500)");
    bench_cmd->add_option("--max-edges", bench_max, "largest edge target (default 100000)");
    bench_cmd->add_option("--repeats", bench_repeats, "timed repetitions per size (default 3)")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_seed, "generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;  // help/version exit 0
    }

    try {
        if (detect_cmd->parsed()) return cmd_detect(cfg);
        if (compare_cmd->parsed()) return cmd_compare(cfg, compare_cmd->count("--algorithm") > 0);
        if (profile_cmd->parsed()) return cmd_profile(cfg);
        if (bench_cmd->parsed()) return cmd_bench(bench_min, bench_max, bench_repeats, bench_seed);
    } catch (const ncb::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ncb::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ncb::empty_graph_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
