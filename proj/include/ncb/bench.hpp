#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <vector>

#include "ncb/detect.hpp"
#include "ncb/error.hpp"
#include "ncb/generate.hpp"

namespace ncb {

struct bench_row {
    std::uint64_t target_edges = 0;
    std::uint64_t nodes = 0;
    std::uint64_t edges = 0;   // actual edge count of the generated graph
    double seconds = 0;        // best of `repeats` timed detect runs
};

struct bench_result {
    std::vector<bench_row> rows;
    std::vector<double> ratios;  // consecutive time ratios, one per doubling
    double mean_ratio = 0;
};

namespace detail {

// Planted-partition dimensions hitting an expected edge count: fixed
// block size and p_in, block count scaled to the target, p_out solved so
// cross edges contribute ~20% of the total.
struct bench_model {
    std::uint32_t blocks;
    std::uint32_t block_size = 64;
    double p_in = 0.25;
    double p_out;
};

inline bench_model solve_bench_model(std::uint64_t target_edges) {
    bench_model m{};
    const double within_per_block = 64.0 * 63.0 / 2.0 * m.p_in;  // ≈ 504
    m.blocks = static_cast<std::uint32_t>(std::max(2.0, std::round(0.8 * static_cast<double>(target_edges) / within_per_block)));
    const double n = static_cast<double>(m.blocks) * m.block_size;
    const double cross_pairs = n * (n - 1) / 2.0 - m.blocks * (64.0 * 63.0 / 2.0);
    m.p_out = 0.2 * static_cast<double>(target_edges) / cross_pairs;
    return m;
}

}  // namespace detail

// Times detect across planted-partition graphs of doubling edge counts.
// Generation is excluded from timing; each size is timed `repeats` times
// and the fastest run is kept (noise rejection).
inline bench_result run_bench(const std::vector<std::uint64_t>& edge_targets, std::uint32_t repeats,
                              std::uint64_t seed) {
    if (repeats == 0) throw config_error("bench: repeats must be positive");
    if (edge_targets.empty()) throw config_error("bench: no edge targets");
    bench_result out;
    for (std::uint64_t target : edge_targets) {
        detail::bench_model model = detail::solve_bench_model(target);
        graph g = planted_partition(model.blocks, model.block_size, model.p_in, model.p_out, seed);
        double best = 0;
        for (std::uint32_t r = 0; r < repeats; ++r) {
            auto start = std::chrono::steady_clock::now();
            detect_result res = detect(g);
            auto stop = std::chrono::steady_clock::now();
            if (!res.part.total()) throw error("bench: detect returned a non-total partition");
            double secs = std::chrono::duration<double>(stop - start).count();
            if (r == 0 || secs < best) best = secs;
        }
        out.rows.push_back({target, g.n(), g.m(), best});
    }
    for (std::size_t i = 1; i < out.rows.size(); ++i)
        out.ratios.push_back(out.rows[i].seconds / out.rows[i - 1].seconds);
    if (!out.ratios.empty()) {
        double sum = 0;
        for (double r : out.ratios) sum += r;
        out.mean_ratio = sum / static_cast<double>(out.ratios.size());
    }
    return out;
}

// The doubling ladder used by the scaling check: ~10⁴ → ~10⁵ edges.
inline std::vector<std::uint64_t> default_bench_targets() {
    return {12500, 25000, 50000, 100000};
}

}  // namespace ncb
