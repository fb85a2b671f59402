#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ncb/error.hpp"
#include "ncb/graph.hpp"
#include "ncb/rng.hpp"

namespace ncb {

namespace detail {

// Skip-sampling over a linear space of candidate pairs: every index is
// included independently with probability p, visiting only the hits
// (geometric jumps), so generation is O(edges) not O(pairs).
template <typename Emit>
void bernoulli_indices(std::uint64_t space, double p, fast_rng& rng, Emit&& emit) {
    if (space == 0 || p <= 0.0) return;
    if (p >= 1.0) {
        for (std::uint64_t i = 0; i < space; ++i) emit(i);
        return;
    }
    const double log1mp = std::log1p(-p);
    double cursor = -1;
    for (;;) {
        double u = rng.uniform();
        if (u <= 0) u = 0x1.0p-53;
        cursor += 1 + std::floor(std::log(u) / log1mp);
        if (cursor >= static_cast<double>(space)) return;
        emit(static_cast<std::uint64_t>(cursor));
    }
}

// Maps a linear index over the strictly-upper-triangular pair space of
// {0..n-1} to the pair (i, j), i < j, rows in ascending i.
inline std::pair<std::uint64_t, std::uint64_t> index_to_pair(std::uint64_t idx, std::uint64_t n) {
    // row i holds (n-1-i) pairs; solve the row by the quadratic formula
    double nd = static_cast<double>(n);
    double i = std::floor(nd - 0.5 - std::sqrt((nd - 0.5) * (nd - 0.5) - 2.0 * static_cast<double>(idx)));
    auto row = static_cast<std::uint64_t>(i);
    // guard against floating-point edge error
    auto row_start = [&](std::uint64_t r) { return r * (n - 1) - r * (r - 1) / 2; };
    while (row > 0 && row_start(row) > idx) --row;
    while (row_start(row + 1) <= idx) ++row;
    std::uint64_t j = row + 1 + (idx - row_start(row));
    return {row, j};
}

inline graph from_integer_pairs(std::uint64_t n, std::vector<std::pair<node_id, node_id>> edges) {
    std::vector<std::string> labels(n);
    for (std::uint64_t v = 0; v < n; ++v) labels[v] = std::to_string(v);
    return graph::from_edges(n, std::move(edges), std::move(labels));
}

}  // namespace detail

// Erdős–Rényi G(n, p); deterministic for a fixed seed.
inline graph gnp(std::uint64_t n, double p, std::uint64_t seed) {
    if (n == 0) throw config_error("gnp: n must be positive");
    if (p < 0.0 || p > 1.0) throw config_error("gnp: p outside [0,1]");
    fast_rng rng(seed);
    std::vector<std::pair<node_id, node_id>> edges;
    detail::bernoulli_indices(n * (n - 1) / 2, p, rng, [&](std::uint64_t idx) {
        auto [i, j] = detail::index_to_pair(idx, n);
        edges.emplace_back(static_cast<node_id>(i), static_cast<node_id>(j));
    });
    return detail::from_integer_pairs(n, std::move(edges));
}

// Planted partition: `blocks` groups of `block_size` nodes; within-block
// pairs appear with probability p_in, cross-block with p_out. Node v
// belongs to block v / block_size. Deterministic for a fixed seed.
inline graph planted_partition(std::uint32_t blocks, std::uint32_t block_size, double p_in, double p_out,
                               std::uint64_t seed) {
    if (blocks == 0 || block_size == 0) throw config_error("planted_partition: empty model");
    if (p_in < 0 || p_in > 1 || p_out < 0 || p_out > 1) throw config_error("planted_partition: probabilities outside [0,1]");
    const std::uint64_t n = static_cast<std::uint64_t>(blocks) * block_size;
    fast_rng rng(seed);
    std::vector<std::pair<node_id, node_id>> edges;
    const std::uint64_t within_space = static_cast<std::uint64_t>(block_size) * (block_size - 1) / 2;
    for (std::uint32_t b = 0; b < blocks; ++b) {
        const std::uint64_t base = static_cast<std::uint64_t>(b) * block_size;
        detail::bernoulli_indices(within_space, p_in, rng, [&](std::uint64_t idx) {
            auto [i, j] = detail::index_to_pair(idx, block_size);
            edges.emplace_back(static_cast<node_id>(base + i), static_cast<node_id>(base + j));
        });
    }
    // Cross edges: sample the full pair space at p_out, discard same-block
    // hits (their membership was already decided by the p_in pass).
    detail::bernoulli_indices(n * (n - 1) / 2, p_out, rng, [&](std::uint64_t idx) {
        auto [i, j] = detail::index_to_pair(idx, n);
        if (i / block_size != j / block_size)
            edges.emplace_back(static_cast<node_id>(i), static_cast<node_id>(j));
    });
    return detail::from_integer_pairs(n, std::move(edges));
}

// Ground-truth partition of a planted-partition graph (block membership).
inline std::vector<std::int64_t> planted_labels(std::uint32_t blocks, std::uint32_t block_size) {
    std::vector<std::int64_t> labels(static_cast<std::size_t>(blocks) * block_size);
    for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = static_cast<std::int64_t>(v / block_size);
    return labels;
}

}  // namespace ncb
