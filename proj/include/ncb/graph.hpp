#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncb/error.hpp"

namespace ncb {

using node_id = std::uint32_t;

// Immutable undirected simple graph: dense node ids, sorted adjacency,
// external labels preserved in first-seen order. Safe to share across
// concurrent readers once built.
class graph {
public:
    graph() = default;

    std::size_t n() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t m() const { return m_; }
    std::uint64_t volume() const { return 2 * static_cast<std::uint64_t>(m_); }

    std::uint32_t degree(node_id v) const {
        check_node(v);
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }

    // Open neighborhood N1(v): all nodes at distance exactly 1, sorted.
    std::span<const node_id> neighbors(node_id v) const {
        check_node(v);
        return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }

    const std::string& label(node_id v) const {
        check_node(v);
        return labels_[v];
    }

    // Returns n() when the label is unknown.
    node_id find_label(const std::string& label) const {
        auto it = label_ids_.find(label);
        return it == label_ids_.end() ? static_cast<node_id>(n()) : it->second;
    }

    bool has_edge(node_id u, node_id v) const {
        auto nbrs = neighbors(u);
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    // Builds from deduplicated undirected edges over dense ids.
    static graph from_edges(std::size_t n, std::vector<std::pair<node_id, node_id>> edges,
                            std::vector<std::string> labels) {
        graph g;
        g.m_ = edges.size();
        g.labels_ = std::move(labels);
        for (node_id v = 0; v < g.labels_.size(); ++v) g.label_ids_.emplace(g.labels_[v], v);
        std::vector<std::uint32_t> deg(n, 0);
        for (auto [u, v] : edges) {
            ++deg[u];
            ++deg[v];
        }
        g.offsets_.assign(n + 1, 0);
        for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
        g.neighbors_.resize(2 * edges.size());
        std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
        for (auto [u, v] : edges) {
            g.neighbors_[cursor[u]++] = v;
            g.neighbors_[cursor[v]++] = u;
        }
        for (std::size_t v = 0; v < n; ++v)
            std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                      g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
        return g;
    }

private:
    void check_node(node_id v) const {
        if (v >= n()) throw domain_error("node id " + std::to_string(v) + " out of range (n=" + std::to_string(n()) + ")");
    }

    std::size_t m_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<node_id> neighbors_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, node_id> label_ids_;
};

// Accumulates labeled endpoint pairs, then normalizes: labels become dense
// ids in first-seen order; self-loops and duplicate/reverse edges are
// dropped with counts (directed inputs symmetrize to a single edge).
class graph_builder {
public:
    struct load_stats {
        std::size_t self_loops = 0;
        std::size_t duplicates = 0;
    };

    void add(const std::string& a, const std::string& b) {
        node_id u = intern(a);  // sequenced: first-seen order defines ids
        node_id v = intern(b);
        raw_.emplace_back(u, v);
    }

    // Registers a label without requiring an edge (GML node blocks).
    node_id intern(const std::string& label) {
        auto it = ids_.find(label);
        if (it != ids_.end()) return it->second;
        node_id id = static_cast<node_id>(labels_.size());
        ids_.emplace(label, id);
        labels_.push_back(label);
        return id;
    }

    bool knows(const std::string& label) const { return ids_.count(label) != 0; }

    graph build(load_stats* stats = nullptr) {
        load_stats local;
        std::vector<std::pair<node_id, node_id>> edges;
        edges.reserve(raw_.size());
        for (auto [u, v] : raw_) {
            if (u == v) {
                ++local.self_loops;
                continue;
            }
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(edges.begin(), edges.end());
        auto last = std::unique(edges.begin(), edges.end());
        local.duplicates = static_cast<std::size_t>(edges.end() - last);
        edges.erase(last, edges.end());
        if (stats) *stats = local;
        if (edges.empty()) throw empty_graph_error("graph has no edges after filtering");
        return graph::from_edges(labels_.size(), std::move(edges), labels_);
    }

private:
    std::vector<std::pair<node_id, node_id>> raw_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, node_id> ids_;
};

// Open neighborhood as a materialized set (Definition 1, N1(v)).
inline std::vector<node_id> neighborhood(const graph& g, node_id v) {
    auto nbrs = g.neighbors(v);
    return {nbrs.begin(), nbrs.end()};
}

// N1(C): nodes outside C adjacent to at least one member, sorted.
inline std::vector<node_id> community_neighborhood(const graph& g, std::span<const node_id> members) {
    if (members.empty()) throw domain_error("community_neighborhood: empty node set");
    std::vector<char> inside(g.n(), 0);
    for (node_id v : members) {
        if (v >= g.n()) throw domain_error("community_neighborhood: node id out of range");
        inside[v] = 1;
    }
    std::vector<node_id> frontier;
    for (node_id v : members)
        for (node_id w : g.neighbors(v))
            if (!inside[w]) {
                inside[w] = 1;  // reuse as "already collected"
                frontier.push_back(w);
            }
    std::sort(frontier.begin(), frontier.end());
    return frontier;
}

}  // namespace ncb
