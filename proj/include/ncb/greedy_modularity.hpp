#pragma once

#include <cstdint>
#include <queue>
#include <unordered_map>
#include <vector>

#include "ncb/community.hpp"
#include "ncb/graph.hpp"

namespace ncb {

namespace detail {

// ΔQ for merging communities i, j with e_ij edges between them:
//   ΔQ = e_ij/m − d_i·d_j/(2m²) = (2m·e_ij − d_i·d_j) / (2m²)
// The positive shared denominator lets the integer numerator order merges
// exactly, with no floating-point ties.
inline std::int64_t merge_gain_num(std::uint64_t m, std::uint64_t e_ij, std::uint64_t d_i, std::uint64_t d_j) {
    return static_cast<std::int64_t>(2 * m * e_ij) - static_cast<std::int64_t>(d_i * d_j);
}

}  // namespace detail

// Agglomerative greedy modularity (CNM-style): start from singletons,
// repeatedly merge the connected pair with the largest ΔQ (ties:
// lexicographically smallest community-id pair), stop when the best
// ΔQ ≤ 0. Q increases strictly along the merge sequence, so the stopping
// state is the peak. Uses a lazy max-heap with version stamps.
inline partition greedy_modularity(const graph& g) {
    if (g.n() == 0) throw domain_error("greedy_modularity: empty graph");
    const std::uint64_t m = g.m();
    if (m == 0) {
        std::vector<std::int64_t> own(g.n());
        for (node_id v = 0; v < g.n(); ++v) own[v] = v;
        return partition::from_assignment(g, own);
    }

    std::size_t n = g.n();
    std::vector<std::unordered_map<std::uint32_t, std::uint64_t>> between(n);  // community → cross-edge count
    std::vector<std::uint64_t> dsum(n);
    std::vector<std::uint32_t> version(n, 0);
    std::vector<char> alive(n, 1);
    std::vector<std::uint32_t> parent(n);  // union-find over merged ids
    for (std::size_t v = 0; v < n; ++v) {
        parent[v] = static_cast<std::uint32_t>(v);
        dsum[v] = g.degree(static_cast<node_id>(v));
        for (node_id w : g.neighbors(static_cast<node_id>(v)))
            if (w > v) between[v][w] = 1;
    }
    for (std::size_t v = 0; v < n; ++v)
        for (auto [w, e] : between[v]) between[w][static_cast<std::uint32_t>(v)] = e;

    struct merge_entry {
        std::int64_t gain_num;
        std::uint32_t a, b;       // a < b
        std::uint32_t va, vb;     // versions at push time
    };
    struct worse {
        bool operator()(const merge_entry& x, const merge_entry& y) const {
            if (x.gain_num != y.gain_num) return x.gain_num < y.gain_num;
            if (x.a != y.a) return x.a > y.a;
            return x.b > y.b;
        }
    };
    std::priority_queue<merge_entry, std::vector<merge_entry>, worse> heap;
    auto push_pair = [&](std::uint32_t a, std::uint32_t b) {
        if (a > b) std::swap(a, b);
        heap.push({detail::merge_gain_num(m, between[a].at(b), dsum[a], dsum[b]), a, b, version[a], version[b]});
    };
    for (std::size_t v = 0; v < n; ++v)
        for (auto [w, e] : between[v])
            if (w > v) push_pair(static_cast<std::uint32_t>(v), w);

    auto find_root = [&](std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    while (!heap.empty()) {
        merge_entry top = heap.top();
        heap.pop();
        if (!alive[top.a] || !alive[top.b] || version[top.a] != top.va || version[top.b] != top.vb)
            continue;  // stale
        if (top.gain_num <= 0) break;  // peak reached

        std::uint32_t s = top.a, t = top.b;  // merged community keeps the smaller id
        between[s].erase(t);
        between[t].erase(s);
        for (auto [x, e] : between[t]) {
            between[x].erase(t);
            between[s][x] += e;
            between[x][s] = between[s][x];
        }
        between[t].clear();
        dsum[s] += dsum[t];
        alive[t] = 0;
        parent[t] = s;
        ++version[s];
        ++version[t];
        for (auto [x, e] : between[s]) push_pair(s, x);
    }

    std::vector<std::int64_t> labels(n);
    for (std::size_t v = 0; v < n; ++v) labels[v] = find_root(static_cast<std::uint32_t>(v));
    return partition::from_assignment(g, labels);
}

}  // namespace ncb
