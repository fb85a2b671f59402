#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "ncb/community.hpp"
#include "ncb/graph.hpp"
#include "ncb/rng.hpp"

namespace ncb {

// Asynchronous label propagation. Every node starts with its own label;
// each iteration visits nodes in a freshly shuffled order and each node
// adopts the most frequent label among its neighbors, ties broken
// uniformly at random from the tied set. Stops when a full pass changes
// nothing or after max_iters. Identical seed + graph ⇒ identical result.
inline partition lpa(const graph& g, std::uint64_t seed, std::uint32_t max_iters = 100) {
    if (g.n() == 0) throw domain_error("lpa: empty graph");
    std::vector<std::int64_t> label(g.n());
    std::iota(label.begin(), label.end(), 0);
    std::vector<node_id> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    fast_rng rng(seed);

    std::vector<std::uint32_t> count(g.n(), 0);
    std::vector<std::int64_t> touched;
    std::vector<std::int64_t> tied;
    for (std::uint32_t iter = 0; iter < max_iters; ++iter) {
        shuffle(order, rng);
        bool changed = false;
        for (node_id v : order) {
            if (g.degree(v) == 0) continue;
            touched.clear();
            std::uint32_t best = 0;
            for (node_id w : g.neighbors(v)) {
                std::int64_t l = label[w];
                if (count[l]++ == 0) touched.push_back(l);
                if (count[l] > best) best = count[l];
            }
            tied.clear();
            for (std::int64_t l : touched) {
                if (count[l] == best) tied.push_back(l);
                count[l] = 0;
            }
            std::int64_t pick = tied.size() == 1 ? tied.front()
                                                 : tied[static_cast<std::size_t>(rng.bounded(tied.size()))];
            if (pick != label[v]) {
                label[v] = pick;
                changed = true;
            }
        }
        if (!changed) break;
    }
    return partition::from_assignment(g, label);
}

}  // namespace ncb
