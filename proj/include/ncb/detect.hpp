#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ncb/community.hpp"
#include "ncb/conductance.hpp"
#include "ncb/graph.hpp"

namespace ncb {

enum class event_kind : std::uint8_t {
    seed,      // node founds a community
    absorb,    // key node folded into an earlier seed's community at init
    accept,    // expansion: capture factor > 0
    reject,    // expansion: capture factor ≤ 0, (node, community) barred
    leftover,  // post-expansion gravitation assignment (ε ignored)
    promote,   // unreachable leftover promoted to a fresh community
    isolated,  // degree-0 node becomes a singleton community
};

struct detect_event {
    event_kind kind;
    node_id node = 0;
    std::uint32_t community = 0;
    ratio grav{0, 1};          // gravitation at decision time (accept/reject/leftover)
    signed_ratio eps{0, 1};    // capture factor (accept/reject)
};

inline const char* to_string(event_kind k) {
    switch (k) {
        case event_kind::seed: return "seed";
        case event_kind::absorb: return "absorb";
        case event_kind::accept: return "accept";
        case event_kind::reject: return "reject";
        case event_kind::leftover: return "leftover";
        case event_kind::promote: return "promote";
        case event_kind::isolated: return "isolated";
    }
    return "?";
}

// Frontier entries ordered by (gravitation desc, node asc, community asc).
// Holds one live entry per (unassigned node, adjacent community) pair with
// its current edge count; stale entries are skipped at pop time.
class candidate_index {
public:
    struct entry {
        std::uint64_t edges;   // e_C^u
        std::uint32_t degree;  // d_u
        node_id node;
        std::uint32_t community;
    };

    struct order {
        bool operator()(const entry& a, const entry& b) const {
            using u128 = unsigned __int128;
            u128 l = static_cast<u128>(a.edges) * b.degree;
            u128 r = static_cast<u128>(b.edges) * a.degree;
            if (l != r) return l > r;
            if (a.node != b.node) return a.node < b.node;
            return a.community < b.community;
        }
    };

    explicit candidate_index(const graph& g) : g_(&g) {}

    bool empty() const { return entries_.empty(); }
    std::size_t live_pairs() const { return counts_.size(); }

    // Raises the edge count of (u, c) by one, reordering its entry.
    void bump(node_id u, std::uint32_t c) {
        std::uint64_t key = pair_key(u, c);
        auto it = counts_.find(key);
        std::uint64_t e = 1;
        if (it != counts_.end()) {
            entries_.erase(entry{it->second, g_->degree(u), u, c});
            e = ++it->second;
        } else {
            counts_.emplace(key, 1);
        }
        entries_.insert(entry{e, g_->degree(u), u, c});
    }

    // Pops the best entry; the caller validates it against current state.
    entry pop() {
        entry best = *entries_.begin();
        entries_.erase(entries_.begin());
        counts_.erase(pair_key(best.node, best.community));
        return best;
    }

    // Forgets every entry of an (already assigned) node lazily: entries are
    // dropped as they surface. Explicit per-pair removal, used when the
    // caller knows the pair is dead.
    void drop(node_id u, std::uint32_t c) {
        auto it = counts_.find(pair_key(u, c));
        if (it == counts_.end()) return;
        entries_.erase(entry{it->second, g_->degree(u), u, c});
        counts_.erase(it);
    }

private:
    static std::uint64_t pair_key(node_id u, std::uint32_t c) {
        return (static_cast<std::uint64_t>(u) << 32) | c;
    }

    const graph* g_;
    std::set<entry, order> entries_;
    std::unordered_map<std::uint64_t, std::uint64_t> counts_;
};

struct detect_result {
    partition part;
    std::vector<detect_event> trace;
    bool fallback_seed = false;
};

namespace detail {

// Sorted closed neighborhood {v} ∪ N1(v).
inline std::vector<node_id> closed_neighborhood(const graph& g, node_id v) {
    auto nbrs = g.neighbors(v);
    std::vector<node_id> closed;
    closed.reserve(nbrs.size() + 1);
    auto insert_at = std::lower_bound(nbrs.begin(), nbrs.end(), v);
    closed.insert(closed.end(), nbrs.begin(), insert_at);
    closed.push_back(v);
    closed.insert(closed.end(), insert_at, nbrs.end());
    return closed;
}

inline std::size_t sorted_overlap(std::span<const node_id> a, std::span<const node_id> b) {
    std::size_t i = 0, j = 0, hits = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (b[j] < a[i]) ++j;
        else { ++hits; ++i; ++j; }
    }
    return hits;
}

inline std::uint64_t pair_key(node_id u, std::uint32_t c) {
    return (static_cast<std::uint64_t>(u) << 32) | c;
}

// Priority loop shared by expand and assign_leftovers: pop the globally
// best (gravitation, node, community) entry; accept or reject; on accept,
// refresh the node's unassigned neighbors' entries toward that community.
// `enforce_capture` gates acceptance on ε > 0 with permanent per-pair
// rejection; leftovers run the same loop with the gate off.
inline void grow(const graph& g, partition& p, candidate_index& index, bool enforce_capture,
                 std::vector<detect_event>& trace) {
    std::unordered_set<std::uint64_t> rejected;
    while (!index.empty()) {
        auto top = index.pop();
        if (p.assigned(top.node)) continue;  // stale entry
        const community& com = p.at(top.community);
        ratio grav{top.edges, top.degree};
        // ε > 0  ⇔  e_C^v · d(C) > e_C^in · d_v  (cross-multiplied)
        using u128 = unsigned __int128;
        bool captures = static_cast<u128>(top.edges) * com.degree_sum >
                        static_cast<u128>(com.internal_edges) * top.degree;
        signed_ratio eps{
            2 * (static_cast<std::int64_t>(top.edges * com.degree_sum) -
                 static_cast<std::int64_t>(com.internal_edges * top.degree)),
            com.degree_sum * (com.degree_sum + top.degree)};
        if (enforce_capture && !captures) {
            rejected.insert(pair_key(top.node, top.community));
            trace.push_back({event_kind::reject, top.node, top.community, grav, eps});
            continue;
        }
        p.assign(g, top.node, top.community);
        trace.push_back({enforce_capture ? event_kind::accept : event_kind::leftover,
                         top.node, top.community, grav, eps});
        for (node_id w : g.neighbors(top.node)) {
            if (p.assigned(w)) continue;
            if (enforce_capture && rejected.count(pair_key(w, top.community))) continue;
            index.bump(w, top.community);
        }
    }
}

// Rebuilds the frontier index from the current partition state.
inline candidate_index frontier_index(const graph& g, const partition& p) {
    candidate_index index(g);
    for (node_id v = 0; v < g.n(); ++v) {
        if (p.assigned(v)) continue;
        for (node_id w : g.neighbors(v)) {
            std::int64_t c = p.community_of(w);
            if (c != kUnassigned) index.bump(v, static_cast<std::uint32_t>(c));
        }
    }
    return index;
}

}  // namespace detail

// Initial stage. Seeds arrive ascending by (conductance, id); each founds
// the singleton community {seed} unless the majority of its closed
// neighborhood already lies inside an earlier key node's closed
// neighborhood — such a key node is absorbed (founds nothing; the regular
// growth rules place it later). Returns the partition plus the populated
// frontier index.
inline std::pair<partition, candidate_index> init_communities(const graph& g, std::span<const seed_record> seeds,
                                                              std::vector<detect_event>& trace) {
    if (seeds.empty()) throw domain_error("init_communities: empty seed list");
    partition p(g.n());
    std::vector<std::vector<node_id>> kept_neighborhoods;
    std::vector<std::uint32_t> kept_communities;
    for (const seed_record& s : seeds) {
        if (p.assigned(s.node)) continue;
        auto closed = detail::closed_neighborhood(g, s.node);
        bool absorbed = false;
        for (std::size_t k = 0; k < kept_neighborhoods.size(); ++k) {
            if (2 * detail::sorted_overlap(closed, kept_neighborhoods[k]) >= closed.size()) {
                trace.push_back({event_kind::absorb, s.node, kept_communities[k], {0, 1}, {0, 1}});
                absorbed = true;
                break;
            }
        }
        if (absorbed) continue;
        std::uint32_t c = p.add_community(g, s.node);
        trace.push_back({event_kind::seed, s.node, c, {0, 1}, {0, 1}});
        kept_neighborhoods.push_back(std::move(closed));
        kept_communities.push_back(c);
    }
    candidate_index index = detail::frontier_index(g, p);
    return {std::move(p), std::move(index)};
}

// Extension/update stage: gravitation-ordered growth gated on ε > 0.
inline void expand(const graph& g, partition& p, candidate_index& index, std::vector<detect_event>& trace) {
    detail::grow(g, p, index, /*enforce_capture=*/true, trace);
}

// Leftover stage: the same priority loop with the capture-factor gate off,
// so every node reachable from a community joins its best-gravitation
// community (ties: lowest community id). Unreachable degree>0 leftovers
// are promoted to fresh communities; degree-0 nodes become singletons.
inline void assign_leftovers(const graph& g, partition& p, std::vector<detect_event>& trace) {
    for (;;) {
        candidate_index index = detail::frontier_index(g, p);
        detail::grow(g, p, index, /*enforce_capture=*/false, trace);
        node_id pending = static_cast<node_id>(g.n());
        for (node_id v = 0; v < g.n(); ++v)
            if (!p.assigned(v) && g.degree(v) > 0) {
                pending = v;
                break;
            }
        if (pending == g.n()) break;
        std::uint32_t c = p.add_community(g, pending);
        trace.push_back({event_kind::promote, pending, c, {0, 1}, {0, 1}});
    }
    for (node_id v = 0; v < g.n(); ++v)
        if (!p.assigned(v)) {
            std::uint32_t c = p.add_community(g, v);
            trace.push_back({event_kind::isolated, v, c, {0, 1}, {0, 1}});
        }
}

// Full pipeline: find_seeds → init_communities → expand → assign_leftovers.
// Deterministic for a fixed input; the result is total and disjoint.
inline detect_result detect(const graph& g) {
    if (g.n() == 0) throw domain_error("detect: empty graph");
    detect_result out;
    seed_scan scan = find_seeds(g);
    out.fallback_seed = scan.fallback;
    if (scan.seeds.empty()) {  // edgeless graph: every node is its own community
        partition p(g.n());
        assign_leftovers(g, p, out.trace);
        out.part = std::move(p);
        return out;
    }
    auto [p, index] = init_communities(g, scan.seeds, out.trace);
    expand(g, p, index, out.trace);
    assign_leftovers(g, p, out.trace);
    out.part = std::move(p);
    return out;
}

}  // namespace ncb
