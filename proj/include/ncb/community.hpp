#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "ncb/conductance.hpp"
#include "ncb/error.hpp"
#include "ncb/graph.hpp"

namespace ncb {

inline constexpr std::int64_t kUnassigned = -1;

// Mutable community with cached counters: e_C^in (internal edge count)
// and d(C) (degree sum). The caches are what Eq. (5)–(6) read.
struct community {
    std::uint32_t id = 0;
    std::vector<node_id> members;
    std::uint64_t internal_edges = 0;
    std::uint64_t degree_sum = 0;
};

// Node → community map plus the community list. UNASSIGNED appears only
// mid-algorithm; finished partitions are total and disjoint.
class partition {
public:
    partition() = default;
    explicit partition(std::size_t n) : assignment_(n, kUnassigned) {}

    std::size_t n() const { return assignment_.size(); }
    std::size_t size() const { return communities_.size(); }
    const std::vector<community>& communities() const { return communities_; }
    const community& at(std::uint32_t c) const { return communities_[c]; }

    std::int64_t community_of(node_id v) const { return assignment_[v]; }
    bool assigned(node_id v) const { return assignment_[v] != kUnassigned; }

    bool total() const {
        for (auto a : assignment_)
            if (a == kUnassigned) return false;
        return true;
    }

    // Founds the community {v}.
    std::uint32_t add_community(const graph& g, node_id v) {
        std::uint32_t c = static_cast<std::uint32_t>(communities_.size());
        communities_.push_back({c, {v}, 0, g.degree(v)});
        assignment_[v] = c;
        return c;
    }

    // Moves v into community c, updating cached counters. Returns the
    // number of edges v had into c (e_C^v).
    std::uint64_t assign(const graph& g, node_id v, std::uint32_t c) {
        if (assignment_[v] != kUnassigned) throw domain_error("assign: node " + std::to_string(v) + " already assigned");
        std::uint64_t e = 0;
        for (node_id w : g.neighbors(v))
            if (assignment_[w] == static_cast<std::int64_t>(c)) ++e;
        assignment_[v] = c;
        community& com = communities_[c];
        com.members.push_back(v);
        com.internal_edges += e;
        com.degree_sum += g.degree(v);
        return e;
    }

    // Normalizes an arbitrary label vector into a partition with community
    // ids dense from 0 in order of first appearance (node id ascending).
    static partition from_assignment(const graph& g, const std::vector<std::int64_t>& labels) {
        if (labels.size() != g.n()) throw domain_error("from_assignment: label count != node count");
        partition p(g.n());
        std::vector<std::int64_t> remap;
        for (node_id v = 0; v < g.n(); ++v) {
            std::int64_t lbl = labels[v];
            std::uint32_t c;
            auto it = std::find(remap.begin(), remap.end(), lbl);
            if (it == remap.end()) {
                remap.push_back(lbl);
                c = p.add_community(g, v);
                continue;
            }
            c = static_cast<std::uint32_t>(it - remap.begin());
            p.assign(g, v, c);
        }
        return p;
    }

private:
    std::vector<std::int64_t> assignment_;
    std::vector<community> communities_;
};

// CF_u(C) = e_C^u / d_u : the fraction of u's edges landing in C.
inline ratio gravitation(const graph& g, const partition& p, node_id u, std::uint32_t c) {
    if (g.degree(u) == 0) throw undefined_error("gravitation undefined for isolated node " + std::to_string(u));
    if (p.community_of(u) == static_cast<std::int64_t>(c)) throw domain_error("gravitation: node already in community");
    std::uint64_t e = 0;
    for (node_id w : g.neighbors(u))
        if (p.community_of(w) == static_cast<std::int64_t>(c)) ++e;
    return ratio{e, g.degree(u)};
}

// s(C) = 2·e_C^in / d(C) .
inline ratio stability(const community& c) {
    if (c.degree_sum == 0) throw undefined_error("stability undefined: community has zero volume");
    return ratio{2 * c.internal_edges, c.degree_sum};
}

// Signed exact rational for the capture factor.
struct signed_ratio {
    std::int64_t num = 0;
    std::uint64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool positive() const { return num > 0; }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// ε = s(C ∪ {v}) − s(C)  without mutating C. Expanding the
// difference over the common denominator:
//   ε = 2·(e_C^v·d(C) − e_C^in·d_v) / (d(C)·(d(C)+d_v))
inline signed_ratio capture_factor(const graph& g, const partition& p, std::uint32_t c, node_id v) {
    const community& com = p.at(c);
    if (com.degree_sum == 0) throw undefined_error("capture factor undefined: community has zero volume");
    if (g.degree(v) == 0) throw undefined_error("capture factor undefined for isolated node " + std::to_string(v));
    if (p.community_of(v) == static_cast<std::int64_t>(c)) throw domain_error("capture_factor: node already a member");
    std::uint64_t e_v = 0;
    for (node_id w : g.neighbors(v))
        if (p.community_of(w) == static_cast<std::int64_t>(c)) ++e_v;
    std::int64_t num = 2 * (static_cast<std::int64_t>(e_v * com.degree_sum) -
                            static_cast<std::int64_t>(com.internal_edges * g.degree(v)));
    std::uint64_t den = com.degree_sum * (com.degree_sum + g.degree(v));
    return signed_ratio{num, den};
}

}  // namespace ncb
