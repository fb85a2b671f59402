#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncb/error.hpp"
#include "ncb/graph.hpp"

namespace ncb {

// Exact non-negative rational. Comparisons cross-multiply in 128 bits so
// ties are decided by arithmetic, never by floating-point rounding.
struct ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline int compare(ratio a, ratio b) {
    using u128 = unsigned __int128;
    u128 l = static_cast<u128>(a.num) * b.den;
    u128 r = static_cast<u128>(b.num) * a.den;
    return l < r ? -1 : (l > r ? 1 : 0);
}

inline bool operator==(ratio a, ratio b) { return compare(a, b) == 0; }
inline bool operator<(ratio a, ratio b) { return compare(a, b) < 0; }
inline bool operator<=(ratio a, ratio b) { return compare(a, b) <= 0; }

namespace detail {

// Membership marks reusable across calls: O(1) set/test, O(size) reset
// amortized away by the generation counter.
class mark_buffer {
public:
    explicit mark_buffer(std::size_t n) : stamp_(n, 0) {}

    void begin() { ++generation_; }
    void set(node_id v) { stamp_[v] = generation_; }
    bool test(node_id v) const { return stamp_[v] == generation_; }

private:
    std::vector<std::uint32_t> stamp_;
    std::uint32_t generation_ = 0;
};

struct set_counts {
    std::uint64_t volume = 0;
    std::uint64_t internal_edges = 0;
    std::uint64_t cut = 0;
};

// Single pass over the set's adjacency. cut = volume − 2·internal.
inline set_counts count_set(const graph& g, std::span<const node_id> S, mark_buffer& marks) {
    marks.begin();
    for (node_id v : S) {
        if (v >= g.n()) throw domain_error("node set contains out-of-range id " + std::to_string(v));
        marks.set(v);
    }
    set_counts c;
    for (node_id v : S) {
        c.volume += g.degree(v);
        for (node_id w : g.neighbors(v))
            if (marks.test(w)) ++c.internal_edges;
    }
    c.internal_edges /= 2;  // every internal edge seen from both ends
    c.cut = c.volume - 2 * c.internal_edges;
    return c;
}

inline std::optional<ratio> try_conductance(const graph& g, std::span<const node_id> S, mark_buffer& marks) {
    if (S.empty()) return std::nullopt;
    set_counts c = count_set(g, S, marks);
    std::uint64_t complement = g.volume() - c.volume;
    std::uint64_t denom = std::min(c.volume, complement);
    if (denom == 0) return std::nullopt;  // S or its complement carries no edges
    return ratio{c.cut, denom};
}

}  // namespace detail

// |E(S, V∖S)| — edges crossing the boundary of S.
inline std::uint64_t cut(const graph& g, std::span<const node_id> S) {
    detail::mark_buffer marks(g.n());
    return detail::count_set(g, S, marks).cut;
}

// d(S): degree sum over S.
inline std::uint64_t volume(const graph& g, std::span<const node_id> S) {
    std::uint64_t total = 0;
    for (node_id v : S) total += g.degree(v);
    return total;
}

// φ(S) = cut(S) / min(d(S), d(V∖S))  , exact rational.
inline ratio conductance(const graph& g, std::span<const node_id> S) {
    detail::mark_buffer marks(g.n());
    auto phi = detail::try_conductance(g, S, marks);
    if (!phi)
        throw undefined_error("conductance undefined: set empty, whole graph, or a zero-volume side");
    return *phi;
}

// φ of the closed neighborhood {v} ∪ N1(v); the seed score.
inline ratio neighborhood_conductance(const graph& g, node_id v) {
    if (g.degree(v) == 0) throw undefined_error("neighborhood conductance undefined for isolated node " + std::to_string(v));
    auto nbrs = g.neighbors(v);
    std::vector<node_id> closed(nbrs.begin(), nbrs.end());
    closed.push_back(v);
    detail::mark_buffer marks(g.n());
    auto phi = detail::try_conductance(g, closed, marks);
    if (!phi)
        throw undefined_error("neighborhood conductance undefined: closed neighborhood of " + std::to_string(v) + " spans all edges");
    return *phi;
}

struct seed_record {
    node_id node;
    ratio score;
};

struct seed_scan {
    std::vector<seed_record> seeds;  // ascending (score, node id)
    bool fallback = false;           // no local minimum existed; single min-degree seed
};

namespace detail {

// Per-node closed-neighborhood conductance; nullopt where undefined.
inline std::vector<std::optional<ratio>> all_neighborhood_conductances(const graph& g) {
    std::vector<std::optional<ratio>> phi(g.n());
    mark_buffer marks(g.n());
    std::vector<node_id> closed;
    for (node_id v = 0; v < g.n(); ++v) {
        if (g.degree(v) == 0) continue;
        auto nbrs = g.neighbors(v);
        closed.assign(nbrs.begin(), nbrs.end());
        closed.push_back(v);
        phi[v] = try_conductance(g, closed, marks);
    }
    return phi;
}

}  // namespace detail

// Eq. (3) local minima: φ(N1(v)) ≤ φ(N1(w)) for every neighbor w, with
// undefined-score nodes excluded (and vacuous as comparison partners).
// Complete graphs have no local minimum; fall back to one minimum-degree
// seed so detection still starts somewhere.
inline seed_scan find_seeds(const graph& g) {
    if (g.n() == 0) throw domain_error("find_seeds: empty graph");
    auto phi = detail::all_neighborhood_conductances(g);
    seed_scan out;
    for (node_id v = 0; v < g.n(); ++v) {
        if (!phi[v]) continue;
        bool minimal = true;
        for (node_id w : g.neighbors(v))
            if (phi[w] && compare(*phi[v], *phi[w]) > 0) {
                minimal = false;
                break;
            }
        if (minimal) out.seeds.push_back({v, *phi[v]});
    }
    std::sort(out.seeds.begin(), out.seeds.end(), [](const seed_record& a, const seed_record& b) {
        int c = compare(a.score, b.score);
        return c != 0 ? c < 0 : a.node < b.node;
    });
    if (out.seeds.empty()) {
        node_id best = g.n();
        for (node_id v = 0; v < g.n(); ++v)
            if (g.degree(v) > 0 && (best == g.n() || g.degree(v) < g.degree(best))) best = v;
        if (best != g.n()) {
            out.seeds.push_back({best, ratio{0, 1}});
            out.fallback = true;
        }
    }
    return out;
}

struct profile_row {
    node_id node;
    std::uint32_t degree;
    std::optional<ratio> conductance;  // nullopt = undefined
};

// Per-node (degree, closed-neighborhood conductance) records backing the
// degree/conductance scatter output.
inline std::vector<profile_row> profile(const graph& g) {
    auto phi = detail::all_neighborhood_conductances(g);
    std::vector<profile_row> rows;
    rows.reserve(g.n());
    for (node_id v = 0; v < g.n(); ++v) rows.push_back({v, g.degree(v), phi[v]});
    return rows;
}

}  // namespace ncb
