#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncb/community.hpp"
#include "ncb/error.hpp"
#include "ncb/graph.hpp"

namespace ncb {

// Newman–Girvan modularity: Q = Σ_c [e_c/m − (d_c/2m)²]. Accumulated as
// the exact integer Σ_c (4m·e_c − d_c²) over denominator 4m², so the
// result is one rounding away from the rational value.
inline double modularity(const graph& g, const partition& p) {
    if (p.n() != g.n()) throw domain_error("modularity: partition is for a different graph");
    if (g.m() == 0) throw domain_error("modularity: graph has no edges");
    const std::int64_t m = static_cast<std::int64_t>(g.m());
    std::int64_t num = 0;
    for (const community& c : p.communities()) {
        std::int64_t e = static_cast<std::int64_t>(c.internal_edges);
        std::int64_t d = static_cast<std::int64_t>(c.degree_sum);
        num += 4 * m * e - d * d;
    }
    return static_cast<double>(num) / (4.0 * static_cast<double>(m) * static_cast<double>(m));
}

// Normalized mutual information with arithmetic-mean normalization and
// natural logarithms: I(X;Y) / ((H(X)+H(Y))/2). Two zero-entropy
// partitions are necessarily identical single blocks → 1.0.
inline double nmi(const partition& a, const partition& b) {
    if (a.n() != b.n()) throw domain_error("nmi: partitions cover different node sets");
    if (!a.total() || !b.total()) throw domain_error("nmi: partitions must be total");
    const double n = static_cast<double>(a.n());
    std::vector<std::uint64_t> ca(a.size(), 0), cb(b.size(), 0);
    std::vector<std::vector<std::uint64_t>> joint(a.size(), std::vector<std::uint64_t>(b.size(), 0));
    for (node_id v = 0; v < a.n(); ++v) {
        auto x = static_cast<std::size_t>(a.community_of(v));
        auto y = static_cast<std::size_t>(b.community_of(v));
        ++ca[x];
        ++cb[y];
        ++joint[x][y];
    }
    auto entropy = [n](const std::vector<std::uint64_t>& counts) {
        double h = 0;
        for (std::uint64_t c : counts)
            if (c) h -= (c / n) * std::log(c / n);
        return h;
    };
    double ha = entropy(ca), hb = entropy(cb);
    if (ha == 0.0 && hb == 0.0) return 1.0;
    double mi = 0;
    for (std::size_t x = 0; x < a.size(); ++x)
        for (std::size_t y = 0; y < b.size(); ++y) {
            std::uint64_t c = joint[x][y];
            if (c) mi += (c / n) * std::log((c * n) / (static_cast<double>(ca[x]) * static_cast<double>(cb[y])));
        }
    double value = mi / ((ha + hb) / 2.0);
    return value < 0 ? 0.0 : (value > 1 ? 1.0 : value);
}

struct metric_report {
    std::string algorithm;
    std::string dataset;
    double modularity = 0;
    std::optional<double> nmi;
    std::size_t communities = 0;
    double seconds = 0;
};

// Assembles one evaluation row; NMI present only when truth is supplied.
inline metric_report evaluate(const graph& g, const partition& p, const partition* ground_truth,
                              const std::string& algorithm, const std::string& dataset, double seconds) {
    metric_report r;
    r.algorithm = algorithm;
    r.dataset = dataset;
    r.modularity = modularity(g, p);
    if (ground_truth) r.nmi = nmi(p, *ground_truth);
    r.communities = p.size();
    r.seconds = seconds;
    return r;
}

}  // namespace ncb
