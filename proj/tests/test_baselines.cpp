#include <gtest/gtest.h>

#include <vector>

#include "ncb/generate.hpp"
#include "ncb/greedy_modularity.hpp"
#include "ncb/lpa.hpp"
#include "ncb/metrics.hpp"
#include "test_util.hpp"

using ncb::node_id;
using test_util::make_graph;

TEST(Lpa, TwoDisjointTrianglesAnySeed) {
    ncb::graph g = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        ncb::partition p = ncb::lpa(g, seed);
        EXPECT_EQ(p.size(), 2u) << "seed " << seed;  // labels cannot cross components
        EXPECT_EQ(test_util::sorted_members(p, 0), (std::vector<node_id>{0, 1, 2}));
    }
}

TEST(Lpa, CompleteGraphCollapsesToOneCommunity) {
    std::vector<std::pair<node_id, node_id>> edges;
    for (node_id i = 0; i < 8; ++i)
        for (node_id j = i + 1; j < 8; ++j) edges.emplace_back(i, j);
    ncb::graph g = make_graph(8, std::move(edges));
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
        EXPECT_EQ(ncb::lpa(g, seed).size(), 1u) << "seed " << seed;
}

TEST(Lpa, DeterministicUnderFixedSeed) {
    ncb::graph g = ncb::gnp(120, 0.06, 17);
    ncb::partition a = ncb::lpa(g, 7);
    ncb::partition b = ncb::lpa(g, 7);
    ASSERT_EQ(a.size(), b.size());
    for (node_id v = 0; v < g.n(); ++v) EXPECT_EQ(a.community_of(v), b.community_of(v));
}

TEST(Lpa, KarateMeanModularityInPublishedBand) {
    ncb::graph g = test_util::load_data_graph("karate.gml");
    double sum = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) sum += ncb::modularity(g, ncb::lpa(g, seed));
    double mean = sum / 5.0;
    EXPECT_GE(mean, 0.132);
    EXPECT_LE(mean, 0.402);
}

TEST(Lpa, ValidPartitionsOnRandomGraphs) {
    std::string why;
    for (int trial = 0; trial < 10; ++trial) {
        ncb::graph g = ncb::gnp(80 + 20 * trial, 0.05, 900 + trial);
        ncb::partition p = ncb::lpa(g, 100 + static_cast<std::uint64_t>(trial));
        test_util::expect_valid_partition(g, p, why);
        EXPECT_TRUE(why.empty()) << why;
    }
}

TEST(Lpa, EdgelessGraphKeepsSingletons) {
    ncb::graph g = make_graph(4, {});
    EXPECT_EQ(ncb::lpa(g, 1).size(), 4u);
}

TEST(GreedyModularity, TwoDisjointTriangles) {
    ncb::graph g = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    ncb::partition p = ncb::greedy_modularity(g);
    ASSERT_EQ(p.size(), 2u);
    EXPECT_DOUBLE_EQ(ncb::modularity(g, p), 0.5);
}

TEST(GreedyModularity, SingleEdgeMergesOnce) {
    ncb::graph g = make_graph(2, {{0, 1}});
    EXPECT_EQ(ncb::greedy_modularity(g).size(), 1u);
}

TEST(GreedyModularity, KarateNearPublishedValue) {
    ncb::graph g = test_util::load_data_graph("karate.gml");
    ncb::partition p = ncb::greedy_modularity(g);
    EXPECT_NEAR(ncb::modularity(g, p), 0.381, 0.02);
}

TEST(GreedyModularity, DeterministicAndValid) {
    std::string why;
    for (int trial = 0; trial < 10; ++trial) {
        ncb::graph g = ncb::gnp(60 + trial * 30, 0.05, 333 + trial);
        ncb::partition a = ncb::greedy_modularity(g);
        ncb::partition b = ncb::greedy_modularity(g);
        ASSERT_EQ(a.size(), b.size());
        for (node_id v = 0; v < g.n(); ++v) EXPECT_EQ(a.community_of(v), b.community_of(v));
        test_util::expect_valid_partition(g, a, why);
        EXPECT_TRUE(why.empty()) << why;
    }
}

TEST(GreedyModularity, NeverWorseThanSingletons) {
    // the merge loop only applies strictly positive ΔQ steps
    for (int trial = 0; trial < 8; ++trial) {
        ncb::graph g = ncb::gnp(50, 0.08, 60 + trial);
        std::vector<std::int64_t> own(g.n());
        for (node_id v = 0; v < g.n(); ++v) own[v] = v;
        double q_singletons = ncb::modularity(g, ncb::partition::from_assignment(g, own));
        double q_greedy = ncb::modularity(g, ncb::greedy_modularity(g));
        EXPECT_GE(q_greedy, q_singletons - 1e-12);
    }
}

TEST(GreedyModularity, EdgelessGraphKeepsSingletons) {
    ncb::graph g = make_graph(3, {});
    EXPECT_EQ(ncb::greedy_modularity(g).size(), 3u);
}

TEST(Baselines, EmptyGraphThrows) {
    ncb::graph g;
    EXPECT_THROW(ncb::lpa(g, 1), ncb::domain_error);
    EXPECT_THROW(ncb::greedy_modularity(g), ncb::domain_error);
}
