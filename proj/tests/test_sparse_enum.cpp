#include <doctest.h>

#include <cmath>

#include "congest/generators.hpp"
#include "congest/sparse_enum.hpp"
#include "test_helpers.hpp"

using namespace congest;

namespace {

const SimConfig kCfg;

EnumOptions opts_for(const Graph& g, int k = 3) {
    EnumOptions o;
    o.d = degeneracy(g).degeneracy;
    o.k = k;
    return o;
}

void check_against_oracle(const Graph& g, const Graph& target, const CopySet& got) {
    auto expected = oracle_enumerate(g, target);
    REQUIRE(got.copies.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(got.copies[i].edge_image == expected[i].edge_image);
    }
}

}  // namespace

TEST_CASE("distributed orientation on easy graphs") {
    SUBCASE("a path empties in the first iteration") {
        OrientationRun r = distributed_orientation(path_graph(10), 1, 3.0, kCfg);
        CHECK(r.peel.iterations() == 1);
        CHECK(r.orientation.max_outdegree() <= 2);
        CHECK(is_acyclic(r.orientation));
    }
    SUBCASE("a long cycle with d = 2") {
        OrientationRun r = distributed_orientation(cycle_graph(9), 2, 3.0, kCfg);
        CHECK(r.peel.iterations() == 1);
        CHECK(r.orientation.max_outdegree() <= 2);
        CHECK(is_acyclic(r.orientation));
    }
}

TEST_CASE("peeling satisfies the shrinkage and iteration bounds") {
    const double C = 3.0;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Graph g = random_d_degenerate(200, 3, 600 + seed);
        OrientationRun r = distributed_orientation(g, 3, C, kCfg);
        CHECK(is_acyclic(r.orientation));
        CHECK(r.orientation.max_outdegree() <= static_cast<std::size_t>(std::ceil(C * 3)));
        const auto& sizes = r.peel.iteration_sizes;
        REQUIRE(sizes.front() == g.node_count());
        CHECK(sizes.back() == 0);
        for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
            CHECK(C * static_cast<double>(sizes[i + 1]) <= 2.0 * static_cast<double>(sizes[i]));
        }
        // iterations <= ceil(log_{C/2} n) + 1
        int cap = 1;
        double bound = 1.0;
        while (bound < static_cast<double>(g.node_count())) {
            bound *= C / 2.0;
            ++cap;
        }
        CHECK(r.peel.iterations() <= cap);
        CHECK(edge_count_bound_check(g, 3));
    }
}

TEST_CASE("peeling with an understated degeneracy bound stalls") {
    CHECK_THROWS_WITH_AS(distributed_orientation(complete_graph(5), 1, 3.0, kCfg),
                         doctest::Contains("stalled"), Error);
}

TEST_CASE("same-iteration edges orient toward the larger id") {
    // All of P_4 is removed at iteration 0 with d = 1, C = 3.
    OrientationRun r = distributed_orientation(path_graph(4), 1, 3.0, kCfg);
    for (const Edge& e : r.orientation.base().edges()) {
        CHECK(r.orientation.head(e) == std::max(e.first, e.second));
    }
}

TEST_CASE("clique enumeration in K4") {
    Graph g = complete_graph(4);
    EnumResult res = enumerate_cliques(g, opts_for(g, 3), kCfg);
    CHECK(res.copies.copies.size() == 4);
    check_against_oracle(g, complete_graph(3), res.copies);
}

TEST_CASE("2-cliques are the edges") {
    Graph g = complete_graph(4);
    EnumResult res = enumerate_cliques(g, opts_for(g, 2), kCfg);
    CHECK(res.copies.copies.size() == 6);
    check_against_oracle(g, complete_graph(2), res.copies);
}

TEST_CASE("bipartite graphs have no triangles") {
    Graph g = complete_bipartite(3, 4);
    EnumResult res = enumerate_cliques(g, opts_for(g, 3), kCfg);
    CHECK(res.copies.copies.empty());
}

TEST_CASE("clique enumeration matches the oracle on random graphs") {
    Graph g = gnp(60, 0.15, 9);
    for (int k : {3, 4}) {
        EnumOptions o = opts_for(g, k);
        if (k > o.d + 1) continue;
        EnumResult res = enumerate_cliques(g, o, kCfg);
        check_against_oracle(g, complete_graph(k), res.copies);
    }
}

TEST_CASE("every clique is reported by its orientation sink") {
    Graph g = gnp(40, 0.2, 31);
    EnumOptions o = opts_for(g, 3);
    EnumResult res = enumerate_cliques(g, o, kCfg);
    OrientationRun orient = distributed_orientation(g, o.d, o.C, kCfg);
    for (const SubgraphCopy& c : res.copies.copies) {
        NodeId owner = res.copies.owner.at(c.edge_image);
        std::set<NodeId> members;
        for (const auto& [t, h] : c.mapping) members.insert(h);
        CHECK(members.count(owner) == 1);
        for (NodeId out : orient.orientation.out_neighbors(owner)) {
            CHECK(members.count(out) == 0);  // no out-edge inside the clique
        }
    }
}

TEST_CASE("4-cycle enumeration") {
    SUBCASE("K_{2,2} has one") {
        Graph g = complete_bipartite(2, 2);
        EnumResult res = enumerate_c4(g, opts_for(g), kCfg);
        CHECK(res.copies.copies.size() == 1);
    }
    SUBCASE("K_{2,3} has three") {
        Graph g = complete_bipartite(2, 3);
        EnumResult res = enumerate_c4(g, opts_for(g), kCfg);
        CHECK(res.copies.copies.size() == 3);
    }
    SUBCASE("the cube matches the unpruned reference count") {
        Graph g = hypercube_graph(3);
        EnumResult res = enumerate_c4(g, opts_for(g), kCfg);
        auto slow = testing::slow_enumerate_images(g, cycle_graph(4));
        CHECK(res.copies.copies.size() == slow.size());
    }
    SUBCASE("random graphs match the oracle") {
        for (std::uint64_t seed : {4, 5}) {
            Graph g = gnp(30, 0.15, seed);
            EnumResult res = enumerate_c4(g, opts_for(g), kCfg);
            check_against_oracle(g, cycle_graph(4), res.copies);
        }
    }
}

TEST_CASE("5-cycle enumeration") {
    SUBCASE("C5 is its own single copy") {
        Graph g = cycle_graph(5);
        EnumResult res = enumerate_c5(g, opts_for(g), kCfg);
        CHECK(res.copies.copies.size() == 1);
    }
    SUBCASE("the Petersen graph has twelve") {
        Graph g = petersen_graph();
        EnumResult res = enumerate_c5(g, opts_for(g), kCfg);
        CHECK(res.copies.copies.size() == 12);
    }
    SUBCASE("random graphs match the oracle") {
        Graph g = gnp(40, 0.2, 13);
        EnumResult res = enumerate_c5(g, opts_for(g), kCfg);
        check_against_oracle(g, cycle_graph(5), res.copies);
    }
}

namespace {

// Longest directed path length of the (acyclic) orientation restricted to a
// cycle given as a host node sequence.
int longest_dipath_on_cycle(const Orientation& o, const std::vector<NodeId>& cyc) {
    const std::size_t k = cyc.size();
    auto arc = [&](std::size_t i, std::size_t j) {
        Edge e = make_edge(cyc[i], cyc[j]);
        return o.head(e) == cyc[j];
    };
    int best = 0;
    for (std::size_t start = 0; start < k; ++start) {
        for (int dir : {1, -1}) {
            int len = 0;
            std::size_t at = start;
            while (len < static_cast<int>(k)) {
                std::size_t next = (at + k + dir) % k;
                if (!arc(at, next)) break;
                at = next;
                ++len;
            }
            best = std::max(best, len);
        }
    }
    return best;
}

}  // namespace

TEST_CASE("acyclic cycle orientations match a coverage pattern and its node reports") {
    // For every oracle copy, the orientation of the cycle itself designates a
    // reporter; with deduplication on, exactly that node reports the copy.
    for (std::uint64_t seed : {3, 8}) {
        Graph g = gnp(26, 0.18, seed);
        for (int len : {4, 5}) {
            EnumOptions o = opts_for(g);
            o.dedup = true;
            EnumResult res = len == 4 ? enumerate_c4(g, o, kCfg) : enumerate_c5(g, o, kCfg);
            check_against_oracle(g, cycle_graph(len), res.copies);

            // Every oracle copy's induced orientation falls into one of the
            // acyclic cases: the longest directed path on a 4-cycle is 1
            // (alternating), 2 or 3 edges; on a 5-cycle 2, 3 or 4 (odd cycles
            // cannot alternate).
            OrientationRun orient = distributed_orientation(g, o.d, o.C, kCfg);
            for (const SubgraphCopy& c : oracle_enumerate(g, cycle_graph(len))) {
                std::vector<NodeId> cyc;
                for (NodeId t = 0; t < static_cast<NodeId>(len); ++t) {
                    cyc.push_back(*c.host_of(t));
                }
                int longest = longest_dipath_on_cycle(orient.orientation, cyc);
                CHECK(longest >= (len == 4 ? 1 : 2));
                CHECK(longest <= len - 1);
            }
        }
    }
}

TEST_CASE("dedup changes owners but never the copy set") {
    Graph g = gnp(30, 0.2, 21);
    EnumOptions plain = opts_for(g);
    EnumOptions dedup = plain;
    dedup.dedup = true;
    EnumResult a = enumerate_c4(g, plain, kCfg);
    EnumResult b = enumerate_c4(g, dedup, kCfg);
    REQUIRE(a.copies.copies.size() == b.copies.copies.size());
    for (std::size_t i = 0; i < a.copies.copies.size(); ++i) {
        CHECK(a.copies.copies[i].edge_image == b.copies.copies[i].edge_image);
    }
}

TEST_CASE("enumeration guards") {
    Graph g = path_graph(5);
    EnumOptions o = opts_for(g, 3);  // d = 1, k = 3 impossible
    CHECK_THROWS_AS(enumerate_cliques(g, o, kCfg), Error);
    o.k = 2;
    o.C = 2.0;
    CHECK_THROWS_AS(enumerate_cliques(g, o, kCfg), Error);
}

TEST_CASE("supported orientation restricts to any subgraph") {
    Graph support = complete_graph(5);
    Orientation sigma = supported_orientation(support);
    CHECK(is_acyclic(sigma));
    CHECK(sigma.max_outdegree() <= 4);
    Orientation restricted = sigma.restricted_to(cycle_graph(5));
    CHECK(is_acyclic(restricted));
}

TEST_CASE("supported enumeration of one 4-cycle of K4") {
    Graph support = complete_graph(4);
    Graph input({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    EnumResult res = supported_enumerate(support, input, EnumTarget::c4, EnumOptions{}, kCfg);
    CHECK(res.copies.copies.size() == 1);
    CHECK(res.orientation_rounds == 0);
    CHECK(res.metrics.rounds_used <= 2);
    check_against_oracle(input, cycle_graph(4), res.copies);
}

TEST_CASE("supported mode with input == support matches direct enumeration") {
    Graph g = random_d_degenerate(40, 3, 77);
    EnumOptions o = opts_for(g, 3);
    EnumResult direct = enumerate_cliques(g, o, kCfg);
    EnumResult sup = supported_enumerate(g, g, EnumTarget::clique, o, kCfg);
    REQUIRE(direct.copies.copies.size() == sup.copies.copies.size());
    for (std::size_t i = 0; i < sup.copies.copies.size(); ++i) {
        CHECK(direct.copies.copies[i].edge_image == sup.copies.copies[i].edge_image);
    }
}

TEST_CASE("supported enumeration over random edge subsets") {
    for (std::uint64_t seed : {1, 2, 3}) {
        Graph support = random_d_degenerate(50, 4, 800 + seed);
        Graph input = random_edge_subgraph(support, 0.6, 900 + seed);
        for (EnumTarget t : {EnumTarget::clique, EnumTarget::c4, EnumTarget::c5}) {
            EnumOptions o;
            o.k = 3;
            o.d = degeneracy(support).degeneracy;
            EnumResult res = supported_enumerate(support, input, t, o, kCfg);
            Graph target = t == EnumTarget::clique ? complete_graph(3)
                           : t == EnumTarget::c4   ? cycle_graph(4)
                                                   : cycle_graph(5);
            check_against_oracle(input, target, res.copies);
            CHECK(res.orientation_rounds == 0);
        }
    }
}

TEST_CASE("supported mode validates the input graph") {
    Graph support = path_graph(4);
    Graph bad_edge({0, 1, 2, 3}, {{0, 2}});
    CHECK_THROWS_AS(
        supported_enumerate(support, bad_edge, EnumTarget::c4, EnumOptions{}, kCfg), Error);
    Graph bad_node({0, 1, 2, 3, 4}, {});  // node 4 is not in the support
    CHECK_THROWS_AS(
        supported_enumerate(support, bad_node, EnumTarget::c4, EnumOptions{}, kCfg), Error);
}

TEST_CASE("zero-degeneracy input is handled") {
    Graph g({0, 1, 2}, {});
    EnumOptions o;
    o.d = 0;
    o.k = 2;
    CHECK_THROWS_AS(enumerate_cliques(g, o, kCfg), Error);  // k > d + 1
    EnumResult res = enumerate_c4(g, o, kCfg);
    CHECK(res.copies.copies.empty());
}
