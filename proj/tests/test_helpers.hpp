#ifndef CONGEST_TEST_HELPERS_HPP
#define CONGEST_TEST_HELPERS_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "congest/generators.hpp"
#include "congest/graph.hpp"
#include "congest/oracle.hpp"
#include "congest/repfam.hpp"

namespace congest::testing {

// Unpruned reference enumerator: tries every injective assignment of target
// nodes to host nodes and collects the distinct edge images. Independent of
// the pruned oracle search path; only usable at very small sizes.
inline std::set<std::vector<Edge>> slow_enumerate_images(const Graph& host, const Graph& target) {
    std::set<std::vector<Edge>> images;
    std::vector<NodeId> hosts = host.nodes();
    std::vector<NodeId> targets = target.nodes();
    std::vector<std::size_t> pick;
    std::vector<bool> used(hosts.size(), false);

    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == targets.size()) {
            std::set<Edge> image;
            for (const Edge& e : target.edges()) {
                NodeId hu = 0, hv = 0;
                for (std::size_t i = 0; i < targets.size(); ++i) {
                    if (targets[i] == e.first) hu = hosts[pick[i]];
                    if (targets[i] == e.second) hv = hosts[pick[i]];
                }
                if (!host.has_edge(hu, hv)) return;
                image.insert(make_edge(hu, hv));
            }
            images.insert(std::vector<Edge>(image.begin(), image.end()));
            return;
        }
        for (std::size_t i = 0; i < hosts.size(); ++i) {
            if (used[i]) continue;
            used[i] = true;
            pick.push_back(i);
            self(self, pos + 1);
            pick.pop_back();
            used[i] = false;
        }
    };
    if (targets.size() <= hosts.size()) rec(rec, 0);
    return images;
}

// All node sets of simple paths with `edges` edges ending at `v`, with the
// lexicographically smallest witness sequence each; exhaustive DFS.
inline SetFamily exhaustive_path_family(const Graph& g, NodeId v, int edges) {
    SetFamily fam = SetFamily::with_witnesses();
    std::vector<NodeId> seq{v};
    std::set<NodeId> on_path{v};
    auto rec = [&](auto&& self, NodeId at, int left) -> void {
        if (left == 0) {
            Witness w(seq.rbegin(), seq.rend());  // oriented to end at v
            Member m = w;
            std::sort(m.begin(), m.end());
            if (!fam.add(m, w)) {
                // keep the smaller witness
            }
            return;
        }
        for (NodeId u : g.neighbors(at)) {
            if (on_path.count(u)) continue;
            on_path.insert(u);
            seq.push_back(u);
            self(self, u, left - 1);
            seq.pop_back();
            on_path.erase(u);
        }
    };
    rec(rec, v, edges);
    return fam;
}

inline Graph random_tree(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) {
        edges.push_back(make_edge(rng.next_below(v), v));
    }
    std::vector<NodeId> nodes;
    for (std::size_t i = 0; i < n; ++i) nodes.push_back(i);
    return Graph(std::move(nodes), std::move(edges));
}

}  // namespace congest::testing

#endif
