#include "congest/generators.hpp"

#include <algorithm>
#include <set>

namespace congest {

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<NodeId> nodes;
    for (std::size_t i = 0; i < n; ++i) nodes.push_back(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng.next_double() < p) edges.emplace_back(i, j);
        }
    }
    return Graph(std::move(nodes), std::move(edges));
}

Graph random_d_degenerate(std::size_t n, int d, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<NodeId> nodes;
    for (std::size_t i = 0; i < n; ++i) nodes.push_back(i);
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) {
        std::size_t take = std::min<std::size_t>(v, static_cast<std::size_t>(d));
        std::set<NodeId> picked;
        while (picked.size() < take) picked.insert(rng.next_below(v));
        for (NodeId u : picked) edges.emplace_back(u, v);
    }
    return Graph(std::move(nodes), std::move(edges));
}

Graph random_edge_subgraph(const Graph& g, double keep_p, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        if (rng.next_double() < keep_p) kept.push_back(e);
    }
    return Graph(g.nodes(), std::move(kept));
}

Graph path_graph(std::size_t nodes) {
    std::vector<NodeId> ids;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < nodes; ++i) ids.push_back(i);
    for (std::size_t i = 0; i + 1 < nodes; ++i) edges.emplace_back(i, i + 1);
    return Graph(std::move(ids), std::move(edges));
}

Graph cycle_graph(std::size_t nodes) {
    if (nodes < 3) throw Error("cycle needs at least 3 nodes");
    std::vector<NodeId> ids;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < nodes; ++i) ids.push_back(i);
    for (std::size_t i = 0; i + 1 < nodes; ++i) edges.emplace_back(i, i + 1);
    edges.push_back(make_edge(0, nodes - 1));
    return Graph(std::move(ids), std::move(edges));
}

Graph complete_graph(std::size_t nodes) {
    std::vector<NodeId> ids;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < nodes; ++i) ids.push_back(i);
    for (std::size_t i = 0; i < nodes; ++i) {
        for (std::size_t j = i + 1; j < nodes; ++j) edges.emplace_back(i, j);
    }
    return Graph(std::move(ids), std::move(edges));
}

Graph complete_bipartite(std::size_t left, std::size_t right) {
    std::vector<NodeId> ids;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < left + right; ++i) ids.push_back(i);
    for (std::size_t i = 0; i < left; ++i) {
        for (std::size_t j = 0; j < right; ++j) edges.emplace_back(i, left + j);
    }
    return Graph(std::move(ids), std::move(edges));
}

Graph star_graph(std::size_t leaves) {
    std::vector<NodeId> ids;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i <= leaves; ++i) ids.push_back(i);
    for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph(std::move(ids), std::move(edges));
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < 5; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 5));        // outer pentagon
        edges.emplace_back(i, 5 + i);                      // spokes
        edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
    }
    return Graph::from_edges(edges);
}

Graph hypercube_graph(int dim) {
    std::size_t n = static_cast<std::size_t>(1) << dim;
    std::vector<NodeId> ids;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) ids.push_back(i);
    for (std::size_t i = 0; i < n; ++i) {
        for (int b = 0; b < dim; ++b) {
            std::size_t j = i ^ (static_cast<std::size_t>(1) << b);
            if (i < j) edges.emplace_back(i, j);
        }
    }
    return Graph(std::move(ids), std::move(edges));
}

}  // namespace congest
