#ifndef CONGEST_ORACLE_HPP
#define CONGEST_ORACLE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "congest/graph.hpp"

namespace congest {

// A (non-induced) embedded copy of a target graph inside a host graph.
// Two copies are considered equal iff they use the same set of host edges,
// i.e. copies are counted up to automorphisms of the target.
struct SubgraphCopy {
    std::vector<std::pair<NodeId, NodeId>> mapping;  // target id -> host id, sorted by target
    std::vector<Edge> edge_image;                    // sorted host edges

    std::optional<NodeId> host_of(NodeId target_node) const;

    bool operator==(const SubgraphCopy& other) const {
        return edge_image == other.edge_image;
    }
    bool operator<(const SubgraphCopy& other) const {
        return edge_image < other.edge_image;
    }
};

// Checks that `copy.mapping` is injective and maps every target edge onto a
// host edge, and that edge_image is exactly the image of the target edges.
bool validate_copy(const Graph& host, const Graph& target, const SubgraphCopy& copy);

struct OracleOptions {
    // Pin a target node onto a specific host node.
    std::optional<std::pair<NodeId, NodeId>> anchor;
    // Desk-scale guard on the exhaustive search; exceeding it is an error,
    // never a silent truncation.
    std::size_t max_target_nodes = 10;
};

// Exhaustive backtracking search for one embedded copy of `target` in `host`.
// Deterministic: candidates are tried in ascending id order.
std::optional<SubgraphCopy> oracle_contains(const Graph& host, const Graph& target,
                                            const OracleOptions& opts = {});

// All copies of `target` in `host`, deduplicated by edge image and sorted.
std::vector<SubgraphCopy> oracle_enumerate(const Graph& host, const Graph& target,
                                           const OracleOptions& opts = {});

}  // namespace congest

#endif
