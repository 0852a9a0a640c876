#ifndef CONGEST_DETECT_HPP
#define CONGEST_DETECT_HPP

#include <map>
#include <optional>

#include "congest/oracle.hpp"
#include "congest/repfam.hpp"
#include "congest/sim.hpp"

namespace congest {

// Outcome of one distributed detection run. `found` has one entry per node;
// every witness is validated against the host graph before being returned.
struct DetectResult {
    std::map<NodeId, bool> found;
    std::map<NodeId, SubgraphCopy> witnesses;
    bool any_found = false;
    Metrics metrics;
    // Total rounds of the precomputed oblivious schedule; the run uses
    // exactly this many rounds.
    int round_budget = 0;
};

// Detects paths with k edges (k+1 nodes). A node's flag is set iff some
// k-edge path ends at it. 1 <= k <= 8.
DetectResult detect_paths(const Graph& g, int k, const SimConfig& cfg);

// Detects cycles on k nodes through the fixed node w. Flags are set at
// neighbors of w that hold a (k-1)-edge path from w. 3 <= k <= 8.
DetectResult detect_cycles_fixed(const Graph& g, int k, NodeId w, const SimConfig& cfg);

// Detects cycles on k nodes anywhere: one anchored instance per node, run in
// parallel with a fixed per-anchor slot layout. A node's flag is set iff it
// lies on some k-cycle.
DetectResult detect_cycles(const Graph& g, int k, const SimConfig& cfg);

// Target tree rooted and labeled 1..k so that descendants get smaller
// indices than their ancestors (the root has index k).
struct RootedTargetTree {
    Graph target;
    std::vector<NodeId> index_to_node;        // [1..k]; [0] unused
    std::map<NodeId, int> node_to_index;
    std::vector<int> parent;                  // by index; root -> 0
    std::vector<std::vector<int>> children;   // by index, ascending
    std::vector<int> subtree_size;            // s_i, by index

    int k() const { return static_cast<int>(index_to_node.size()) - 1; }
    int root_index() const { return k(); }
};

// Builds the labeling: root defaults to the maximum id, children are visited
// in ascending id order, and indices are assigned in post-order.
RootedTargetTree order_tree(const Graph& h, std::optional<NodeId> root = std::nullopt);

// Detects a copy of the tree target. A node's flag is set iff a copy rooted
// (at the root index) at that node exists. k <= 8.
DetectResult detect_tree(const Graph& g, const RootedTargetTree& h, const SimConfig& cfg);

// Pseudotree target: a connected graph with exactly one cycle, split into a
// removed cycle edge e = {u1, u2} and the tree rooted at u2; u1 carries
// index j.
struct PseudotreeTarget {
    Graph target;
    Edge removed_edge;
    RootedTargetTree tree;  // target minus removed_edge, rooted at max(e)
    int j_index = 0;        // index of min(e) in the tree labeling
};

PseudotreeTarget prepare_pseudotree(const Graph& h);

// Detects a copy of the pseudotree target. A node's flag is set iff it can
// play the root role with the closing edge to a neighbor playing j. k <= 8.
DetectResult detect_pseudotree(const Graph& g, const PseudotreeTarget& h, const SimConfig& cfg);

// Test/diagnostic hook: the representative path families each node holds
// after a detect_paths run, per level 1..k.
struct PathFamilyTrace {
    std::map<int, std::map<NodeId, SetFamily>> families;  // level -> node -> family
};
PathFamilyTrace collect_path_families(const Graph& g, int k, const SimConfig& cfg);

}  // namespace congest

#endif
