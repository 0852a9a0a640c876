#ifndef CONGEST_LOWER_BOUND_HPP
#define CONGEST_LOWER_BOUND_HPP

#include <set>

#include "congest/graph.hpp"

namespace congest {

// Adversarial k-cycle instance built from a set-disjointness pair (A, B) over
// the universe [N^2]: two complete-bipartite shells whose surviving edges are
// stretched into paths, joined by a 2N-edge matching; a k-cycle exists iff
// A and B intersect.
struct LBInstance {
    Graph graph;
    int k = 6;
    int N = 1;
    std::set<int> A, B;             // subsets of [N^2], 1-based labels
    int ell1 = 3, ell2 = 3;          // floor(k/2), ceil(k/2)
    std::vector<NodeId> side_a, side_b;  // all nodes of each side, shells + path interiors
    std::vector<Edge> cut_edges;         // the matching between the shells

    // One record per bipartite edge slot and side: the slot's shell endpoints,
    // whether it survived, and the interior nodes of its replacement path.
    struct EdgeSlot {
        int label = 0;       // element of [N^2]
        char side = 'A';
        NodeId left = 0, right = 0;
        bool present = false;
        std::vector<NodeId> path_interior;
    };
    std::vector<EdgeSlot> slots;
};

// Builds the instance: shells are K_{N,N} copies with nodes labeled 1..2N
// consistently and edge slot (left i, right j) labeled (i-1)*N + j on both
// sides; same-label shell nodes are matched, dropped slots vanish, surviving
// slots become paths with ell1-1 (side A) or ell2-1 (side B) edges.
// Requires k >= 6, N >= 1, A, B within [N^2].
LBInstance build_instance(int k, int N, const std::set<int>& A, const std::set<int>& B);

struct LBReport {
    bool cycle_iff_intersection = false;
    bool no_one_sided_cycle = false;
    bool degeneracy_at_most_two = false;
    bool cut_size_ok = false;
    bool size_bounds_ok = false;
    bool oracle_found_cycle = false;  // informational
    std::string details;

    bool all_passed() const {
        return cycle_iff_intersection && no_one_sided_cycle && degeneracy_at_most_two &&
               cut_size_ok && size_bounds_ok;
    }
};

// Checks the construction's stated properties with the brute-force oracle:
// cycle presence iff the sets intersect, no k-cycle within one side, the
// witness 2-orientation (and degeneracy <= 2), cut size 2N, and the node and
// edge count bounds. Desk-scale guard: N <= 5, k <= 8.
LBReport verify_instance(const LBInstance& inst);

// Sidecar metadata as a JSON string (schema documented in the README).
std::string instance_metadata_json(const LBInstance& inst);

}  // namespace congest

#endif
