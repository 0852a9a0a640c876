#ifndef CONGEST_SPARSE_ENUM_HPP
#define CONGEST_SPARSE_ENUM_HPP

#include <map>

#include "congest/oracle.hpp"
#include "congest/sim.hpp"

namespace congest {

// Record of the degree-threshold peeling that produces the distributed
// orientation: i_v is the last iteration a node survived; iteration_sizes[i]
// is |V_i| until the node set empties.
struct PeelState {
    std::map<NodeId, int> last_iteration;  // i_v
    std::vector<std::size_t> iteration_sizes;
    double threshold_constant = 3.0;  // C
    int degeneracy_input = 0;         // d
    int iterations() const { return static_cast<int>(iteration_sizes.size()) - 1; }
};

struct OrientationRun {
    Orientation orientation;
    PeelState peel;
    Metrics metrics;
    int round_budget = 0;
};

// Peels nodes whose degree in the surviving subgraph is at most C*d, one
// announcement round per iteration; edges are oriented toward the endpoint
// removed later (ties toward the larger id). The result is acyclic with
// max outdegree <= ceil(C*d). Fails with an explicit error if the peeling
// stalls, which happens when g is not d-degenerate.
OrientationRun distributed_orientation(const Graph& g, int d, double C, const SimConfig& cfg);

struct CopySet {
    std::vector<SubgraphCopy> copies;        // deduplicated by edge image, sorted
    std::map<std::vector<Edge>, NodeId> owner;  // edge image -> reporting node
};

enum class EnumTarget { clique, c4, c5 };

struct EnumOptions {
    int k = 3;             // clique size; ignored for c4/c5
    int d = 1;             // degeneracy bound handed to the orientation
    double C = 3.0;        // peel threshold constant, > 2
    bool dedup = false;    // suppress all but the smallest-id knower (c4/c5)
};

struct EnumResult {
    CopySet copies;
    Metrics metrics;
    int round_budget = 0;
    int orientation_rounds = 0;
};

// Clique enumeration: orientation, one broadcast of each node's out-neighbor
// set, then local search. Every clique is reported by its sink. k <= d+1.
EnumResult enumerate_cliques(const Graph& g, const EnumOptions& opts, const SimConfig& cfg);

// 4-cycle enumeration over the same messages as the clique algorithm.
EnumResult enumerate_c4(const Graph& g, const EnumOptions& opts, const SimConfig& cfg);

// 5-cycle enumeration; adds one broadcast of each node's outgoing length-2
// path set.
EnumResult enumerate_c5(const Graph& g, const EnumOptions& opts, const SimConfig& cfg);

// Supported model: the communication topology is `support`, globally known;
// the input is a subgraph of it. The orientation is computed locally from the
// support (zero rounds) and edge presence travels as per-out-edge bitmaps.
Orientation supported_orientation(const Graph& support);

EnumResult supported_enumerate(const Graph& support, const Graph& input, EnumTarget target,
                               const EnumOptions& opts, const SimConfig& cfg);

}  // namespace congest

#endif
