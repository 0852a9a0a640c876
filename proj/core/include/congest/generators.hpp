#ifndef CONGEST_GENERATORS_HPP
#define CONGEST_GENERATORS_HPP

#include <cstdint>

#include "congest/graph.hpp"

namespace congest {

// SplitMix64: state advances by the golden-gamma constant and the output is
// a finalized mix of the state. Fully specified so results are reproducible
// across implementations (see README for the exact constants).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() { return (next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// G(n, p): each pair {i, j}, i < j in ascending order, is an edge with
// probability p. Nodes are 0..n-1.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

// Random graph with degeneracy at most d: node v joins min(v, d) distinct
// random earlier nodes, so 0..n-1 is a removal-order witness (read right to
// left). Nodes are 0..n-1.
Graph random_d_degenerate(std::size_t n, int d, std::uint64_t seed);

// Keeps each edge independently with probability keep_p; all nodes stay.
Graph random_edge_subgraph(const Graph& g, double keep_p, std::uint64_t seed);

Graph path_graph(std::size_t nodes);
Graph cycle_graph(std::size_t nodes);
Graph complete_graph(std::size_t nodes);
Graph complete_bipartite(std::size_t left, std::size_t right);
Graph star_graph(std::size_t leaves);
Graph petersen_graph();
Graph hypercube_graph(int dim);

}  // namespace congest

#endif
