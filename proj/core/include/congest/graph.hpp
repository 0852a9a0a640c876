#ifndef CONGEST_GRAPH_HPP
#define CONGEST_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace congest {

using NodeId = std::uint64_t;

// Undirected edge, stored normalized with first < second.
using Edge = std::pair<NodeId, NodeId>;

inline Edge make_edge(NodeId a, NodeId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Simple undirected graph with stable, not necessarily contiguous node ids.
// No self-loops, no parallel edges; every endpoint must be a declared node.
// Node ids must stay within a polynomial bound in n (default n^4).
class Graph {
public:
    Graph() = default;
    Graph(std::vector<NodeId> nodes, std::vector<Edge> edges);

    // Nodes are exactly the edge endpoints.
    static Graph from_edges(const std::vector<Edge>& edges);

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<NodeId>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }  // sorted

    bool has_node(NodeId v) const;
    bool has_edge(NodeId a, NodeId b) const;

    // Position of v in nodes(); throws if absent.
    std::size_t index_of(NodeId v) const;

    const std::vector<NodeId>& neighbors(NodeId v) const;  // sorted
    std::size_t degree(NodeId v) const;

    NodeId max_node_id() const;

    bool operator==(const Graph& other) const {
        return nodes_ == other.nodes_ && edges_ == other.edges_;
    }

private:
    std::vector<NodeId> nodes_;              // sorted, distinct
    std::vector<Edge> edges_;                // sorted lexicographically
    std::vector<std::vector<NodeId>> adj_;   // by node index, sorted
    std::map<NodeId, std::size_t> index_;
};

// Text format: '#' comment lines, then "n m", then m lines "u v".
// Edge endpoints implicitly declare nodes; if the edges mention fewer than n
// distinct ids, the remaining isolated nodes take the smallest unused ids.
// Mentioning more than n distinct ids is an error ("endpoint not declared").
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

// Canonical form: "n m" header followed by lexicographically sorted edges.
std::string serialize_graph(const Graph& g);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

struct DegeneracyResult {
    int degeneracy = 0;
    // Removal order witnessing the value: each node has at most `degeneracy`
    // neighbors later in the order. Ties broken by smallest id.
    std::vector<NodeId> removal_order;
};

DegeneracyResult degeneracy(const Graph& g);

// Sanity bound: a d-degenerate graph has at most n*d edges.
bool edge_count_bound_check(const Graph& g, int d);

// Edge orientation over a base graph. Owns a copy of the base for value
// semantics; every base edge is assigned exactly one direction.
class Orientation {
public:
    Orientation(Graph base, std::map<Edge, NodeId> head);

    // Orient every edge from the earlier node toward the later node in
    // `order` (which must enumerate all nodes).
    static Orientation from_removal_order(Graph base, const std::vector<NodeId>& order);

    const Graph& base() const { return base_; }

    NodeId head(const Edge& e) const;  // node the edge points to
    NodeId tail(const Edge& e) const;

    const std::vector<NodeId>& out_neighbors(NodeId v) const;  // sorted
    std::size_t outdeg(NodeId v) const { return out_neighbors(v).size(); }
    std::size_t indeg(NodeId v) const { return base_.degree(v) - outdeg(v); }
    std::size_t max_outdegree() const;

    // Same directions, restricted to the edges of `sub` (sub ⊆ base).
    Orientation restricted_to(const Graph& sub) const;

private:
    Graph base_;
    std::map<Edge, NodeId> head_;
    std::vector<std::vector<NodeId>> out_;  // by node index, sorted
};

// Acyclic orientation with outdeg(v) <= degeneracy(g) for every v.
Orientation exact_d_orientation(const Graph& g);

bool is_acyclic(const Orientation& o);

}  // namespace congest

#endif
