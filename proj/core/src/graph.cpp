#include "congest/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace congest {

namespace {

// Default polynomial identifier bound: n^4 (saturating).
std::uint64_t id_bound(std::size_t n) {
    std::uint64_t b = 1;
    for (int i = 0; i < 4; ++i) {
        if (n != 0 && b > UINT64_MAX / n) return UINT64_MAX;
        b *= std::max<std::uint64_t>(n, 1);
    }
    return b;
}

}  // namespace

Graph::Graph(std::vector<NodeId> nodes, std::vector<Edge> edges) {
    std::sort(nodes.begin(), nodes.end());
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
        throw Error("duplicate node id");
    }
    const std::uint64_t bound = id_bound(nodes.size());
    if (!nodes.empty() && nodes.back() > bound) {
        throw Error("node id " + std::to_string(nodes.back()) +
                    " exceeds polynomial bound " + std::to_string(bound));
    }
    nodes_ = std::move(nodes);
    for (std::size_t i = 0; i < nodes_.size(); ++i) index_[nodes_[i]] = i;

    for (Edge& e : edges) {
        if (e.first == e.second) {
            throw Error("self-loop at node " + std::to_string(e.first));
        }
        e = make_edge(e.first, e.second);
        if (!index_.count(e.first) || !index_.count(e.second)) {
            throw Error("edge endpoint not a declared node");
        }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw Error("duplicate edge");
    }
    edges_ = std::move(edges);

    adj_.resize(nodes_.size());
    for (const Edge& e : edges_) {
        adj_[index_[e.first]].push_back(e.second);
        adj_[index_[e.second]].push_back(e.first);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

Graph Graph::from_edges(const std::vector<Edge>& edges) {
    std::set<NodeId> ids;
    for (const Edge& e : edges) {
        ids.insert(e.first);
        ids.insert(e.second);
    }
    return Graph(std::vector<NodeId>(ids.begin(), ids.end()), edges);
}

bool Graph::has_node(NodeId v) const { return index_.count(v) != 0; }

bool Graph::has_edge(NodeId a, NodeId b) const {
    if (a == b || !has_node(a) || !has_node(b)) return false;
    const auto& nb = adj_[index_.at(a)];
    return std::binary_search(nb.begin(), nb.end(), b);
}

std::size_t Graph::index_of(NodeId v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw Error("unknown node id " + std::to_string(v));
    return it->second;
}

const std::vector<NodeId>& Graph::neighbors(NodeId v) const {
    return adj_[index_of(v)];
}

std::size_t Graph::degree(NodeId v) const { return neighbors(v).size(); }

NodeId Graph::max_node_id() const {
    return nodes_.empty() ? 0 : nodes_.back();
}

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::set<NodeId> mentioned;
    long long edges_read = 0;

    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;

        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0) {
                throw ParseError(lineno, "expected header 'n m'");
            }
            std::string rest;
            if (ls >> rest) throw ParseError(lineno, "trailing tokens after header");
            continue;
        }
        if (edges_read >= m) {
            throw ParseError(lineno, "more than the declared " + std::to_string(m) + " edges");
        }
        unsigned long long u, v;
        if (!(ls >> u >> v)) throw ParseError(lineno, "expected edge 'u v'");
        std::string rest;
        if (ls >> rest) throw ParseError(lineno, "trailing tokens after edge");
        if (u == v) throw ParseError(lineno, "self-loop at node " + std::to_string(u));
        Edge e = make_edge(u, v);
        if (!seen.insert(e).second) {
            throw ParseError(lineno, "duplicate edge " + std::to_string(e.first) + " " +
                                         std::to_string(e.second));
        }
        for (NodeId x : {e.first, e.second}) {
            if (!mentioned.count(x) && mentioned.size() >= static_cast<std::size_t>(n)) {
                throw ParseError(lineno, "endpoint " + std::to_string(x) +
                                             " not declared: graph has only " +
                                             std::to_string(n) + " nodes");
            }
            mentioned.insert(x);
        }
        edges.push_back(e);
        ++edges_read;
    }
    if (n < 0) throw ParseError(lineno, "missing header 'n m'");
    if (edges_read < m) {
        throw ParseError(lineno, "expected " + std::to_string(m) + " edges, got " +
                                     std::to_string(edges_read));
    }

    // Isolated nodes take the smallest unused ids.
    std::vector<NodeId> nodes(mentioned.begin(), mentioned.end());
    NodeId next = 0;
    while (nodes.size() < static_cast<std::size_t>(n)) {
        while (mentioned.count(next)) ++next;
        nodes.push_back(next);
        mentioned.insert(next);
    }
    try {
        return Graph(std::move(nodes), std::move(edges));
    } catch (const Error& e) {
        throw ParseError(lineno, e.what());
    }
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.node_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) {
        out << e.first << " " << e.second << "\n";
    }
    return out.str();
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file: " + path);
    return parse_graph(in);
}

void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write graph file: " + path);
    out << serialize_graph(g);
}

DegeneracyResult degeneracy(const Graph& g) {
    const std::size_t n = g.node_count();
    DegeneracyResult res;
    res.removal_order.reserve(n);

    std::vector<std::size_t> deg(n);
    std::vector<bool> removed(n, false);
    for (std::size_t i = 0; i < n; ++i) deg[i] = g.degree(g.nodes()[i]);

    for (std::size_t step = 0; step < n; ++step) {
        // Minimum current degree, ties by smallest id (nodes() is sorted).
        std::size_t best = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!removed[i] && (best == n || deg[i] < deg[best])) best = i;
        }
        res.degeneracy = std::max<int>(res.degeneracy, static_cast<int>(deg[best]));
        removed[best] = true;
        res.removal_order.push_back(g.nodes()[best]);
        for (NodeId u : g.neighbors(g.nodes()[best])) {
            std::size_t ui = g.index_of(u);
            if (!removed[ui]) --deg[ui];
        }
    }
    return res;
}

bool edge_count_bound_check(const Graph& g, int d) {
    return g.edge_count() <= g.node_count() * static_cast<std::size_t>(d);
}

Orientation::Orientation(Graph base, std::map<Edge, NodeId> head)
    : base_(std::move(base)), head_(std::move(head)) {
    if (head_.size() != base_.edge_count()) {
        throw Error("orientation must assign exactly one direction per edge");
    }
    out_.resize(base_.node_count());
    for (const Edge& e : base_.edges()) {
        auto it = head_.find(e);
        if (it == head_.end()) throw Error("orientation missing an edge of the base graph");
        NodeId h = it->second;
        if (h != e.first && h != e.second) {
            throw Error("orientation head is not an endpoint of its edge");
        }
        NodeId t = (h == e.first) ? e.second : e.first;
        out_[base_.index_of(t)].push_back(h);
    }
    for (auto& o : out_) std::sort(o.begin(), o.end());
}

Orientation Orientation::from_removal_order(Graph base, const std::vector<NodeId>& order) {
    std::map<NodeId, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    std::map<Edge, NodeId> head;
    for (const Edge& e : base.edges()) {
        head[e] = pos.at(e.first) < pos.at(e.second) ? e.second : e.first;
    }
    return Orientation(std::move(base), std::move(head));
}

NodeId Orientation::head(const Edge& e) const {
    auto it = head_.find(make_edge(e.first, e.second));
    if (it == head_.end()) throw Error("edge not in orientation");
    return it->second;
}

NodeId Orientation::tail(const Edge& e) const {
    Edge n = make_edge(e.first, e.second);
    NodeId h = head(n);
    return h == n.first ? n.second : n.first;
}

const std::vector<NodeId>& Orientation::out_neighbors(NodeId v) const {
    return out_[base_.index_of(v)];
}

std::size_t Orientation::max_outdegree() const {
    std::size_t m = 0;
    for (const auto& o : out_) m = std::max(m, o.size());
    return m;
}

Orientation Orientation::restricted_to(const Graph& sub) const {
    std::map<Edge, NodeId> head;
    for (const Edge& e : sub.edges()) {
        auto it = head_.find(e);
        if (it == head_.end()) throw Error("subgraph edge missing from base orientation");
        head[e] = it->second;
    }
    return Orientation(sub, std::move(head));
}

Orientation exact_d_orientation(const Graph& g) {
    return Orientation::from_removal_order(g, degeneracy(g).removal_order);
}

bool is_acyclic(const Orientation& o) {
    // Kahn's algorithm on the directed graph induced by the orientation.
    const Graph& g = o.base();
    const std::size_t n = g.node_count();
    std::vector<std::size_t> indeg(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (NodeId h : o.out_neighbors(g.nodes()[i])) ++indeg[g.index_of(h)];
    }
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < n; ++i) {
        if (indeg[i] == 0) stack.push_back(i);
    }
    std::size_t seen = 0;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        ++seen;
        for (NodeId h : o.out_neighbors(g.nodes()[i])) {
            std::size_t hi = g.index_of(h);
            if (--indeg[hi] == 0) stack.push_back(hi);
        }
    }
    return seen == n;
}

}  // namespace congest
