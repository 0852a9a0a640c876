#include "congest/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace congest {

std::optional<NodeId> SubgraphCopy::host_of(NodeId target_node) const {
    for (const auto& [t, h] : mapping) {
        if (t == target_node) return h;
    }
    return std::nullopt;
}

bool validate_copy(const Graph& host, const Graph& target, const SubgraphCopy& copy) {
    if (copy.mapping.size() != target.node_count()) return false;
    std::set<NodeId> hosts;
    for (const auto& [t, h] : copy.mapping) {
        if (!target.has_node(t) || !host.has_node(h)) return false;
        if (!hosts.insert(h).second) return false;  // not injective
    }
    std::set<Edge> image;
    for (const Edge& e : target.edges()) {
        auto hu = copy.host_of(e.first);
        auto hv = copy.host_of(e.second);
        if (!hu || !hv) return false;
        if (!host.has_edge(*hu, *hv)) return false;
        image.insert(make_edge(*hu, *hv));
    }
    return std::vector<Edge>(image.begin(), image.end()) == copy.edge_image;
}

namespace {

struct Searcher {
    const Graph& host;
    const Graph& target;
    const OracleOptions& opts;
    bool enumerate_all;

    std::vector<NodeId> torder;            // target nodes in assignment order
    std::vector<std::vector<std::size_t>>
        mapped_tneighbors;                 // per position: earlier positions adjacent in target
    std::vector<NodeId> assignment;        // host node per position
    std::vector<bool> host_used;           // by host index
    std::set<std::vector<Edge>> seen_images;
    std::vector<SubgraphCopy> found;

    Searcher(const Graph& h, const Graph& t, const OracleOptions& o, bool all)
        : host(h), target(t), opts(o), enumerate_all(all) {
        build_order();
        assignment.resize(torder.size());
        host_used.assign(host.node_count(), false);
    }

    // Assignment order: anchored node first (if any), then always preferring a
    // node adjacent to already-ordered ones (best connectivity pruning), ties
    // by larger target degree, then smaller id. Deterministic.
    void build_order() {
        std::vector<NodeId> remaining = target.nodes();
        std::set<NodeId> placed;
        if (opts.anchor) {
            NodeId a = opts.anchor->first;
            torder.push_back(a);
            placed.insert(a);
            remaining.erase(std::find(remaining.begin(), remaining.end(), a));
        }
        while (!remaining.empty()) {
            std::size_t best = 0;
            long best_links = -1;
            for (std::size_t i = 0; i < remaining.size(); ++i) {
                long links = 0;
                for (NodeId u : target.neighbors(remaining[i])) links += placed.count(u);
                long deg = static_cast<long>(target.degree(remaining[i]));
                if (links > best_links ||
                    (links == best_links && deg > static_cast<long>(target.degree(remaining[best])))) {
                    best = i;
                    best_links = links;
                }
            }
            torder.push_back(remaining[best]);
            placed.insert(remaining[best]);
            remaining.erase(remaining.begin() + best);
        }
        mapped_tneighbors.resize(torder.size());
        for (std::size_t i = 0; i < torder.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (target.has_edge(torder[i], torder[j])) mapped_tneighbors[i].push_back(j);
            }
        }
    }

    SubgraphCopy make_copy() const {
        SubgraphCopy c;
        for (std::size_t i = 0; i < torder.size(); ++i) {
            c.mapping.emplace_back(torder[i], assignment[i]);
        }
        std::sort(c.mapping.begin(), c.mapping.end());
        std::set<Edge> image;
        for (const Edge& e : target.edges()) {
            NodeId hu = 0, hv = 0;
            for (std::size_t i = 0; i < torder.size(); ++i) {
                if (torder[i] == e.first) hu = assignment[i];
                if (torder[i] == e.second) hv = assignment[i];
            }
            image.insert(make_edge(hu, hv));
        }
        c.edge_image.assign(image.begin(), image.end());
        return c;
    }

    bool feasible(std::size_t pos, NodeId hv) const {
        if (host.degree(hv) < target.degree(torder[pos])) return false;
        for (std::size_t j : mapped_tneighbors[pos]) {
            if (!host.has_edge(assignment[j], hv)) return false;
        }
        return true;
    }

    // Returns true to stop the search (single-copy mode).
    bool extend(std::size_t pos) {
        if (pos == torder.size()) {
            SubgraphCopy c = make_copy();
            if (seen_images.insert(c.edge_image).second) found.push_back(std::move(c));
            return !enumerate_all;
        }
        if (pos == 0 && opts.anchor) {
            NodeId hv = opts.anchor->second;
            if (!host.has_node(hv) || !feasible(0, hv)) return false;
            assignment[0] = hv;
            host_used[host.index_of(hv)] = true;
            bool stop = extend(1);
            host_used[host.index_of(hv)] = false;
            return stop;
        }
        for (std::size_t hi = 0; hi < host.node_count(); ++hi) {
            if (host_used[hi]) continue;
            NodeId hv = host.nodes()[hi];
            if (!feasible(pos, hv)) continue;
            assignment[pos] = hv;
            host_used[hi] = true;
            bool stop = extend(pos + 1);
            host_used[hi] = false;
            if (stop) return true;
        }
        return false;
    }
};

void check_guard(const Graph& target, const OracleOptions& opts) {
    if (target.node_count() > opts.max_target_nodes) {
        throw Error("oracle refuses target with " + std::to_string(target.node_count()) +
                    " nodes (guard: " + std::to_string(opts.max_target_nodes) + ")");
    }
    if (opts.anchor && !target.has_node(opts.anchor->first)) {
        throw Error("anchor target node not in target graph");
    }
}

}  // namespace

std::optional<SubgraphCopy> oracle_contains(const Graph& host, const Graph& target,
                                            const OracleOptions& opts) {
    check_guard(target, opts);
    if (target.node_count() == 0) return SubgraphCopy{};
    if (target.node_count() > host.node_count()) return std::nullopt;
    Searcher s(host, target, opts, /*all=*/false);
    s.extend(0);
    if (s.found.empty()) return std::nullopt;
    return s.found.front();
}

std::vector<SubgraphCopy> oracle_enumerate(const Graph& host, const Graph& target,
                                           const OracleOptions& opts) {
    check_guard(target, opts);
    if (target.node_count() == 0 || target.node_count() > host.node_count()) return {};
    Searcher s(host, target, opts, /*all=*/true);
    s.extend(0);
    std::sort(s.found.begin(), s.found.end());
    return s.found;
}

}  // namespace congest
