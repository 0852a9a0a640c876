#include "congest/lower_bound.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "congest/generators.hpp"
#include "congest/oracle.hpp"

namespace congest {

LBInstance build_instance(int k, int N, const std::set<int>& A, const std::set<int>& B) {
    if (k < 6) throw Error("lower-bound construction requires k >= 6");
    if (N < 1) throw Error("lower-bound construction requires N >= 1");
    const int M = N * N;
    for (int x : A) {
        if (x < 1 || x > M) throw Error("A contains a label outside [N^2]");
    }
    for (int x : B) {
        if (x < 1 || x > M) throw Error("B contains a label outside [N^2]");
    }

    LBInstance inst;
    inst.k = k;
    inst.N = N;
    inst.A = A;
    inst.B = B;
    inst.ell1 = k / 2;
    inst.ell2 = (k + 1) / 2;

    // Shell ids: side A gets 0..2N-1, side B gets 2N..4N-1; the shell node
    // with label t (1..2N) sits at offset t-1. Labels 1..N are the left side
    // of the bipartition, N+1..2N the right side.
    auto shell_a = [&](int label) { return static_cast<NodeId>(label - 1); };
    auto shell_b = [&](int label) { return static_cast<NodeId>(2 * N + label - 1); };

    std::vector<NodeId> nodes;
    std::vector<Edge> edges;
    for (int t = 1; t <= 2 * N; ++t) {
        nodes.push_back(shell_a(t));
        nodes.push_back(shell_b(t));
        inst.side_a.push_back(shell_a(t));
        inst.side_b.push_back(shell_b(t));
    }
    for (int t = 1; t <= 2 * N; ++t) {
        Edge cut = make_edge(shell_a(t), shell_b(t));
        edges.push_back(cut);
        inst.cut_edges.push_back(cut);
    }

    NodeId next_id = static_cast<NodeId>(4 * N);
    auto add_path = [&](NodeId from, NodeId to, int path_edges, std::vector<NodeId>& side,
                        std::vector<NodeId>& interior) {
        NodeId at = from;
        for (int s = 1; s < path_edges; ++s) {
            NodeId mid = next_id++;
            nodes.push_back(mid);
            side.push_back(mid);
            interior.push_back(mid);
            edges.push_back(make_edge(at, mid));
            at = mid;
        }
        edges.push_back(make_edge(at, to));
    };

    // Slot (left i, right j) carries label (i-1)*N + j on both sides.
    for (char side : {'A', 'B'}) {
        const std::set<int>& keep = side == 'A' ? A : B;
        for (int i = 1; i <= N; ++i) {
            for (int j = 1; j <= N; ++j) {
                LBInstance::EdgeSlot slot;
                slot.label = (i - 1) * N + j;
                slot.side = side;
                slot.left = side == 'A' ? shell_a(i) : shell_b(i);
                slot.right = side == 'A' ? shell_a(N + j) : shell_b(N + j);
                slot.present = keep.count(slot.label) != 0;
                if (slot.present) {
                    int path_edges = side == 'A' ? inst.ell1 - 1 : inst.ell2 - 1;
                    add_path(slot.left, slot.right, path_edges,
                             side == 'A' ? inst.side_a : inst.side_b, slot.path_interior);
                }
                inst.slots.push_back(std::move(slot));
            }
        }
    }

    inst.graph = Graph(std::move(nodes), std::move(edges));
    std::sort(inst.side_a.begin(), inst.side_a.end());
    std::sort(inst.side_b.begin(), inst.side_b.end());
    return inst;
}

namespace {

// The witness orientation: path edges point away from a fixed interior node
// of each path, cut edges point from side A to side B.
Orientation witness_orientation(const LBInstance& inst) {
    std::map<Edge, NodeId> head;
    for (const Edge& cut : inst.cut_edges) {
        // Shell-A ids are smaller by construction.
        head[cut] = std::max(cut.first, cut.second);
    }
    for (const auto& slot : inst.slots) {
        if (!slot.present) continue;
        std::vector<NodeId> chain;
        chain.push_back(slot.left);
        chain.insert(chain.end(), slot.path_interior.begin(), slot.path_interior.end());
        chain.push_back(slot.right);
        // Orient away from the first interior node.
        head[make_edge(chain[0], chain[1])] = chain[0];
        for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
            head[make_edge(chain[i], chain[i + 1])] = chain[i + 1];
        }
    }
    return Orientation(inst.graph, std::move(head));
}

bool within_one_side(const SubgraphCopy& copy, const std::vector<NodeId>& side) {
    for (const auto& [t, h] : copy.mapping) {
        if (!std::binary_search(side.begin(), side.end(), h)) return false;
    }
    return true;
}

}  // namespace

LBReport verify_instance(const LBInstance& inst) {
    if (inst.N > 5 || inst.k > 8) {
        throw Error("verify_instance guard: N <= 5 and k <= 8");
    }
    LBReport rep;
    std::ostringstream details;

    bool intersects = false;
    for (int x : inst.A) intersects |= inst.B.count(x) != 0;

    OracleOptions opts;
    std::vector<SubgraphCopy> cycles =
        oracle_enumerate(inst.graph, cycle_graph(inst.k), opts);
    rep.oracle_found_cycle = !cycles.empty();
    rep.cycle_iff_intersection = rep.oracle_found_cycle == intersects;
    details << "k-cycles found: " << cycles.size() << ", A∩B "
            << (intersects ? "nonempty" : "empty") << "\n";

    rep.no_one_sided_cycle = true;
    for (const SubgraphCopy& c : cycles) {
        if (within_one_side(c, inst.side_a) || within_one_side(c, inst.side_b)) {
            rep.no_one_sided_cycle = false;
        }
    }

    DegeneracyResult deg = degeneracy(inst.graph);
    Orientation witness = witness_orientation(inst);
    rep.degeneracy_at_most_two =
        deg.degeneracy <= 2 && witness.max_outdegree() <= 2 && is_acyclic(witness);
    details << "degeneracy: " << deg.degeneracy << ", witness max outdeg "
            << witness.max_outdegree() << "\n";

    rep.cut_size_ok = inst.cut_edges.size() == static_cast<std::size_t>(2 * inst.N);

    std::size_t node_bound = static_cast<std::size_t>(inst.k - 4) * inst.N * inst.N +
                             4 * static_cast<std::size_t>(inst.N);
    std::size_t edge_bound = static_cast<std::size_t>(inst.k - 2) * inst.N * inst.N +
                             2 * static_cast<std::size_t>(inst.N);
    rep.size_bounds_ok = inst.graph.node_count() <= node_bound &&
                         inst.graph.edge_count() <= edge_bound;
    details << "nodes " << inst.graph.node_count() << " <= " << node_bound << ", edges "
            << inst.graph.edge_count() << " <= " << edge_bound;

    rep.details = details.str();
    return rep;
}

std::string instance_metadata_json(const LBInstance& inst) {
    std::ostringstream out;
    auto list = [&](const auto& xs, auto fmt) {
        out << "[";
        bool first = true;
        for (const auto& x : xs) {
            if (!first) out << ",";
            first = false;
            fmt(x);
        }
        out << "]";
    };
    out << "{";
    out << "\"k\":" << inst.k << ",\"N\":" << inst.N;
    out << ",\"ell1\":" << inst.ell1 << ",\"ell2\":" << inst.ell2;
    out << ",\"A\":";
    list(inst.A, [&](int x) { out << x; });
    out << ",\"B\":";
    list(inst.B, [&](int x) { out << x; });
    out << ",\"side_a\":";
    list(inst.side_a, [&](NodeId x) { out << x; });
    out << ",\"side_b\":";
    list(inst.side_b, [&](NodeId x) { out << x; });
    out << ",\"cut_edges\":";
    list(inst.cut_edges, [&](const Edge& e) { out << "[" << e.first << "," << e.second << "]"; });
    out << ",\"slots\":";
    list(inst.slots, [&](const LBInstance::EdgeSlot& s) {
        out << "{\"label\":" << s.label << ",\"side\":\"" << s.side << "\",\"left\":" << s.left
            << ",\"right\":" << s.right << ",\"present\":" << (s.present ? "true" : "false")
            << ",\"path_interior\":";
        list(s.path_interior, [&](NodeId x) { out << x; });
        out << "}";
    });
    out << "}";
    return out.str();
}

}  // namespace congest
