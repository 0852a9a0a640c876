#include "congest/sparse_enum.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>
#include <string>

#include "congest/generators.hpp"

namespace congest {

namespace {

int peel_iteration_cap(std::size_t n, double C) {
    // Smallest r with (C/2)^r >= n, plus one.
    int r = 0;
    double bound = 1.0;
    while (bound < static_cast<double>(n)) {
        bound *= C / 2.0;
        ++r;
    }
    return r + 1;
}

int alpha_bound(int d, double C) {
    return static_cast<int>(std::ceil(C * static_cast<double>(d)));
}

// ---------------------------------------------------------------------------
// Peeling: one announcement round per iteration. A node removes itself when
// its degree among survivors is at most C*d and says so with a single bit;
// every edge is later oriented toward the endpoint with the larger
// (removal iteration, id) key, which is acyclic by construction.
// ---------------------------------------------------------------------------

struct PeelPublic {
    int d = 1;
    double C = 3.0;
    int iteration_cap = 1;
    SimParams params;
};

class PeelProgram : public NodeProgram {
public:
    PeelProgram(const PeelPublic* pub, const NodeInit& init)
        : pub_(pub), self_(init.id), active_degree_(init.degree) {}

    std::optional<BitString> step(const std::vector<BitString>& received) override {
        ++round_;
        if (round_ == 1) {
            BitString id_payload;
            id_payload.append_uint(self_, pub_->params.id_bits);
            return fragment(id_payload, pub_->params, 1)[0];
        }
        if (round_ == 2) {
            for (const BitString& msg : received) {
                BitString payload = reassemble({msg});
                BitReader r(payload);
                neighbor_ids_.push_back(r.read_uint(pub_->params.id_bits));
            }
            neighbor_iteration_.assign(neighbor_ids_.size(), -1);
        } else {
            int prev_iter = round_ - 3;  // iteration announced in the previous round
            for (std::size_t p = 0; p < received.size(); ++p) {
                if (received[p].size_bits() == 1 && received[p].bit(0)) {
                    neighbor_iteration_[p] = prev_iter;
                    --active_degree_;
                }
            }
        }
        int iter = round_ - 2;  // iteration decided this round
        if (iter >= pub_->iteration_cap) return std::nullopt;
        BitString out;
        bool removing = my_iteration_ < 0 &&
                        active_degree_ <= pub_->C * static_cast<double>(pub_->d);
        if (removing) my_iteration_ = iter;
        out.push_back(removing);
        return out;
    }

    NodeId self() const { return self_; }
    int removal_iteration() const { return my_iteration_; }
    const std::vector<NodeId>& neighbor_ids() const { return neighbor_ids_; }
    const std::vector<int>& neighbor_iterations() const { return neighbor_iteration_; }

    // Out-neighbors under the peeling orientation, locally determined.
    std::vector<NodeId> out_neighbor_ids() const {
        std::vector<NodeId> out;
        for (std::size_t p = 0; p < neighbor_ids_.size(); ++p) {
            if (points_away(my_iteration_, self_, neighbor_iteration_[p], neighbor_ids_[p])) {
                out.push_back(neighbor_ids_[p]);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    static bool points_away(int my_iter, NodeId me, int their_iter, NodeId them) {
        if (my_iter == their_iter) return me < them;  // same iteration: larger id is the head
        if (their_iter < 0) return true;  // survivor outlives every removed node
        if (my_iter < 0) return false;
        return my_iter < their_iter;
    }

protected:
    const PeelPublic* pub_;
    NodeId self_;
    int round_ = 0;
    int active_degree_;
    int my_iteration_ = -1;
    std::vector<NodeId> neighbor_ids_;
    std::vector<int> neighbor_iteration_;
};

std::vector<PhasePlan> peel_plan(const PeelPublic& pub) {
    return {{"ids", 1}, {"peel", pub.iteration_cap}};
}

PeelState collect_peel_state(const Graph& g, const std::vector<PeelProgram*>& programs,
                             const PeelPublic& pub) {
    PeelState st;
    st.threshold_constant = pub.C;
    st.degeneracy_input = pub.d;
    int max_iter = -1;
    for (PeelProgram* p : programs) {
        if (p->removal_iteration() < 0) {
            throw Error("degeneracy bound violated: peeling stalled with d = " +
                        std::to_string(pub.d));
        }
        st.last_iteration[p->self()] = p->removal_iteration();
        max_iter = std::max(max_iter, p->removal_iteration());
    }
    for (int i = 0; i <= max_iter + 1; ++i) {
        std::size_t size = 0;
        for (const auto& [v, iv] : st.last_iteration) {
            if (iv >= i) ++size;
        }
        st.iteration_sizes.push_back(size);
    }
    (void)g;
    return st;
}

Orientation orientation_from_peel(const Graph& g, const PeelState& st) {
    std::map<Edge, NodeId> head;
    for (const Edge& e : g.edges()) {
        int iu = st.last_iteration.at(e.first);
        int iv = st.last_iteration.at(e.second);
        head[e] = PeelProgram::points_away(iu, e.first, iv, e.second) ? e.second : e.first;
    }
    return Orientation(g, std::move(head));
}

// ---------------------------------------------------------------------------
// Local subgraph views assembled from broadcast out-edge sets.
// ---------------------------------------------------------------------------

struct LocalView {
    std::set<std::pair<NodeId, NodeId>> arcs;  // tail -> head
    std::map<NodeId, std::vector<NodeId>> und;

    void add_arc(NodeId a, NodeId b) {
        if (arcs.emplace(a, b).second) {
            und[a].push_back(b);
            und[b].push_back(a);
        }
    }
    void finalize() {
        for (auto& [v, nb] : und) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        }
    }
    bool has_arc(NodeId a, NodeId b) const { return arcs.count({a, b}) != 0; }
    bool adjacent(NodeId a, NodeId b) const {
        auto it = und.find(a);
        if (it == und.end()) return false;
        return std::binary_search(it->second.begin(), it->second.end(), b);
    }
    const std::vector<NodeId>& neighbors(NodeId v) const {
        static const std::vector<NodeId> none;
        auto it = und.find(v);
        return it == und.end() ? none : it->second;
    }
};

void extend_clique(const LocalView& view, std::vector<NodeId>& clique,
                   const std::vector<NodeId>& candidates, std::size_t from, std::size_t want,
                   std::vector<std::vector<NodeId>>& out) {
    if (clique.size() == want) {
        out.push_back(clique);
        return;
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
        NodeId c = candidates[i];
        bool ok = true;
        for (NodeId m : clique) {
            if (!view.adjacent(m, c)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        clique.push_back(c);
        extend_clique(view, clique, candidates, i + 1, want, out);
        clique.pop_back();
    }
}

// k-cliques containing self with self as the orientation sink: all other
// members must point at self.
std::vector<std::vector<NodeId>> local_cliques(const LocalView& view, NodeId self, int k) {
    std::vector<NodeId> in_neighbors;
    for (NodeId u : view.neighbors(self)) {
        if (view.has_arc(u, self)) in_neighbors.push_back(u);
    }
    std::vector<std::vector<NodeId>> out;
    std::vector<NodeId> clique;
    extend_clique(view, clique, in_neighbors, 0, static_cast<std::size_t>(k) - 1, out);
    for (auto& c : out) {
        c.push_back(self);
        std::sort(c.begin(), c.end());
    }
    return out;
}

// 4-cycles through self, as sequences (self, a, z, b).
std::vector<std::vector<NodeId>> local_c4(const LocalView& view, NodeId self) {
    std::vector<std::vector<NodeId>> out;
    const auto& nb = view.neighbors(self);
    for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            NodeId a = nb[i], b = nb[j];
            for (NodeId z : view.neighbors(a)) {
                if (z == self || z == a || z == b) continue;
                if (view.adjacent(b, z)) out.push_back({self, a, z, b});
            }
        }
    }
    return out;
}

// 5-cycles through self, as sequences (self, a, x, y, b).
std::vector<std::vector<NodeId>> local_c5(const LocalView& view, NodeId self) {
    std::vector<std::vector<NodeId>> out;
    const auto& nb = view.neighbors(self);
    for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            NodeId a = nb[i], b = nb[j];
            for (NodeId x : view.neighbors(a)) {
                if (x == self || x == a || x == b) continue;
                for (NodeId y : view.neighbors(x)) {
                    if (y == self || y == a || y == b || y == x) continue;
                    if (view.adjacent(b, y)) out.push_back({self, a, x, y, b});
                }
            }
        }
    }
    return out;
}

// Orientation of a cycle edge, readable by any node that saw the copy.
struct CycleArc {
    NodeId tail, head;
};

std::vector<CycleArc> cycle_arcs(const LocalView& view, const std::vector<NodeId>& cyc) {
    std::vector<CycleArc> arcs;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        NodeId a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        if (view.has_arc(a, b)) {
            arcs.push_back({a, b});
        } else if (view.has_arc(b, a)) {
            arcs.push_back({b, a});
        } else {
            throw Error("cycle edge missing an orientation in the local view");
        }
    }
    return arcs;
}

// Suppression rule for duplicate cycle reports: every node that can see the
// copy derives, from the cycle's own orientation, the set of nodes guaranteed
// to see it, and only the smallest one reports. The derivation mirrors what
// the gathered messages prove: x sees an arc a->b if a is x itself or a cycle
// neighbor of x, or (5-cycles) if a cycle neighbor u of x has the arc u->a.
bool designated_reporter(const LocalView& view, const std::vector<NodeId>& cyc, NodeId self,
                         bool two_hop) {
    std::vector<CycleArc> arcs = cycle_arcs(view, cyc);
    auto cycle_adjacent = [&](NodeId x, NodeId y) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            NodeId a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if ((a == x && b == y) || (a == y && b == x)) return true;
        }
        return false;
    };
    auto has_cycle_arc = [&](NodeId a, NodeId b) {
        for (const CycleArc& arc : arcs) {
            if (arc.tail == a && arc.head == b) return true;
        }
        return false;
    };
    auto sees_arc = [&](NodeId x, const CycleArc& arc) {
        if (arc.tail == x || cycle_adjacent(x, arc.tail)) return true;
        if (two_hop) {
            for (NodeId u : cyc) {
                if (cycle_adjacent(x, u) && has_cycle_arc(u, arc.tail)) return true;
            }
        }
        return false;
    };
    NodeId smallest_knower = UINT64_MAX;
    for (NodeId x : cyc) {
        bool knows = true;
        for (const CycleArc& arc : arcs) {
            if (!sees_arc(x, arc)) {
                knows = false;
                break;
            }
        }
        if (knows) smallest_knower = std::min(smallest_knower, x);
    }
    if (smallest_knower == UINT64_MAX) {
        throw Error("cycle orientation matches no coverage pattern");
    }
    return smallest_knower == self;
}

// ---------------------------------------------------------------------------
// Enumeration programs (congest mode): peel, broadcast out-neighbor sets
// (and out-going 2-paths for 5-cycles), then search the local view.
// ---------------------------------------------------------------------------

struct EnumPublic : PeelPublic {
    EnumTarget target = EnumTarget::clique;
    int k = 3;
    bool dedup = false;
    int alpha = 3;
    int out_cap = 1;
    int paths_cap = 0;  // 5-cycles only

    std::vector<PhasePlan> plan() const {
        std::vector<PhasePlan> p = {{"ids", 1}, {"peel", iteration_cap}, {"outsets", out_cap}};
        if (target == EnumTarget::c5) p.push_back({"paths", paths_cap});
        return p;
    }
    int budget() const {
        return 1 + iteration_cap + out_cap + (target == EnumTarget::c5 ? paths_cap : 0);
    }
};

class EnumProgram : public PeelProgram {
public:
    EnumProgram(const EnumPublic* pub, const NodeInit& init)
        : PeelProgram(pub, init), epub_(pub) {}

    std::optional<BitString> step(const std::vector<BitString>& received) override {
        int peel_rounds = 1 + epub_->iteration_cap;
        if (round_ < peel_rounds) {
            return PeelProgram::step(received);
        }
        ++round_;
        int outset_first = peel_rounds + 1;
        int outset_last = peel_rounds + epub_->out_cap;
        int paths_last = outset_last + epub_->paths_cap;
        if (round_ == outset_first) {
            // Final peel announcements arrive now.
            int prev_iter = round_ - 3;
            for (std::size_t p = 0; p < received.size(); ++p) {
                if (received[p].size_bits() == 1 && received[p].bit(0)) {
                    neighbor_iteration_[p] = prev_iter;
                }
            }
            my_out_ = out_neighbor_ids();
            BitString payload;
            payload.append_uint(my_out_.size(), kCountBits);
            for (NodeId u : my_out_) payload.append_uint(u, epub_->params.id_bits);
            pending_ = fragment(payload, epub_->params, epub_->out_cap);
        }
        if (round_ >= outset_first && round_ <= outset_last) {
            if (round_ > outset_first) accumulate(received);
            return pending_[round_ - outset_first];
        }
        if (round_ == outset_last + 1) {
            accumulate(received);
            decode_outsets();
            if (epub_->target != EnumTarget::c5) {
                search();
                return std::nullopt;
            }
            encode_paths();
        }
        if (round_ <= paths_last) {
            if (round_ > outset_last + 1) accumulate(received);
            return pending_[round_ - (outset_last + 1)];
        }
        accumulate(received);
        decode_paths();
        search();
        return std::nullopt;
    }

    std::string output_summary() const override {
        return copies_.empty() ? "" : "copies=" + std::to_string(copies_.size());
    }

    const std::vector<std::vector<NodeId>>& copies() const { return copies_; }

private:
    const EnumPublic* epub_;
    std::vector<NodeId> my_out_;
    std::vector<BitString> pending_;
    std::vector<std::vector<BitString>> buf_;
    std::map<NodeId, std::vector<NodeId>> received_out_;  // neighbor -> N_out
    LocalView view_;
    std::vector<std::vector<NodeId>> copies_;  // cliques: sorted sets; cycles: sequences

    void accumulate(const std::vector<BitString>& received) {
        if (buf_.empty()) buf_.resize(received.size());
        for (std::size_t p = 0; p < received.size(); ++p) buf_[p].push_back(received[p]);
    }

    void decode_outsets() {
        for (std::size_t p = 0; p < buf_.size(); ++p) {
            BitString payload = reassemble(buf_[p]);
            BitReader r(payload);
            std::uint64_t count = r.read_uint(kCountBits);
            if (count > static_cast<std::uint64_t>(epub_->alpha)) {
                throw Error("out-neighbor set exceeds the orientation bound");
            }
            std::vector<NodeId> out;
            for (std::uint64_t i = 0; i < count; ++i) out.push_back(r.read_uint(epub_->params.id_bits));
            received_out_[neighbor_ids_[p]] = std::move(out);
            buf_[p].clear();
        }
        for (NodeId w : my_out_) view_.add_arc(self_, w);
        for (const auto& [u, outs] : received_out_) {
            for (NodeId w : outs) view_.add_arc(u, w);
        }
        view_.finalize();
    }

    void encode_paths() {
        BitString payload;
        std::vector<std::pair<NodeId, NodeId>> paths;  // (u, w): self -> u -> w
        for (NodeId u : my_out_) {
            auto it = received_out_.find(u);
            if (it == received_out_.end()) continue;
            for (NodeId w : it->second) paths.emplace_back(u, w);
        }
        if (paths.size() > static_cast<std::size_t>(epub_->alpha) *
                               static_cast<std::size_t>(epub_->alpha)) {
            throw Error("outgoing 2-path set exceeds the orientation bound");
        }
        payload.append_uint(paths.size(), kCountBits);
        for (const auto& [u, w] : paths) {
            payload.append_uint(u, epub_->params.id_bits);
            payload.append_uint(w, epub_->params.id_bits);
        }
        pending_ = fragment(payload, epub_->params, epub_->paths_cap);
    }

    void decode_paths() {
        // Outgoing 2-paths are used from every neighbor: the orientation that
        // splits a 5-cycle into two source-to-sink halves is visible to no
        // node otherwise (the sink next to both halves needs the 2-path set
        // of an in-neighbor).
        for (std::size_t p = 0; p < buf_.size(); ++p) {
            BitString payload = reassemble(buf_[p]);
            BitReader r(payload);
            std::uint64_t count = r.read_uint(kCountBits);
            for (std::uint64_t i = 0; i < count; ++i) {
                NodeId u = r.read_uint(epub_->params.id_bits);
                NodeId w = r.read_uint(epub_->params.id_bits);
                view_.add_arc(u, w);
            }
            buf_[p].clear();
        }
        view_.finalize();
    }

    void search() {
        switch (epub_->target) {
            case EnumTarget::clique:
                copies_ = local_cliques(view_, self_, epub_->k);
                break;
            case EnumTarget::c4:
                for (auto& cyc : local_c4(view_, self_)) {
                    if (!epub_->dedup || designated_reporter(view_, cyc, self_, false)) {
                        copies_.push_back(cyc);
                    }
                }
                break;
            case EnumTarget::c5:
                for (auto& cyc : local_c5(view_, self_)) {
                    if (!epub_->dedup || designated_reporter(view_, cyc, self_, true)) {
                        copies_.push_back(cyc);
                    }
                }
                break;
        }
    }
};

// ---------------------------------------------------------------------------
// Supported mode: the support graph and its orientation are global knowledge,
// so only input-edge presence travels, as bitmaps in the canonical out-edge
// (and out-going 2-path) order of the support orientation.
// ---------------------------------------------------------------------------

struct SupportedPublic {
    const Graph* support = nullptr;
    const Orientation* sigma = nullptr;
    EnumTarget target = EnumTarget::clique;
    int k = 3;
    bool dedup = false;
    SimParams params;
    int out_cap = 1;
    int paths_cap = 0;
    std::size_t max_out = 0;
    std::size_t max_paths = 0;

    std::vector<PhasePlan> plan() const {
        std::vector<PhasePlan> p = {{"edgesets", out_cap}};
        if (target == EnumTarget::c5) p.push_back({"pathsets", paths_cap});
        return p;
    }
    int budget() const { return out_cap + (target == EnumTarget::c5 ? paths_cap : 0); }

    std::vector<std::pair<NodeId, NodeId>> support_paths(NodeId u) const {
        std::vector<std::pair<NodeId, NodeId>> paths;
        for (NodeId w1 : sigma->out_neighbors(u)) {
            for (NodeId w2 : sigma->out_neighbors(w1)) paths.emplace_back(w1, w2);
        }
        return paths;
    }
};

class SupportedProgram : public NodeProgram {
public:
    SupportedProgram(const SupportedPublic* pub, const Graph* input, const NodeInit& init)
        : pub_(pub), self_(init.id) {
        for (NodeId u : pub_->support->neighbors(self_)) {
            neighbor_ids_.push_back(u);
            in_input_.push_back(input->has_node(self_) && input->has_node(u) &&
                                input->has_edge(self_, u));
        }
    }

    std::optional<BitString> step(const std::vector<BitString>& received) override {
        ++round_;
        int paths_first = pub_->out_cap + 1;
        int paths_last = pub_->out_cap + pub_->paths_cap;
        if (round_ == 1) {
            BitString payload;
            for (NodeId w : pub_->sigma->out_neighbors(self_)) {
                payload.push_back(input_edge(self_, w));
            }
            pending_ = fragment(payload, pub_->params, pub_->out_cap);
        }
        if (round_ <= pub_->out_cap) {
            if (round_ > 1) accumulate(received);
            return pending_[round_ - 1];
        }
        if (round_ == paths_first) {
            accumulate(received);
            decode_edgesets();
            if (pub_->target != EnumTarget::c5) {
                search();
                return std::nullopt;
            }
            encode_pathsets();
        }
        if (round_ <= paths_last) {
            if (round_ > paths_first) accumulate(received);
            return pending_[round_ - paths_first];
        }
        accumulate(received);
        decode_pathsets();
        search();
        return std::nullopt;
    }

    std::string output_summary() const override {
        return copies_.empty() ? "" : "copies=" + std::to_string(copies_.size());
    }

    const std::vector<std::vector<NodeId>>& copies() const { return copies_; }

private:
    const SupportedPublic* pub_;
    NodeId self_;
    int round_ = 0;
    std::vector<NodeId> neighbor_ids_;
    std::vector<bool> in_input_;  // by port: own incident edge present in input
    std::vector<BitString> pending_;
    std::vector<std::vector<BitString>> buf_;
    std::map<NodeId, std::vector<bool>> edge_bits_;  // neighbor -> out-edge presence
    LocalView view_;
    std::vector<std::vector<NodeId>> copies_;

    bool input_edge(NodeId a, NodeId b) const {
        // Own incident edges only; anything else must arrive by message.
        for (std::size_t p = 0; p < neighbor_ids_.size(); ++p) {
            if ((a == self_ && neighbor_ids_[p] == b) || (b == self_ && neighbor_ids_[p] == a)) {
                return in_input_[p];
            }
        }
        throw Error("node asked about a non-incident input edge");
    }

    void accumulate(const std::vector<BitString>& received) {
        if (buf_.empty()) buf_.resize(received.size());
        for (std::size_t p = 0; p < received.size(); ++p) buf_[p].push_back(received[p]);
    }

    void decode_edgesets() {
        for (std::size_t p = 0; p < buf_.size(); ++p) {
            BitString payload = reassemble(buf_[p]);
            NodeId u = neighbor_ids_[p];
            std::size_t expect = pub_->sigma->out_neighbors(u).size();
            if (payload.size_bits() != expect) throw Error("edge bitmap length mismatch");
            std::vector<bool> bits;
            for (std::size_t i = 0; i < expect; ++i) bits.push_back(payload.bit(i));
            edge_bits_[u] = std::move(bits);
            buf_[p].clear();
        }
        // Local view: input edges u->w for u in the closed input-neighborhood.
        for (std::size_t i = 0; i < pub_->sigma->out_neighbors(self_).size(); ++i) {
            NodeId w = pub_->sigma->out_neighbors(self_)[i];
            if (input_edge(self_, w)) view_.add_arc(self_, w);
        }
        for (std::size_t p = 0; p < neighbor_ids_.size(); ++p) {
            if (!in_input_[p]) continue;  // restrict to input neighbors
            NodeId u = neighbor_ids_[p];
            const auto& outs = pub_->sigma->out_neighbors(u);
            const auto& bits = edge_bits_.at(u);
            for (std::size_t i = 0; i < outs.size(); ++i) {
                if (bits[i]) view_.add_arc(u, outs[i]);
            }
        }
        view_.finalize();
    }

    void encode_pathsets() {
        BitString payload;
        for (const auto& [w1, w2] : pub_->support_paths(self_)) {
            bool first_leg = input_edge(self_, w1);
            const auto& outs = pub_->sigma->out_neighbors(w1);
            std::size_t idx = static_cast<std::size_t>(
                std::lower_bound(outs.begin(), outs.end(), w2) - outs.begin());
            bool second_leg = edge_bits_.at(w1)[idx];
            payload.push_back(first_leg && second_leg);
        }
        pending_ = fragment(payload, pub_->params, pub_->paths_cap);
    }

    void decode_pathsets() {
        // As in the congest-mode algorithm, 2-path sets come from every input
        // neighbor regardless of the edge's orientation.
        for (std::size_t p = 0; p < buf_.size(); ++p) {
            NodeId u = neighbor_ids_[p];
            if (!in_input_[p]) {
                buf_[p].clear();
                continue;
            }
            BitString payload = reassemble(buf_[p]);
            auto paths = pub_->support_paths(u);
            if (payload.size_bits() != paths.size()) throw Error("path bitmap length mismatch");
            for (std::size_t i = 0; i < paths.size(); ++i) {
                if (payload.bit(i)) view_.add_arc(paths[i].first, paths[i].second);
            }
            buf_[p].clear();
        }
        view_.finalize();
    }

    void search() {
        switch (pub_->target) {
            case EnumTarget::clique:
                copies_ = local_cliques(view_, self_, pub_->k);
                break;
            case EnumTarget::c4:
                for (auto& cyc : local_c4(view_, self_)) {
                    if (!pub_->dedup || designated_reporter(view_, cyc, self_, false)) {
                        copies_.push_back(cyc);
                    }
                }
                break;
            case EnumTarget::c5:
                for (auto& cyc : local_c5(view_, self_)) {
                    if (!pub_->dedup || designated_reporter(view_, cyc, self_, true)) {
                        copies_.push_back(cyc);
                    }
                }
                break;
        }
    }
};

// ---------------------------------------------------------------------------
// Runners.
// ---------------------------------------------------------------------------

// Cycle sequences are canonicalized (lexicographically smallest rotation or
// reflection) so equal copies serialize identically.
std::vector<NodeId> canonical_cycle(const std::vector<NodeId>& seq) {
    std::vector<NodeId> best;
    const std::size_t k = seq.size();
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t start = 0; start < k; ++start) {
            std::vector<NodeId> cand;
            for (std::size_t i = 0; i < k; ++i) {
                std::size_t idx = dir == 0 ? (start + i) % k : (start + k - i) % k;
                cand.push_back(seq[idx]);
            }
            if (best.empty() || cand < best) best = cand;
        }
    }
    return best;
}

SubgraphCopy clique_copy(const Graph& g, const std::vector<NodeId>& members) {
    SubgraphCopy c;
    std::set<Edge> image;
    for (std::size_t i = 0; i < members.size(); ++i) {
        c.mapping.emplace_back(i, members[i]);
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            image.insert(make_edge(members[i], members[j]));
        }
    }
    c.edge_image.assign(image.begin(), image.end());
    if (!validate_copy(g, complete_graph(members.size()), c)) {
        throw Error("enumeration produced an invalid clique");
    }
    return c;
}

SubgraphCopy cycle_copy(const Graph& g, const std::vector<NodeId>& seq) {
    std::vector<NodeId> canon = canonical_cycle(seq);
    SubgraphCopy c;
    std::set<Edge> image;
    for (std::size_t i = 0; i < canon.size(); ++i) {
        c.mapping.emplace_back(i, canon[i]);
        image.insert(make_edge(canon[i], canon[(i + 1) % canon.size()]));
    }
    c.edge_image.assign(image.begin(), image.end());
    if (!validate_copy(g, cycle_graph(canon.size()), c)) {
        throw Error("enumeration produced an invalid cycle");
    }
    return c;
}

CopySet collect_copies(const Graph& g, EnumTarget target,
                       const std::vector<std::pair<NodeId, std::vector<std::vector<NodeId>>>>&
                           reports) {
    CopySet cs;
    std::map<std::vector<Edge>, SubgraphCopy> dedup;
    for (const auto& [reporter, list] : reports) {
        for (const auto& item : list) {
            SubgraphCopy c = target == EnumTarget::clique ? clique_copy(g, item)
                                                          : cycle_copy(g, item);
            auto [it, inserted] = dedup.emplace(c.edge_image, c);
            if (inserted || reporter < cs.owner.at(c.edge_image)) {
                cs.owner[c.edge_image] = reporter;
                it->second = c;
            }
        }
    }
    for (auto& [image, copy] : dedup) cs.copies.push_back(std::move(copy));
    std::sort(cs.copies.begin(), cs.copies.end());
    return cs;
}

void validate_enum_options(const Graph& g, const EnumOptions& opts, EnumTarget target) {
    if (opts.C <= 2.0) throw Error("peel constant C must exceed 2");
    if (opts.d < 0) throw Error("degeneracy bound must be non-negative");
    if (target == EnumTarget::clique) {
        if (opts.k < 2) throw Error("clique enumeration requires k >= 2");
        if (opts.k > opts.d + 1) {
            throw Error("clique size " + std::to_string(opts.k) +
                        " impossible in a graph of degeneracy " + std::to_string(opts.d));
        }
    }
    (void)g;
}

EnumResult run_congest_enum(const Graph& g, const EnumOptions& opts, EnumTarget target,
                            const SimConfig& cfg) {
    validate_enum_options(g, opts, target);
    auto pub = std::make_shared<EnumPublic>();
    pub->d = opts.d;
    pub->C = opts.C;
    pub->params = SimParams::derive(g, cfg);
    pub->iteration_cap = peel_iteration_cap(pub->params.n, opts.C);
    pub->target = target;
    pub->k = opts.k;
    pub->dedup = opts.dedup;
    pub->alpha = alpha_bound(opts.d, opts.C);
    pub->out_cap = chunks_needed(kCountBits + static_cast<std::size_t>(pub->alpha) *
                                                  pub->params.id_bits,
                                 pub->params);
    if (target == EnumTarget::c5) {
        pub->paths_cap = chunks_needed(
            kCountBits + static_cast<std::size_t>(pub->alpha) * pub->alpha * 2 *
                             pub->params.id_bits,
            pub->params);
    }

    std::vector<EnumProgram*> programs;
    SimRun sim = run(
        g,
        [&pub, &programs](const NodeInit& init) {
            auto p = std::make_unique<EnumProgram>(pub.get(), init);
            programs.push_back(p.get());
            return p;
        },
        cfg, pub->plan());

    // The peel record doubles as a consistency check on the protocol.
    std::vector<PeelProgram*> peelers(programs.begin(), programs.end());
    PeelState st = collect_peel_state(g, peelers, *pub);

    EnumResult res;
    std::vector<std::pair<NodeId, std::vector<std::vector<NodeId>>>> reports;
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        reports.emplace_back(g.nodes()[i], programs[i]->copies());
    }
    res.copies = collect_copies(g, target, reports);
    res.metrics = metrics(sim.transcript, g);
    res.round_budget = pub->budget();
    res.orientation_rounds = 1 + pub->iteration_cap;
    (void)st;
    return res;
}

}  // namespace

OrientationRun distributed_orientation(const Graph& g, int d, double C, const SimConfig& cfg) {
    if (C <= 2.0) throw Error("peel constant C must exceed 2");
    if (d < 0) throw Error("degeneracy bound must be non-negative");
    auto pub = std::make_shared<PeelPublic>();
    pub->d = d;
    pub->C = C;
    pub->params = SimParams::derive(g, cfg);
    pub->iteration_cap = peel_iteration_cap(pub->params.n, C);

    std::vector<PeelProgram*> programs;
    SimRun sim = run(
        g,
        [&pub, &programs](const NodeInit& init) {
            auto p = std::make_unique<PeelProgram>(pub.get(), init);
            programs.push_back(p.get());
            return p;
        },
        cfg, peel_plan(*pub));

    PeelState st = collect_peel_state(g, programs, *pub);
    OrientationRun out{orientation_from_peel(g, st), std::move(st), metrics(sim.transcript, g),
                       1 + pub->iteration_cap};
    return out;
}

EnumResult enumerate_cliques(const Graph& g, const EnumOptions& opts, const SimConfig& cfg) {
    return run_congest_enum(g, opts, EnumTarget::clique, cfg);
}

EnumResult enumerate_c4(const Graph& g, const EnumOptions& opts, const SimConfig& cfg) {
    return run_congest_enum(g, opts, EnumTarget::c4, cfg);
}

EnumResult enumerate_c5(const Graph& g, const EnumOptions& opts, const SimConfig& cfg) {
    return run_congest_enum(g, opts, EnumTarget::c5, cfg);
}

Orientation supported_orientation(const Graph& support) {
    return exact_d_orientation(support);
}

EnumResult supported_enumerate(const Graph& support, const Graph& input, EnumTarget target,
                               const EnumOptions& opts, const SimConfig& cfg) {
    for (NodeId v : input.nodes()) {
        if (!support.has_node(v)) throw Error("input node missing from the support graph");
    }
    for (const Edge& e : input.edges()) {
        if (!support.has_edge(e.first, e.second)) {
            throw Error("input edge not present in the support graph");
        }
    }
    if (target == EnumTarget::clique && opts.k < 2) throw Error("clique enumeration requires k >= 2");

    auto pub = std::make_shared<SupportedPublic>();
    Orientation sigma = supported_orientation(support);
    pub->support = &support;
    pub->sigma = &sigma;
    pub->target = target;
    pub->k = opts.k;
    pub->dedup = opts.dedup;
    pub->params = SimParams::derive(support, cfg);
    pub->max_out = sigma.max_outdegree();
    for (NodeId v : support.nodes()) {
        pub->max_paths = std::max(pub->max_paths, pub->support_paths(v).size());
    }
    pub->out_cap = std::max(1, chunks_needed(pub->max_out, pub->params));
    if (target == EnumTarget::c5) {
        pub->paths_cap = std::max(1, chunks_needed(pub->max_paths, pub->params));
    }

    std::vector<SupportedProgram*> programs;
    SimRun sim = run(
        support,
        [&pub, &input, &programs](const NodeInit& init) {
            auto p = std::make_unique<SupportedProgram>(pub.get(), &input, init);
            programs.push_back(p.get());
            return p;
        },
        cfg, pub->plan());

    EnumResult res;
    std::vector<std::pair<NodeId, std::vector<std::vector<NodeId>>>> reports;
    for (std::size_t i = 0; i < support.node_count(); ++i) {
        reports.emplace_back(support.nodes()[i], programs[i]->copies());
    }
    res.copies = collect_copies(support, target, reports);
    res.metrics = metrics(sim.transcript, support);
    res.round_budget = pub->budget();
    res.orientation_rounds = 0;
    return res;
}

}  // namespace congest
