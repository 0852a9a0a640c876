#include "congest/detect.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "congest/generators.hpp"

namespace congest {

namespace {

constexpr NodeId kNoHost = UINT64_MAX;

using FamilyMap = std::map<Member, Witness>;

// Duplicate sets keep the lexicographically smallest witness sequence.
void add_min_witness(FamilyMap& fam, Member m, Witness w) {
    auto it = fam.find(m);
    if (it == fam.end()) {
        fam.emplace(std::move(m), std::move(w));
    } else if (w < it->second) {
        it->second = std::move(w);
    }
}

SetFamily to_family(const FamilyMap& fam) {
    SetFamily f = SetFamily::with_witnesses();
    for (const auto& [m, w] : fam) f.add(m, w);
    return f;
}

FamilyMap to_map(const SetFamily& f) {
    FamilyMap m;
    for (std::size_t i = 0; i < f.size(); ++i) m.emplace(f.members()[i], f.witness(i));
    return m;
}

// Round schedule shared by one run: phase 0 is the id exchange, later phases
// broadcast one fragmented payload each.
struct Schedule {
    std::vector<PhasePlan> plan;
    std::vector<std::pair<int, int>> task_of_round;  // round-1 -> (phase, chunk)

    void build() {
        for (std::size_t ph = 0; ph < plan.size(); ++ph) {
            for (int c = 0; c < plan[ph].rounds; ++c) {
                task_of_round.emplace_back(static_cast<int>(ph), c);
            }
        }
    }
    int total_rounds() const { return static_cast<int>(task_of_round.size()); }
};

// ---------------------------------------------------------------------------
// Path and cycle detection.
//
// Each node maintains, per level l, a pruned representative family of node
// sets of l-edge paths ending at it, annotated with the path sequence as
// witness; level-l members carry l+1 nodes. Phase l (l = 2..path_len)
// broadcasts the level l-1 families; anchored variants keep one family slot
// per anchor so all instances share one oblivious schedule.
// ---------------------------------------------------------------------------

struct PathPublic {
    int path_len = 1;
    std::vector<NodeId> anchors;  // empty: free paths (single slot)
    SimParams params;
    Schedule sched;
    std::vector<int> caps;  // caps[l]: chunks of phase l, l in [2, path_len]

    std::size_t slots() const { return anchors.empty() ? 1 : anchors.size(); }

    std::uint64_t max_members(int level) const {
        return binomial(static_cast<unsigned>(path_len + 1), static_cast<unsigned>(level + 1));
    }
    std::size_t slot_bits(int level) const {
        return kCountBits + max_members(level) * static_cast<std::size_t>(level + 1) *
                                static_cast<std::size_t>(params.id_bits);
    }

    void build() {
        sched.plan.push_back({"ids", 1});
        caps.assign(path_len + 1, 0);
        for (int l = 2; l <= path_len; ++l) {
            caps[l] = chunks_needed(slots() * slot_bits(l - 1), params);
            sched.plan.push_back({"level" + std::to_string(l), caps[l]});
        }
        sched.build();
    }
};

void encode_family_slot(BitString& out, const SetFamily& fam, int ids_per_member,
                        std::uint64_t max_members, std::size_t slot_bits, int id_bits) {
    std::size_t start = out.size_bits();
    if (fam.size() > max_members) {
        throw Error("family of size " + std::to_string(fam.size()) +
                    " exceeds its bound " + std::to_string(max_members));
    }
    out.append_uint(fam.size(), kCountBits);
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const Witness& w = fam.witness(i);
        if (w.size() != static_cast<std::size_t>(ids_per_member)) {
            throw Error("witness length mismatch in family encoding");
        }
        for (NodeId x : w) out.append_uint(x, id_bits);
    }
    while (out.size_bits() < start + slot_bits) out.push_back(false);
}

SetFamily decode_family_slot(BitReader& r, std::size_t slot_start, int ids_per_member,
                             std::uint64_t max_members, std::size_t slot_bits, int id_bits) {
    r.seek(slot_start);
    std::uint64_t count = r.read_uint(kCountBits);
    if (count > max_members) throw Error("decoded family exceeds its bound");
    SetFamily fam = SetFamily::with_witnesses();
    for (std::uint64_t i = 0; i < count; ++i) {
        Witness w;
        for (int x = 0; x < ids_per_member; ++x) w.push_back(r.read_uint(id_bits));
        Member m = w;
        std::sort(m.begin(), m.end());
        fam.add(std::move(m), std::move(w));
    }
    r.seek(slot_start + slot_bits);
    return fam;
}

class PathProgram : public NodeProgram {
public:
    PathProgram(const PathPublic* pub, const NodeInit& init)
        : pub_(pub), self_(init.id), degree_(init.degree) {
        chunk_buf_.resize(degree_);
    }

    std::optional<BitString> step(const std::vector<BitString>& received) override {
        ++round_;
        if (round_ > 1) {
            auto [phase, chunk] = pub_->sched.task_of_round[round_ - 2];
            if (phase == 0) {
                record_neighbor_ids(received);
                build_level1();
                if (pub_->path_len == 1) {
                    finalize();
                    return std::nullopt;
                }
                encode_pending(1);
            } else {
                int level = phase;  // phase l broadcasts level l-1, builds level l
                accumulate(received);
                if (chunk == pub_->caps[level + 1] - 1) {
                    advance_level(level + 1);
                    if (level + 1 == pub_->path_len) {
                        finalize();
                        return std::nullopt;
                    }
                    encode_pending(level + 1);
                }
            }
        }
        auto [phase, chunk] = pub_->sched.task_of_round[round_ - 1];
        if (phase == 0) {
            BitString id_payload;
            id_payload.append_uint(self_, pub_->params.id_bits);
            return fragment(id_payload, pub_->params, 1)[0];
        }
        return pending_[chunk];
    }

    std::string output_summary() const override { return found_ ? "found" : ""; }

    bool found() const { return found_; }
    const Witness& witness_path() const { return witness_; }
    const std::vector<SetFamily>& level_families(int level) const {
        return trace_.at(level);
    }

private:
    const PathPublic* pub_;
    NodeId self_;
    int degree_;
    int round_ = 0;

    std::vector<NodeId> neighbor_ids_;            // by port
    std::vector<std::vector<BitString>> chunk_buf_;  // per port, current phase
    std::vector<SetFamily> fams_;                 // per slot, current level
    std::vector<BitString> pending_;
    std::map<int, std::vector<SetFamily>> trace_;  // level -> per-slot families

    bool found_ = false;
    Witness witness_;

    void record_neighbor_ids(const std::vector<BitString>& received) {
        for (const BitString& msg : received) {
            BitString payload = reassemble({msg});
            BitReader r(payload);
            neighbor_ids_.push_back(r.read_uint(pub_->params.id_bits));
        }
    }

    bool is_neighbor(NodeId u) const {
        return std::find(neighbor_ids_.begin(), neighbor_ids_.end(), u) != neighbor_ids_.end();
    }

    void build_level1() {
        int q = pub_->path_len - 1;
        fams_.clear();
        if (pub_->anchors.empty()) {
            FamilyMap base;
            for (NodeId u : neighbor_ids_) {
                add_min_witness(base, {std::min(u, self_), std::max(u, self_)}, {u, self_});
            }
            fams_.push_back(minimize(to_family(base), q));
        } else {
            for (NodeId a : pub_->anchors) {
                FamilyMap base;
                if (is_neighbor(a)) {
                    add_min_witness(base, {std::min(a, self_), std::max(a, self_)}, {a, self_});
                }
                fams_.push_back(minimize(to_family(base), q));
            }
        }
        trace_[1] = fams_;
    }

    void accumulate(const std::vector<BitString>& received) {
        for (std::size_t p = 0; p < received.size(); ++p) chunk_buf_[p].push_back(received[p]);
    }

    void advance_level(int level) {
        // The neighbors' families one level below arrived in full; extend
        // each received path by one hop onto this node, then prune.
        int prev = level - 1;
        std::uint64_t maxM = pub_->max_members(prev);
        std::size_t slot_bits = pub_->slot_bits(prev);
        std::vector<FamilyMap> next(pub_->slots());
        for (std::size_t p = 0; p < chunk_buf_.size(); ++p) {
            BitString payload = reassemble(chunk_buf_[p]);
            BitReader r(payload);
            for (std::size_t s = 0; s < pub_->slots(); ++s) {
                SetFamily fam = decode_family_slot(r, s * slot_bits, prev + 1, maxM, slot_bits,
                                                   pub_->params.id_bits);
                for (std::size_t i = 0; i < fam.size(); ++i) {
                    const Member& m = fam.members()[i];
                    if (std::binary_search(m.begin(), m.end(), self_)) continue;
                    Member ext = m;
                    ext.insert(std::lower_bound(ext.begin(), ext.end(), self_), self_);
                    Witness w = fam.witness(i);
                    w.push_back(self_);
                    add_min_witness(next[s], std::move(ext), std::move(w));
                }
            }
            chunk_buf_[p].clear();
        }
        int q = pub_->path_len - level;
        fams_.clear();
        for (std::size_t s = 0; s < next.size(); ++s) {
            fams_.push_back(minimize(to_family(next[s]), q));
        }
        trace_[level] = fams_;
    }

    void encode_pending(int level) {
        BitString payload;
        std::uint64_t maxM = pub_->max_members(level);
        std::size_t slot_bits = pub_->slot_bits(level);
        for (const SetFamily& fam : fams_) {
            encode_family_slot(payload, fam, level + 1, maxM, slot_bits, pub_->params.id_bits);
        }
        pending_ = fragment(payload, pub_->params, pub_->caps[level + 1]);
    }

    void finalize() {
        if (pub_->anchors.empty()) {
            const SetFamily& fam = fams_[0];
            for (std::size_t i = 0; i < fam.size(); ++i) {
                if (!found_ || fam.witness(i) < witness_) witness_ = fam.witness(i);
                found_ = true;
            }
        } else {
            for (std::size_t s = 0; s < pub_->anchors.size(); ++s) {
                if (!is_neighbor(pub_->anchors[s])) continue;
                const SetFamily& fam = fams_[s];
                for (std::size_t i = 0; i < fam.size(); ++i) {
                    if (!found_ || fam.witness(i) < witness_) witness_ = fam.witness(i);
                    found_ = true;
                }
            }
        }
    }
};

struct PathRun {
    SimRun sim;
    std::vector<PathProgram*> programs;  // ascending node id, parallel to g.nodes()
    std::shared_ptr<PathPublic> pub;
};

PathRun run_path_algorithm(const Graph& g, int path_len, std::vector<NodeId> anchors,
                           const SimConfig& cfg) {
    PathRun out;
    out.pub = std::make_shared<PathPublic>();
    out.pub->path_len = path_len;
    out.pub->anchors = std::move(anchors);
    out.pub->params = SimParams::derive(g, cfg);
    out.pub->build();

    const PathPublic* pub = out.pub.get();
    std::vector<PathProgram*>* raw = &out.programs;
    out.sim = run(
        g,
        [pub, raw](const NodeInit& init) {
            auto p = std::make_unique<PathProgram>(pub, init);
            raw->push_back(p.get());
            return p;
        },
        cfg, out.pub->sched.plan);
    return out;
}

SubgraphCopy copy_from_sequence(const Graph& g, const Graph& target, const Witness& seq) {
    SubgraphCopy c;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        c.mapping.emplace_back(i, seq[i]);
    }
    std::set<Edge> image;
    for (const Edge& e : target.edges()) {
        image.insert(make_edge(seq[e.first], seq[e.second]));
    }
    c.edge_image.assign(image.begin(), image.end());
    if (!validate_copy(g, target, c)) throw Error("detection produced an invalid witness");
    return c;
}

// ---------------------------------------------------------------------------
// Tree and pseudotree detection.
//
// Per tree index i, each node keeps a pruned family of node sets of embedded
// copies of the subtree below i whose root lands on the node itself.
// Witnesses map tree indices to host nodes (stored as a flat vector indexed
// by tree index, kNoHost where absent).
// Non-leaf indices below the root get one broadcast phase each, in index
// order; leaf families {{v}} are implicit. For pseudotrees the indices on the
// j-to-root path keep one family per candidate host of j, with one broadcast
// slot per node of the network.
// ---------------------------------------------------------------------------

struct TreePublic {
    RootedTargetTree tree;
    bool pseudo = false;
    int j_index = 0;
    std::vector<NodeId> directory;  // all node ids: slot layout for j candidates
    SimParams params;
    Schedule sched;

    std::vector<bool> on_jpath;       // by index
    std::vector<int> bcast_indices;   // non-leaf indices < k, ascending
    std::map<int, int> caps;          // index -> chunks
    std::vector<std::vector<int>> subtree_indices;  // by index, ascending

    int k() const { return tree.k(); }
    bool is_leaf(int i) const { return tree.children[i].empty(); }

    std::uint64_t max_members(int i) const {
        return binomial(static_cast<unsigned>(k()),
                        static_cast<unsigned>(tree.subtree_size[i]));
    }
    std::size_t slot_bits(int i) const {
        return kCountBits + max_members(i) *
                                static_cast<std::size_t>(tree.subtree_size[i]) *
                                static_cast<std::size_t>(params.id_bits);
    }
    std::size_t slots(int i) const {
        return (pseudo && on_jpath[i]) ? directory.size() : 1;
    }

    void build() {
        int n = k();
        on_jpath.assign(n + 1, false);
        if (pseudo) {
            for (int i = j_index; i != 0; i = tree.parent[i]) on_jpath[i] = true;
        }
        subtree_indices.assign(n + 1, {});
        for (int i = 1; i <= n; ++i) {
            for (int x = 1; x <= n; ++x) {
                // x is in the subtree of i iff walking parents from x reaches i
                int a = x;
                while (a != 0 && a != i) a = tree.parent[a];
                if (a == i) subtree_indices[i].push_back(x);
            }
        }
        sched.plan.push_back({"ids", 1});
        for (int i = 1; i < n; ++i) {
            if (is_leaf(i)) continue;
            bcast_indices.push_back(i);
            caps[i] = chunks_needed(slots(i) * slot_bits(i), params);
            sched.plan.push_back({"index" + std::to_string(i), caps[i]});
        }
        sched.build();
    }
};

// Witness slot merge; index sets are disjoint by construction.
Witness merge_witness(const Witness& a, const Witness& b) {
    Witness out = a;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] != kNoHost) out[i] = b[i];
    }
    return out;
}

class TreeProgram : public NodeProgram {
public:
    TreeProgram(const TreePublic* pub, const NodeInit& init)
        : pub_(pub), self_(init.id), degree_(init.degree) {
        chunk_buf_.resize(degree_);
    }

    std::optional<BitString> step(const std::vector<BitString>& received) override {
        ++round_;
        if (round_ > 1) {
            auto [phase, chunk] = pub_->sched.task_of_round[round_ - 2];
            if (phase == 0) {
                record_neighbor_ids(received);
            } else {
                int index = pub_->bcast_indices[phase - 1];
                accumulate(received);
                if (chunk == pub_->caps.at(index) - 1) decode_phase(index);
            }
            if (done_receiving()) {
                finalize();
                return std::nullopt;
            }
        }
        auto [phase, chunk] = pub_->sched.task_of_round[round_ - 1];
        if (phase == 0) {
            BitString id_payload;
            id_payload.append_uint(self_, pub_->params.id_bits);
            return fragment(id_payload, pub_->params, 1)[0];
        }
        int index = pub_->bcast_indices[phase - 1];
        if (chunk == 0) encode_pending(index);
        return pending_[chunk];
    }

    std::string output_summary() const override { return found_ ? "found" : ""; }

    bool found() const { return found_; }
    const Witness& witness_hosts() const { return witness_; }
    const std::map<int, std::map<NodeId, SetFamily>>& family_trace() const { return trace_; }

private:
    const TreePublic* pub_;
    NodeId self_;
    int degree_;
    int round_ = 0;

    std::vector<NodeId> neighbor_ids_;
    std::vector<std::vector<BitString>> chunk_buf_;
    std::vector<BitString> pending_;
    // received[index][port]: families per j-candidate (plain slots use the
    // candidate key kNoHost).
    std::map<int, std::vector<std::map<NodeId, SetFamily>>> received_;
    std::map<int, std::map<NodeId, SetFamily>> own_;  // computed at this node
    std::map<int, std::map<NodeId, SetFamily>> trace_;

    bool found_ = false;
    Witness witness_;

    void record_neighbor_ids(const std::vector<BitString>& received) {
        for (const BitString& msg : received) {
            BitString payload = reassemble({msg});
            BitReader r(payload);
            neighbor_ids_.push_back(r.read_uint(pub_->params.id_bits));
        }
    }

    void accumulate(const std::vector<BitString>& received) {
        for (std::size_t p = 0; p < received.size(); ++p) chunk_buf_[p].push_back(received[p]);
    }

    bool done_receiving() const {
        // All broadcast phases processed?
        if (pub_->bcast_indices.empty()) return round_ >= 2;
        int last = pub_->bcast_indices.back();
        return received_.count(last) != 0;
    }

    void decode_phase(int index) {
        std::uint64_t maxM = pub_->max_members(index);
        std::size_t slot_bits = pub_->slot_bits(index);
        int s_i = pub_->tree.subtree_size[index];
        auto& per_port = received_[index];
        per_port.resize(chunk_buf_.size());
        for (std::size_t p = 0; p < chunk_buf_.size(); ++p) {
            BitString payload = reassemble(chunk_buf_[p]);
            BitReader r(payload);
            if (pub_->slots(index) == 1) {
                SetFamily raw = decode_family_slot(r, 0, s_i, maxM, slot_bits,
                                                   pub_->params.id_bits);
                SetFamily fam = expand_witnesses(raw, index);
                if (!fam.empty()) per_port[p][kNoHost] = std::move(fam);
            } else {
                for (std::size_t s = 0; s < pub_->directory.size(); ++s) {
                    SetFamily raw = decode_family_slot(r, s * slot_bits, s_i, maxM, slot_bits,
                                                       pub_->params.id_bits);
                    if (raw.empty()) continue;
                    per_port[p][pub_->directory[s]] = expand_witnesses(raw, index);
                }
            }
            chunk_buf_[p].clear();
        }
    }

    // Wire witnesses list hosts by ascending subtree index; internally they
    // live in flat index-addressed vectors.
    SetFamily expand_witnesses(const SetFamily& raw, int index) const {
        const std::vector<int>& idxs = pub_->subtree_indices[index];
        SetFamily out = SetFamily::with_witnesses();
        for (std::size_t i = 0; i < raw.size(); ++i) {
            const Witness& hosts = raw.witness(i);
            Witness flat(pub_->k() + 1, kNoHost);
            for (std::size_t x = 0; x < idxs.size(); ++x) flat[idxs[x]] = hosts[x];
            out.add(raw.members()[i], std::move(flat));
        }
        return out;
    }

    SetFamily flatten_witnesses(const SetFamily& fam, int index) const {
        const std::vector<int>& idxs = pub_->subtree_indices[index];
        SetFamily out = SetFamily::with_witnesses();
        for (std::size_t i = 0; i < fam.size(); ++i) {
            const Witness& flat = fam.witness(i);
            Witness hosts;
            for (int x : idxs) hosts.push_back(flat[x]);
            out.add(fam.members()[i], std::move(hosts));
        }
        return out;
    }

    // Family of child index `c` announced by the neighbor on port p; leaves
    // are implicit single-member families.
    std::map<NodeId, SetFamily> child_families(int c, std::size_t port) const {
        std::map<NodeId, SetFamily> out;
        NodeId u = neighbor_ids_[port];
        if (pub_->is_leaf(c)) {
            SetFamily f = SetFamily::with_witnesses();
            Witness flat(pub_->k() + 1, kNoHost);
            flat[c] = u;
            f.add({u}, std::move(flat));
            NodeId key = (pub_->pseudo && pub_->on_jpath[c]) ? u : kNoHost;
            out[key] = std::move(f);
            return out;
        }
        auto it = received_.find(c);
        if (it == received_.end()) throw Error("tree phase ordering bug");
        return it->second[port];
    }

    // The product construction: merge the children of `index` left to right,
    // pruning the partial family between merges. For j-path indices the merge
    // runs once per candidate host of j.
    void compute_own(int index) {
        const std::vector<int>& kids = pub_->tree.children[index];
        int jchild = 0;
        if (pub_->pseudo && pub_->on_jpath[index] && index != pub_->j_index) {
            for (int c : kids) {
                if (pub_->on_jpath[c]) jchild = c;
            }
        }

        // Materialize each child's per-port families once (leaves synthesize
        // their implicit single-member family here).
        std::vector<std::vector<std::map<NodeId, SetFamily>>> by_child(kids.size());
        for (std::size_t ci = 0; ci < kids.size(); ++ci) {
            by_child[ci].reserve(neighbor_ids_.size());
            for (std::size_t p = 0; p < neighbor_ids_.size(); ++p) {
                by_child[ci].push_back(child_families(kids[ci], p));
            }
        }

        std::vector<NodeId> candidates{kNoHost};
        if (jchild != 0) {
            std::set<NodeId> cands;
            for (std::size_t ci = 0; ci < kids.size(); ++ci) {
                if (kids[ci] != jchild) continue;
                for (const auto& per_port : by_child[ci]) {
                    for (const auto& [cand, fam] : per_port) cands.insert(cand);
                }
            }
            candidates.assign(cands.begin(), cands.end());
        }

        std::map<NodeId, SetFamily> result;
        for (NodeId cand : candidates) {
            FamilyMap partial;
            {
                Witness flat(pub_->k() + 1, kNoHost);
                flat[index] = self_;
                partial.emplace(Member{self_}, std::move(flat));
            }
            int size_so_far = 1;
            for (std::size_t ci = 0; ci < kids.size(); ++ci) {
                int c = kids[ci];
                FamilyMap next;
                for (std::size_t p = 0; p < neighbor_ids_.size(); ++p) {
                    NodeId key = (c == jchild) ? cand : kNoHost;
                    auto fit = by_child[ci][p].find(key);
                    if (fit == by_child[ci][p].end()) continue;
                    const SetFamily& fam = fit->second;
                    for (const auto& [pm, pw] : partial) {
                        for (std::size_t i = 0; i < fam.size(); ++i) {
                            const Member& um = fam.members()[i];
                            Member merged;
                            if (!disjoint_union(pm, um, merged)) continue;
                            add_min_witness(next, std::move(merged),
                                            merge_witness(pw, fam.witness(i)));
                        }
                    }
                }
                size_so_far += pub_->tree.subtree_size[c];
                partial = to_map(minimize(to_family(next), pub_->k() - size_so_far));
                if (partial.empty()) break;
            }
            if (partial.empty()) continue;
            NodeId key = (index == pub_->j_index && pub_->pseudo) ? self_ : cand;
            result[key] = to_family(partial);
        }
        own_[index] = result;
        trace_[index] = result;
    }

    static bool disjoint_union(const Member& a, const Member& b, Member& out) {
        out.clear();
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return false;
            out.push_back(a[i] < b[j] ? a[i++] : b[j++]);
        }
        while (i < a.size()) out.push_back(a[i++]);
        while (j < b.size()) out.push_back(b[j++]);
        return true;
    }

    void encode_pending(int index) {
        compute_own(index);
        std::uint64_t maxM = pub_->max_members(index);
        std::size_t slot_bits = pub_->slot_bits(index);
        int s_i = pub_->tree.subtree_size[index];
        BitString payload;
        const auto& mine = own_.at(index);
        if (pub_->slots(index) == 1) {
            SetFamily empty = SetFamily::with_witnesses();
            auto it = mine.find(kNoHost);
            const SetFamily& fam = (it == mine.end()) ? empty : it->second;
            encode_family_slot(payload, flatten_witnesses(fam, index), s_i, maxM, slot_bits,
                               pub_->params.id_bits);
        } else {
            SetFamily empty = SetFamily::with_witnesses();
            for (NodeId slot_id : pub_->directory) {
                auto it = mine.find(slot_id);
                const SetFamily& fam = (it == mine.end()) ? empty : it->second;
                encode_family_slot(payload, flatten_witnesses(fam, index), s_i, maxM, slot_bits,
                                   pub_->params.id_bits);
            }
        }
        pending_ = fragment(payload, pub_->params, pub_->caps.at(index));
    }

    void finalize() {
        compute_own(pub_->k());
        const auto& root_fams = own_.at(pub_->k());
        if (!pub_->pseudo) {
            auto it = root_fams.find(kNoHost);
            if (it == root_fams.end()) return;
            const SetFamily& fam = it->second;
            for (std::size_t i = 0; i < fam.size(); ++i) {
                if (!found_ || fam.witness(i) < witness_) witness_ = fam.witness(i);
                found_ = true;
            }
        } else {
            // A copy of the full target needs the closing edge: the candidate
            // playing j must be one of this node's neighbors.
            for (const auto& [cand, fam] : root_fams) {
                if (std::find(neighbor_ids_.begin(), neighbor_ids_.end(), cand) ==
                    neighbor_ids_.end()) {
                    continue;
                }
                for (std::size_t i = 0; i < fam.size(); ++i) {
                    if (!found_ || fam.witness(i) < witness_) witness_ = fam.witness(i);
                    found_ = true;
                }
            }
        }
    }
};

struct TreeRun {
    SimRun sim;
    std::vector<TreeProgram*> programs;
    std::shared_ptr<TreePublic> pub;
};

TreeRun run_tree_algorithm(const Graph& g, const RootedTargetTree& tree, bool pseudo, int j_index,
                           const SimConfig& cfg) {
    TreeRun out;
    out.pub = std::make_shared<TreePublic>();
    out.pub->tree = tree;
    out.pub->pseudo = pseudo;
    out.pub->j_index = j_index;
    if (pseudo) out.pub->directory = g.nodes();
    out.pub->params = SimParams::derive(g, cfg);
    out.pub->build();

    const TreePublic* pub = out.pub.get();
    std::vector<TreeProgram*>* raw = &out.programs;
    out.sim = run(
        g,
        [pub, raw](const NodeInit& init) {
            auto p = std::make_unique<TreeProgram>(pub, init);
            raw->push_back(p.get());
            return p;
        },
        cfg, out.pub->sched.plan);
    return out;
}

int plan_rounds(const std::vector<PhasePlan>& plan) {
    int r = 0;
    for (const PhasePlan& p : plan) r += p.rounds;
    return r;
}

}  // namespace

DetectResult detect_paths(const Graph& g, int k, const SimConfig& cfg) {
    if (k < 1 || k > 8) throw Error("detect_paths requires 1 <= k <= 8");
    PathRun pr = run_path_algorithm(g, k, {}, cfg);
    DetectResult res;
    res.round_budget = plan_rounds(pr.pub->sched.plan);
    res.metrics = metrics(pr.sim.transcript, g);
    Graph target = path_graph(k + 1);
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        NodeId v = g.nodes()[i];
        bool f = pr.programs[i]->found();
        res.found[v] = f;
        res.any_found |= f;
        if (f) res.witnesses[v] = copy_from_sequence(g, target, pr.programs[i]->witness_path());
    }
    return res;
}

namespace {

DetectResult harvest_cycles(const Graph& g, int k, const PathRun& pr) {
    DetectResult res;
    res.round_budget = plan_rounds(pr.pub->sched.plan);
    res.metrics = metrics(pr.sim.transcript, g);
    Graph target = cycle_graph(k);
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        NodeId v = g.nodes()[i];
        bool f = pr.programs[i]->found();
        res.found[v] = f;
        res.any_found |= f;
        if (f) res.witnesses[v] = copy_from_sequence(g, target, pr.programs[i]->witness_path());
    }
    return res;
}

}  // namespace

DetectResult detect_cycles_fixed(const Graph& g, int k, NodeId w, const SimConfig& cfg) {
    if (k < 3 || k > 8) throw Error("cycle detection requires 3 <= k <= 8");
    if (!g.has_node(w)) throw Error("anchor node not in graph");
    PathRun pr = run_path_algorithm(g, k - 1, {w}, cfg);
    return harvest_cycles(g, k, pr);
}

DetectResult detect_cycles(const Graph& g, int k, const SimConfig& cfg) {
    if (k < 3 || k > 8) throw Error("cycle detection requires 3 <= k <= 8");
    PathRun pr = run_path_algorithm(g, k - 1, g.nodes(), cfg);
    return harvest_cycles(g, k, pr);
}

PathFamilyTrace collect_path_families(const Graph& g, int k, const SimConfig& cfg) {
    if (k < 1 || k > 8) throw Error("detect_paths requires 1 <= k <= 8");
    PathRun pr = run_path_algorithm(g, k, {}, cfg);
    PathFamilyTrace out;
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        for (int level = 1; level <= k; ++level) {
            out.families[level][g.nodes()[i]] = pr.programs[i]->level_families(level)[0];
        }
    }
    return out;
}

namespace {

void post_order_walk(const Graph& h, RootedTargetTree& t, NodeId v, NodeId parent, int& next,
                     std::set<NodeId>& seen) {
    if (!seen.insert(v).second) throw Error("target is not a tree (cycle)");
    for (NodeId u : h.neighbors(v)) {
        if (u != parent) post_order_walk(h, t, u, v, next, seen);
    }
    t.node_to_index[v] = ++next;
    t.index_to_node[next] = v;
}

}  // namespace

RootedTargetTree order_tree(const Graph& h, std::optional<NodeId> root) {
    const std::size_t k = h.node_count();
    if (k == 0) throw Error("empty target tree");
    if (h.edge_count() != k - 1) throw Error("target is not a tree (wrong edge count)");

    NodeId r = root.value_or(h.max_node_id());
    if (!h.has_node(r)) throw Error("root not in target");

    RootedTargetTree t;
    t.target = h;
    t.index_to_node.assign(k + 1, 0);
    t.parent.assign(k + 1, 0);
    t.children.assign(k + 1, {});
    t.subtree_size.assign(k + 1, 1);
    t.subtree_size[0] = 0;

    // Post-order, children in ascending id order: descendants get smaller
    // indices than ancestors and the root gets index k.
    int next = 0;
    std::set<NodeId> seen;
    post_order_walk(h, t, r, r, next, seen);
    if (seen.size() != k) throw Error("target is not a tree (disconnected)");

    for (NodeId v : h.nodes()) {
        int i = t.node_to_index[v];
        for (NodeId u : h.neighbors(v)) {
            int iu = t.node_to_index[u];
            if (iu > i) t.parent[i] = iu;  // exactly one neighbor is the parent
        }
    }
    for (int i = 1; i <= static_cast<int>(k); ++i) {
        if (t.parent[i] != 0) t.children[t.parent[i]].push_back(i);
    }
    for (auto& c : t.children) std::sort(c.begin(), c.end());
    // Post-order puts children before parents, so one ascending pass works.
    for (int i = 1; i <= static_cast<int>(k); ++i) {
        for (int c : t.children[i]) t.subtree_size[i] += t.subtree_size[c];
    }
    return t;
}

namespace {

// Works for both plain trees and pseudotrees: the target edge list already
// includes the cycle-closing edge in the latter case.
DetectResult harvest_tree(const Graph& g, const Graph& target, const RootedTargetTree& tree,
                          const TreeRun& tr) {
    DetectResult res;
    res.round_budget = plan_rounds(tr.pub->sched.plan);
    res.metrics = metrics(tr.sim.transcript, g);
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        NodeId v = g.nodes()[i];
        bool f = tr.programs[i]->found();
        res.found[v] = f;
        res.any_found |= f;
        if (!f) continue;
        const Witness& hosts = tr.programs[i]->witness_hosts();
        SubgraphCopy c;
        for (int idx = 1; idx <= tree.k(); ++idx) {
            c.mapping.emplace_back(tree.index_to_node[idx], hosts[idx]);
        }
        std::sort(c.mapping.begin(), c.mapping.end());
        std::set<Edge> image;
        for (const Edge& e : target.edges()) {
            image.insert(make_edge(*c.host_of(e.first), *c.host_of(e.second)));
        }
        c.edge_image.assign(image.begin(), image.end());
        if (!validate_copy(g, target, c)) throw Error("detection produced an invalid witness");
        res.witnesses[v] = std::move(c);
    }
    return res;
}

}  // namespace

DetectResult detect_tree(const Graph& g, const RootedTargetTree& h, const SimConfig& cfg) {
    if (h.k() < 1 || h.k() > 8) throw Error("tree detection requires 1 <= k <= 8");
    TreeRun tr = run_tree_algorithm(g, h, /*pseudo=*/false, 0, cfg);
    return harvest_tree(g, h.target, h, tr);
}

PseudotreeTarget prepare_pseudotree(const Graph& h) {
    const std::size_t k = h.node_count();
    if (h.edge_count() == k - 1) {
        throw Error("target is acyclic: use tree detection");
    }
    if (h.edge_count() != k) {
        throw Error("target is not a pseudotree (needs exactly one cycle)");
    }
    // Connectivity check; with |E| = |V| this also rules out extra cycles.
    {
        std::set<NodeId> seen;
        std::vector<NodeId> stack{h.nodes()[0]};
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            if (!seen.insert(v).second) continue;
            for (NodeId u : h.neighbors(v)) stack.push_back(u);
        }
        if (seen.size() != k) throw Error("target is not a pseudotree (disconnected)");
    }
    // Peel degree-1 nodes; what remains is the unique cycle.
    std::map<NodeId, std::size_t> deg;
    for (NodeId v : h.nodes()) deg[v] = h.degree(v);
    std::vector<NodeId> queue;
    for (auto& [v, d] : deg) {
        if (d == 1) queue.push_back(v);
    }
    std::set<NodeId> removed;
    while (!queue.empty()) {
        NodeId v = queue.back();
        queue.pop_back();
        if (removed.count(v)) continue;
        removed.insert(v);
        for (NodeId u : h.neighbors(v)) {
            if (removed.count(u)) continue;
            if (--deg[u] == 1) queue.push_back(u);
        }
    }
    std::vector<Edge> cycle_edges;
    for (const Edge& e : h.edges()) {
        if (!removed.count(e.first) && !removed.count(e.second)) cycle_edges.push_back(e);
    }
    PseudotreeTarget t;
    t.target = h;
    t.removed_edge = *std::min_element(cycle_edges.begin(), cycle_edges.end());

    std::vector<Edge> tree_edges;
    for (const Edge& e : h.edges()) {
        if (e != t.removed_edge) tree_edges.push_back(e);
    }
    Graph hprime(h.nodes(), tree_edges);
    t.tree = order_tree(hprime, std::max(t.removed_edge.first, t.removed_edge.second));
    t.j_index = t.tree.node_to_index.at(std::min(t.removed_edge.first, t.removed_edge.second));
    return t;
}

DetectResult detect_pseudotree(const Graph& g, const PseudotreeTarget& h, const SimConfig& cfg) {
    if (h.tree.k() < 3 || h.tree.k() > 8) throw Error("pseudotree detection requires k <= 8");
    TreeRun tr = run_tree_algorithm(g, h.tree, /*pseudo=*/true, h.j_index, cfg);
    return harvest_tree(g, h.target, h.tree, tr);
}

}  // namespace congest
