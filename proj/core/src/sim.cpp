#include "congest/sim.hpp"

#include <algorithm>

namespace congest {

namespace {

int ceil_log2(std::uint64_t x) {
    int b = 0;
    std::uint64_t v = 1;
    while (v < x) {
        v <<= 1;
        ++b;
    }
    return b;
}

}  // namespace

SimParams SimParams::derive(const Graph& g, const SimConfig& cfg) {
    if (cfg.bandwidth_factor < 1) throw Error("bandwidth_factor must be >= 1");
    if (cfg.max_rounds < 1) throw Error("max_rounds must be >= 1");
    if (g.node_count() == 0) throw Error("simulation needs a non-empty graph");
    SimParams p;
    p.n = g.node_count();
    std::uint64_t n_for_bw = std::max<std::uint64_t>(p.n, cfg.n_bound.value_or(p.n));
    std::uint64_t id_space = std::max<std::uint64_t>(g.max_node_id() + 1, cfg.n_bound.value_or(1));
    p.id_bits = std::max(1, ceil_log2(id_space));
    p.bandwidth_bits = cfg.bandwidth_factor * std::max(1, ceil_log2(n_for_bw));
    return p;
}

Metrics metrics(const Transcript& t, const Graph& g) {
    Metrics m;
    m.rounds_used = t.rounds_used;
    for (const auto& row : t.per_round_bits) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            m.max_message_bits = std::max(m.max_message_bits, row[i]);
            m.total_bits += static_cast<long long>(row[i]) * g.degree(g.nodes()[i]);
        }
    }
    for (const PhaseSpan& ph : t.phase_log) {
        m.phases.emplace_back(ph.label, ph.last_round - ph.first_round + 1);
    }
    return m;
}

SimRun run(const Graph& g, const ProgramFactory& factory, const SimConfig& cfg,
           const std::vector<PhasePlan>& plan) {
    SimRun result;
    result.params = SimParams::derive(g, cfg);
    const std::size_t n = g.node_count();
    const int bandwidth = result.params.bandwidth_bits;

    for (NodeId v : g.nodes()) {
        NodeInit init{v, static_cast<int>(g.degree(v)), result.params};
        result.programs.push_back(factory(init));
    }

    // Port p of node v connects to its p-th neighbor in ascending id order.
    std::vector<std::vector<std::size_t>> port_target(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (NodeId u : g.neighbors(g.nodes()[i])) port_target[i].push_back(g.index_of(u));
    }

    std::vector<bool> active(n, true);
    std::vector<std::vector<BitString>> inbox(n), next_inbox(n);
    for (std::size_t i = 0; i < n; ++i) inbox[i].resize(port_target[i].size());

    Transcript& t = result.transcript;
    int round = 1;
    for (; round <= cfg.max_rounds; ++round) {
        std::vector<BitString> outgoing(n);
        std::vector<int> bits(n, 0);
        bool any_emitted = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            std::optional<BitString> out = result.programs[i]->step(inbox[i]);
            if (!out) {
                active[i] = false;
                continue;
            }
            if (static_cast<int>(out->size_bits()) > bandwidth) {
                throw SimError("broadcast payload of " + std::to_string(out->size_bits()) +
                                   " bits exceeds bandwidth " + std::to_string(bandwidth),
                               g.nodes()[i], round);
            }
            bits[i] = static_cast<int>(out->size_bits());
            outgoing[i] = std::move(*out);
            any_emitted = true;
        }
        if (!any_emitted) break;  // all nodes finished; this round did not run

        next_inbox.assign(n, {});
        for (std::size_t i = 0; i < n; ++i) {
            next_inbox[i].resize(port_target[i].size());
            for (std::size_t p = 0; p < port_target[i].size(); ++p) {
                next_inbox[i][p] = outgoing[port_target[i][p]];
            }
        }
        inbox.swap(next_inbox);
        t.per_round_bits.push_back(std::move(bits));
        t.rounds_used = round;
    }
    if (round > cfg.max_rounds) {
        bool someone_active = std::find(active.begin(), active.end(), true) != active.end();
        if (someone_active) {
            throw Error("simulation exceeded max_rounds = " + std::to_string(cfg.max_rounds));
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        std::string summary = result.programs[i]->output_summary();
        if (!summary.empty()) t.node_outputs[g.nodes()[i]] = std::move(summary);
    }

    if (!plan.empty()) {
        int expected = 0;
        for (const PhasePlan& ph : plan) expected += ph.rounds;
        if (expected != t.rounds_used) {
            throw Error("phase plan declares " + std::to_string(expected) +
                        " rounds but the run used " + std::to_string(t.rounds_used));
        }
        int at = 1;
        for (const PhasePlan& ph : plan) {
            if (ph.rounds == 0) continue;
            t.phase_log.push_back({ph.label, at, at + ph.rounds - 1});
            at += ph.rounds;
        }
    }
    return result;
}

int chunks_needed(std::size_t payload_bits, const SimParams& params) {
    int cap = params.chunk_capacity();
    if (cap <= 0) throw Error("bandwidth too small for fragment headers");
    return static_cast<int>((payload_bits + cap - 1) / cap);
}

std::vector<BitString> fragment(const BitString& payload, const SimParams& params, int phase_cap) {
    int cap = params.chunk_capacity();
    if (cap <= 0) throw Error("bandwidth too small for fragment headers");
    if (chunks_needed(payload.size_bits(), params) > phase_cap) {
        throw Error("payload of " + std::to_string(payload.size_bits()) +
                    " bits does not fit in " + std::to_string(phase_cap) + " chunks");
    }
    std::vector<BitString> chunks;
    std::size_t at = 0;
    for (int c = 0; c < phase_cap; ++c) {
        std::size_t len = std::min<std::size_t>(cap, payload.size_bits() - at);
        BitString chunk;
        chunk.append_uint(len, kFragmentHeaderBits);
        for (std::size_t i = 0; i < len; ++i) chunk.push_back(payload.bit(at + i));
        at += len;
        chunks.push_back(std::move(chunk));
    }
    return chunks;
}

BitString reassemble(const std::vector<BitString>& chunks) {
    BitString out;
    for (const BitString& chunk : chunks) {
        BitReader r(chunk);
        std::uint64_t len = r.read_uint(kFragmentHeaderBits);
        if (kFragmentHeaderBits + len > chunk.size_bits()) {
            throw Error("fragment length header exceeds the chunk");
        }
        for (std::uint64_t i = 0; i < len; ++i) {
            out.push_back(chunk.bit(kFragmentHeaderBits + i));
        }
    }
    return out;
}

}  // namespace congest
