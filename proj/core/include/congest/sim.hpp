#ifndef CONGEST_SIM_HPP
#define CONGEST_SIM_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "congest/bits.hpp"
#include "congest/graph.hpp"

namespace congest {

// Fixed widths of the count and fragment-length fields used by all message
// encodings. Identifiers are fixed-width (SimParams::id_bits); a set of s ids
// is a 16-bit count followed by s ids.
inline constexpr int kCountBits = 16;
inline constexpr int kFragmentHeaderBits = 16;

struct SimConfig {
    // Per-edge-per-round bandwidth is bandwidth_factor * ceil(log2 n) bits.
    int bandwidth_factor = 16;
    int max_rounds = 1000000;
    // Public upper bound on the network size. When set, both the bandwidth
    // and the identifier width derive from the bound instead of the exact
    // values, so runs on different graphs share one oblivious schedule.
    std::optional<std::uint64_t> n_bound;
};

// Quantities derived from a graph + config, shared by engine and algorithms.
struct SimParams {
    std::size_t n = 0;
    int id_bits = 1;         // width of one node id on the wire
    int bandwidth_bits = 16; // B: max broadcast payload per round

    static SimParams derive(const Graph& g, const SimConfig& cfg);

    int chunk_capacity() const { return bandwidth_bits - kFragmentHeaderBits; }
};

class SimError : public Error {
public:
    SimError(const std::string& what, NodeId node, int round)
        : Error(what + " (node " + std::to_string(node) + ", round " + std::to_string(round) +
                ")"),
          node_(node),
          round_(round) {}
    NodeId node() const { return node_; }
    int round() const { return round_; }

private:
    NodeId node_;
    int round_;
};

struct PhaseSpan {
    std::string label;
    int first_round = 0;  // 1-based, inclusive
    int last_round = 0;
};

struct Transcript {
    int rounds_used = 0;
    // per_round_bits[r][i]: broadcast payload bits of the i-th node (ascending
    // id order) in round r+1.
    std::vector<std::vector<int>> per_round_bits;
    std::map<NodeId, std::string> node_outputs;
    std::vector<PhaseSpan> phase_log;

    bool operator==(const Transcript& other) const {
        return rounds_used == other.rounds_used && per_round_bits == other.per_round_bits &&
               node_outputs == other.node_outputs;
    }
};

struct Metrics {
    int rounds_used = 0;
    int max_message_bits = 0;
    long long total_bits = 0;  // sum over nodes and rounds of payload bits x degree
    std::vector<std::pair<std::string, int>> phases;
};

Metrics metrics(const Transcript& t, const Graph& g);

// One node's algorithm instance. step() is called once per round with the
// messages delivered at the end of the previous round (empty on round 1),
// indexed by port in ascending neighbor id order. Returning a payload
// broadcasts it to all neighbors; returning nullopt terminates the node.
class NodeProgram {
public:
    virtual ~NodeProgram() = default;
    virtual std::optional<BitString> step(const std::vector<BitString>& received) = 0;
    virtual std::string output_summary() const { return {}; }
};

struct NodeInit {
    NodeId id = 0;
    int degree = 0;
    SimParams params;
};

using ProgramFactory = std::function<std::unique_ptr<NodeProgram>(const NodeInit&)>;

struct SimRun {
    Transcript transcript;
    std::vector<std::unique_ptr<NodeProgram>> programs;  // ascending id order
    SimParams params;
};

// Declared phase schedule; the engine stamps round spans onto the transcript
// and checks that the run matches the declared total.
struct PhasePlan {
    std::string label;
    int rounds = 0;
};

// Deterministic round-synchronous execution. Each round: every live node
// computes, emits one broadcast of at most B bits, and all messages are
// delivered simultaneously. Identical inputs produce identical transcripts.
SimRun run(const Graph& g, const ProgramFactory& factory, const SimConfig& cfg,
           const std::vector<PhasePlan>& plan = {});

// Splits a payload into exactly `phase_cap` chunks, each a 16-bit length
// header plus up to chunk_capacity() payload bits; trailing chunks are
// header-only. All nodes emit the same chunk count, keeping multi-round
// phases synchronized on an oblivious schedule.
std::vector<BitString> fragment(const BitString& payload, const SimParams& params, int phase_cap);

BitString reassemble(const std::vector<BitString>& chunks);

// Chunks needed for a payload of `payload_bits` bits.
int chunks_needed(std::size_t payload_bits, const SimParams& params);

}  // namespace congest

#endif
