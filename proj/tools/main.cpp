#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "congest/detect.hpp"
#include "congest/generators.hpp"
#include "congest/lower_bound.hpp"
#include "congest/oracle.hpp"
#include "congest/sparse_enum.hpp"

using json = nlohmann::json;
using namespace congest;

namespace {

json copy_to_json(const SubgraphCopy& c) {
    json j;
    j["mapping"] = json::array();
    for (const auto& [t, h] : c.mapping) j["mapping"].push_back({t, h});
    j["edges"] = json::array();
    for (const Edge& e : c.edge_image) j["edges"].push_back({e.first, e.second});
    return j;
}

json metrics_to_json(const Metrics& m, int budget) {
    json j;
    j["rounds"] = m.rounds_used;
    j["budget"] = budget;
    j["max_message_bits"] = m.max_message_bits;
    j["total_bits"] = m.total_bits;
    j["phases"] = json::array();
    for (const auto& [label, rounds] : m.phases) {
        j["phases"].push_back({{"label", label}, {"rounds", rounds}});
    }
    return j;
}

json graph_summary(const std::string& file, const Graph& g) {
    return {{"file", file},
            {"n", g.node_count()},
            {"m", g.edge_count()},
            {"degeneracy", degeneracy(g).degeneracy}};
}

// Ground truth for the per-node detect flags.
bool oracle_agrees_detect(const Graph& g, const std::string& target, int k_edges,
                          std::optional<NodeId> anchor, const Graph* target_graph,
                          const DetectResult& res) {
    if (target == "path") {
        Graph t = path_graph(k_edges + 1);
        for (const auto& [v, flag] : res.found) {
            OracleOptions opts;
            opts.anchor = {{static_cast<NodeId>(k_edges), v}};  // path end pinned at v
            if (oracle_contains(g, t, opts).has_value() != flag) return false;
        }
        return true;
    }
    if (target == "cycle" && anchor) {
        Graph t = cycle_graph(k_edges);
        OracleOptions opts;
        opts.anchor = {{0, *anchor}};
        return oracle_contains(g, t, opts).has_value() == res.any_found;
    }
    if (target == "cycle") {
        Graph t = cycle_graph(k_edges);
        for (const auto& [v, flag] : res.found) {
            OracleOptions opts;
            opts.anchor = {{0, v}};  // cycles are vertex-transitive
            if (oracle_contains(g, t, opts).has_value() != flag) return false;
        }
        return true;
    }
    // tree / pseudotree: the root role is pinned at each node.
    const Graph& t = *target_graph;
    NodeId root_node;
    if (target == "tree") {
        RootedTargetTree rt = order_tree(t);
        root_node = rt.index_to_node[rt.k()];
    } else {
        PseudotreeTarget pt = prepare_pseudotree(t);
        root_node = pt.tree.index_to_node[pt.tree.k()];
    }
    for (const auto& [v, flag] : res.found) {
        OracleOptions opts;
        opts.anchor = {{root_node, v}};
        if (oracle_contains(g, t, opts).has_value() != flag) return false;
    }
    return true;
}

int cmd_detect(const std::string& graph_file, std::vector<std::string> target, int k,
               std::optional<NodeId> anchor, bool check, const std::string& convention,
               int bandwidth_factor, std::optional<std::uint64_t> nbound) {
    Graph g = load_graph_file(graph_file);
    SimConfig cfg;
    cfg.bandwidth_factor = bandwidth_factor;
    cfg.n_bound = nbound;

    if (target.empty()) throw Error("missing --target");
    std::string kind = target[0];
    std::optional<Graph> target_graph;
    if (kind == "tree" || kind == "pseudotree") {
        if (target.size() != 2) throw Error("--target " + kind + " needs a target graph file");
        target_graph = load_graph_file(target[1]);
        k = static_cast<int>(target_graph->node_count());
    } else if (target.size() != 1) {
        throw Error("--target " + kind + " takes no file");
    }
    if (anchor && kind != "cycle") throw Error("--anchor applies to cycle targets only");

    int k_edges = k;
    if (kind == "path" && convention == "nodes") k_edges = k - 1;  // k nodes = k-1 edges

    DetectResult res;
    if (kind == "path") {
        res = detect_paths(g, k_edges, cfg);
    } else if (kind == "cycle") {
        res = anchor ? detect_cycles_fixed(g, k_edges, *anchor, cfg)
                     : detect_cycles(g, k_edges, cfg);
    } else if (kind == "tree") {
        res = detect_tree(g, order_tree(*target_graph), cfg);
    } else if (kind == "pseudotree") {
        res = detect_pseudotree(g, prepare_pseudotree(*target_graph), cfg);
    } else {
        throw Error("unknown target kind: " + kind);
    }

    json report;
    report["command"] = "detect";
    report["graph"] = graph_summary(graph_file, g);
    report["config"] = {{"bandwidth_factor", bandwidth_factor},
                        {"k", k},
                        {"target", kind},
                        {"convention", convention}};
    if (anchor) report["config"]["anchor"] = *anchor;
    report["result"]["found"] = res.any_found;
    json found_nodes = json::array();
    for (const auto& [v, f] : res.found) {
        if (f) found_nodes.push_back(v);
    }
    report["result"]["found_nodes"] = found_nodes;
    if (res.any_found) {
        // Witness of the smallest-id detecting node.
        for (const auto& [v, f] : res.found) {
            if (f) {
                report["result"]["witness"] = copy_to_json(res.witnesses.at(v));
                break;
            }
        }
    }
    report["metrics"] = metrics_to_json(res.metrics, res.round_budget);

    bool ok = true;
    if (check) {
        bool agree = oracle_agrees_detect(g, kind, k_edges, anchor,
                                          target_graph ? &*target_graph : nullptr, res);
        report["oracle_agreement"] = agree;
        ok = agree;
    }
    std::cout << report.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_enumerate(const std::string& graph_file, std::vector<std::string> target,
                  const std::string& model, const std::string& support_file, bool dedup,
                  bool check, std::optional<int> d_flag, double C, int bandwidth_factor) {
    Graph g = load_graph_file(graph_file);
    SimConfig cfg;
    cfg.bandwidth_factor = bandwidth_factor;

    if (target.empty()) throw Error("missing --target");
    EnumTarget et;
    EnumOptions opts;
    opts.C = C;
    opts.dedup = dedup;
    std::string kind = target[0];
    if (kind == "clique") {
        if (target.size() != 2) throw Error("--target clique needs a size, e.g. --target clique 3");
        et = EnumTarget::clique;
        opts.k = std::stoi(target[1]);
    } else if (kind == "c4") {
        et = EnumTarget::c4;
    } else if (kind == "c5") {
        et = EnumTarget::c5;
    } else {
        throw Error("unknown enumeration target: " + kind);
    }

    EnumResult res;
    Graph enumerated_on = g;
    if (model == "supported") {
        if (support_file.empty()) throw Error("supported model requires --support FILE");
        Graph support = load_graph_file(support_file);
        opts.d = d_flag.value_or(degeneracy(support).degeneracy);
        res = supported_enumerate(support, g, et, opts, cfg);
    } else if (model == "congest") {
        opts.d = d_flag.value_or(degeneracy(g).degeneracy);
        if (et == EnumTarget::clique) {
            res = enumerate_cliques(g, opts, cfg);
        } else if (et == EnumTarget::c4) {
            res = enumerate_c4(g, opts, cfg);
        } else {
            res = enumerate_c5(g, opts, cfg);
        }
    } else {
        throw Error("unknown model: " + model);
    }

    json report;
    report["command"] = "enumerate";
    report["graph"] = graph_summary(graph_file, g);
    report["config"] = {{"bandwidth_factor", bandwidth_factor},
                        {"target", kind},
                        {"model", model},
                        {"d", opts.d},
                        {"C", opts.C},
                        {"dedup", dedup}};
    if (et == EnumTarget::clique) report["config"]["k"] = opts.k;
    report["result"]["copies"] = res.copies.copies.size();
    json list = json::array();
    for (const SubgraphCopy& c : res.copies.copies) {
        json item = copy_to_json(c);
        item["owner"] = res.copies.owner.at(c.edge_image);
        list.push_back(item);
    }
    report["result"]["copy_list"] = list;
    report["metrics"] = metrics_to_json(res.metrics, res.round_budget);
    report["metrics"]["orientation_rounds"] = res.orientation_rounds;

    bool ok = true;
    if (check) {
        Graph t = et == EnumTarget::clique ? complete_graph(opts.k)
                  : et == EnumTarget::c4   ? cycle_graph(4)
                                           : cycle_graph(5);
        std::vector<SubgraphCopy> expected = oracle_enumerate(enumerated_on, t);
        bool agree = expected.size() == res.copies.copies.size();
        for (std::size_t i = 0; agree && i < expected.size(); ++i) {
            agree = expected[i].edge_image == res.copies.copies[i].edge_image;
        }
        report["oracle_agreement"] = agree;
        ok = agree;
    }
    std::cout << report.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_genlb(int k, int N, std::vector<int> A_list, std::vector<int> B_list,
              bool random_disjoint, bool random_intersecting, std::uint64_t seed,
              const std::string& out_prefix, bool verify) {
    std::set<int> A(A_list.begin(), A_list.end());
    std::set<int> B(B_list.begin(), B_list.end());
    const int M = N * N;
    if (random_disjoint || random_intersecting) {
        SplitMix64 rng(seed);
        A.clear();
        B.clear();
        for (int x = 1; x <= M; ++x) {
            if (rng.next_double() < 0.5) A.insert(x);
        }
        for (int x = 1; x <= M; ++x) {
            if (!A.count(x) && rng.next_double() < 0.5) B.insert(x);
        }
        if (random_intersecting) {
            B.insert(A.empty() ? 1 : *A.begin());
            A.insert(A.empty() ? 1 : *A.begin());
        }
    }

    LBInstance inst = build_instance(k, N, A, B);
    if (!out_prefix.empty()) {
        save_graph_file(inst.graph, out_prefix + ".txt");
        std::ofstream meta(out_prefix + ".json");
        meta << instance_metadata_json(inst) << "\n";
    }

    json report;
    report["command"] = "genlb";
    report["k"] = k;
    report["N"] = N;
    report["A"] = A;
    report["B"] = B;
    report["nodes"] = inst.graph.node_count();
    report["edges"] = inst.graph.edge_count();
    if (!out_prefix.empty()) {
        report["files"] = {out_prefix + ".txt", out_prefix + ".json"};
    }

    bool ok = true;
    if (verify) {
        LBReport rep = verify_instance(inst);
        report["verify"] = {{"cycle_iff_intersection", rep.cycle_iff_intersection},
                            {"no_one_sided_cycle", rep.no_one_sided_cycle},
                            {"degeneracy_at_most_two", rep.degeneracy_at_most_two},
                            {"cut_size_ok", rep.cut_size_ok},
                            {"size_bounds_ok", rep.size_bounds_ok},
                            {"cycle_present", rep.oracle_found_cycle}};
        ok = rep.all_passed();
    }
    std::cout << report.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_bench(const std::string& suite, std::vector<std::size_t> sizes,
              std::vector<std::uint64_t> seeds, int k, double p, int d) {
    std::cout << "n,m,d,k,target,model,rounds,budget,max_bits,total_bits,agreement\n";
    SimConfig cfg;
    // One shared schedule across sizes: parameters derive from a common bound.
    std::uint64_t max_n = 1;
    for (std::size_t n : sizes) max_n = std::max<std::uint64_t>(max_n, n);
    std::uint64_t bound = 1;
    while (bound < max_n) bound <<= 1;
    cfg.n_bound = bound;

    bool all_ok = true;
    for (std::size_t n : sizes) {
        for (std::uint64_t seed : seeds) {
            std::string target = suite, model = "congest";
            Graph g;
            int used_k = k;
            DetectResult dres;
            EnumResult eres;
            bool is_detect = suite == "paths" || suite == "cycles";
            if (is_detect) {
                g = gnp(n, p, seed);
                dres = suite == "paths" ? detect_paths(g, k, cfg) : detect_cycles(g, k, cfg);
            } else {
                g = random_d_degenerate(n, d, seed);
                EnumOptions opts;
                opts.d = d;
                if (suite == "cliques") {
                    opts.k = k;
                    eres = enumerate_cliques(g, opts, cfg);
                } else if (suite == "c4") {
                    used_k = 4;
                    eres = enumerate_c4(g, opts, cfg);
                } else if (suite == "c5") {
                    used_k = 5;
                    eres = enumerate_c5(g, opts, cfg);
                } else {
                    throw Error("unknown suite: " + suite);
                }
            }

            int rounds = is_detect ? dres.metrics.rounds_used : eres.metrics.rounds_used;
            int budget = is_detect ? dres.round_budget : eres.round_budget;
            int max_bits = is_detect ? dres.metrics.max_message_bits : eres.metrics.max_message_bits;
            long long total_bits = is_detect ? dres.metrics.total_bits : eres.metrics.total_bits;
            int used_d = degeneracy(g).degeneracy;

            std::string agreement = "na";
            if (n <= 60) {
                bool agree;
                if (is_detect) {
                    agree = oracle_agrees_detect(g, suite == "paths" ? "path" : "cycle", k,
                                                 std::nullopt, nullptr, dres);
                } else {
                    Graph t = suite == "cliques" ? complete_graph(k)
                              : suite == "c4"    ? cycle_graph(4)
                                                 : cycle_graph(5);
                    auto expected = oracle_enumerate(g, t);
                    agree = expected.size() == eres.copies.copies.size();
                    for (std::size_t i = 0; agree && i < expected.size(); ++i) {
                        agree = expected[i].edge_image == eres.copies.copies[i].edge_image;
                    }
                }
                agreement = agree ? "1" : "0";
                all_ok &= agree;
            }
            std::cout << n << "," << g.edge_count() << "," << used_d << "," << used_k << ","
                      << target << "," << model << "," << rounds << "," << budget << ","
                      << max_bits << "," << total_bits << "," << agreement << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subgraph detection and enumeration in the broadcast CONGEST model"};
    app.require_subcommand(1);

    // detect
    auto* det = app.add_subcommand("detect", "Run a detection algorithm");
    std::string det_graph, det_convention = "edges";
    std::vector<std::string> det_target;
    int det_k = 0;
    std::optional<NodeId> det_anchor;
    bool det_check = false;
    int det_bw = 16;
    std::optional<std::uint64_t> det_nbound;
    det->add_option("--graph", det_graph, "input graph file")->required();
    det->add_option("--target", det_target,
                    "path | cycle | tree FILE | pseudotree FILE")
        ->required()
        ->expected(1, 2);
    det->add_option("--k", det_k, "target size");
    det->add_option("--anchor", det_anchor, "fixed node for cycle detection");
    det->add_flag("--check", det_check, "compare against the brute-force oracle");
    det->add_option("--convention", det_convention, "path length convention: edges | nodes")
        ->check(CLI::IsMember({"edges", "nodes"}));
    det->add_option("--bandwidth-factor", det_bw, "bits per round = factor * ceil(log2 n)");
    det->add_option("--nbound", det_nbound, "public network size bound");

    // enumerate
    auto* enu = app.add_subcommand("enumerate", "Run an enumeration algorithm");
    std::string enu_graph, enu_model = "congest", enu_support;
    std::vector<std::string> enu_target;
    bool enu_dedup = false, enu_check = false;
    std::optional<int> enu_d;
    double enu_C = 3.0;
    int enu_bw = 16;
    enu->add_option("--graph", enu_graph, "input graph file")->required();
    enu->add_option("--target", enu_target, "clique K | c4 | c5")->required()->expected(1, 2);
    enu->add_option("--model", enu_model, "congest | supported")
        ->check(CLI::IsMember({"congest", "supported"}));
    enu->add_option("--support", enu_support, "support graph file (supported model)");
    enu->add_flag("--dedup", enu_dedup, "suppress duplicate cycle reports");
    enu->add_flag("--check", enu_check, "compare against the brute-force oracle");
    enu->add_option("--d", enu_d, "degeneracy bound (default: exact degeneracy)");
    enu->add_option("--C", enu_C, "peel threshold constant, > 2");
    enu->add_option("--bandwidth-factor", enu_bw, "bits per round = factor * ceil(log2 n)");

    // genlb
    auto* gen = app.add_subcommand("genlb", "Generate a lower-bound instance");
    int gen_k = 0, gen_N = 0;
    std::vector<int> gen_A, gen_B;
    bool gen_rd = false, gen_ri = false, gen_verify = false;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--k", gen_k, "cycle length, >= 6")->required();
    gen->add_option("--N", gen_N, "bipartite shell size")->required();
    gen->add_option("--A", gen_A, "labels of side A")->delimiter(',');
    gen->add_option("--B", gen_B, "labels of side B")->delimiter(',');
    gen->add_flag("--random-disjoint", gen_rd, "random disjoint A, B");
    gen->add_flag("--random-intersecting", gen_ri, "random intersecting A, B");
    gen->add_option("--seed", gen_seed, "seed for the random modes");
    gen->add_option("--out", gen_out, "output prefix (.txt graph, .json metadata)");
    gen->add_flag("--verify", gen_verify, "check all construction properties");

    // bench
    auto* ben = app.add_subcommand("bench", "Emit a CSV of round measurements");
    std::string ben_suite;
    std::vector<std::size_t> ben_sizes;
    std::vector<std::uint64_t> ben_seeds;
    int ben_k = 4, ben_d = 4;
    double ben_p = 0.2;
    ben->add_option("--suite", ben_suite, "paths | cycles | cliques | c4 | c5")
        ->required()
        ->check(CLI::IsMember({"paths", "cycles", "cliques", "c4", "c5"}));
    ben->add_option("--sizes", ben_sizes, "node counts")->required()->delimiter(',');
    ben->add_option("--seeds", ben_seeds, "seeds")->required()->delimiter(',');
    ben->add_option("--k", ben_k, "target size (paths/cycles/cliques)");
    ben->add_option("--p", ben_p, "edge probability for detect suites");
    ben->add_option("--d", ben_d, "degeneracy of generated graphs for enum suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (det->parsed()) {
            return cmd_detect(det_graph, det_target, det_k, det_anchor, det_check,
                              det_convention, det_bw, det_nbound);
        }
        if (enu->parsed()) {
            return cmd_enumerate(enu_graph, enu_target, enu_model, enu_support, enu_dedup,
                                 enu_check, enu_d, enu_C, enu_bw);
        }
        if (gen->parsed()) {
            return cmd_genlb(gen_k, gen_N, gen_A, gen_B, gen_rd, gen_ri, gen_seed, gen_out,
                             gen_verify);
        }
        if (ben->parsed()) {
            return cmd_bench(ben_suite, ben_sizes, ben_seeds, ben_k, ben_p, ben_d);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
