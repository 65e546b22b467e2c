// olec: online edge coloring via repeated matching on subsampled,
// locally treelike graphs. Subcommands cover the generators, the matching
// and sparsification passes, the coloring strategies, the tree-recurrence
// analyzer, the witness-tree game oracles, and the experiment harness.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "olec/colorer.hpp"
#include "olec/experiment.hpp"
#include "olec/game.hpp"
#include "olec/generate.hpp"
#include "olec/instances.hpp"
#include "olec/recurrence.hpp"
#include "olec/stats.hpp"
#include "olec/stream_io.hpp"
#include "olec/verify.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string out;
    int threads = 1;
};

std::ostream& open_output(const GlobalOpts& g, std::ofstream& file) {
    if (g.out.empty() || g.out == "-") return std::cout;
    file.open(g.out);
    if (!file) throw std::runtime_error("cannot open output file: " + g.out);
    return file;
}

olec::EdgeStream read_stream(const std::string& path) {
    if (path.empty() || path == "-") return olec::parse_stream(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return olec::parse_stream(in);
}

olec::GeneratorSpec::Kind parse_kind(const std::string& name) {
    using Kind = olec::GeneratorSpec::Kind;
    if (name == "random-regular") return Kind::RandomRegular;
    if (name == "random-tree") return Kind::RandomTree;
    if (name == "complete-dary-tree") return Kind::CompleteDaryTree;
    if (name == "path") return Kind::Path;
    if (name == "star") return Kind::Star;
    if (name == "erdos-renyi") return Kind::ErdosRenyi;
    throw CLI::ValidationError("unknown generator kind: " + name);
}

// Game instance file: first data line "k C"; one line per node 2..k-1 with
// "parent arrival flag" where flag 0 = internal edge, 1 = boundary left
// unmatched, 2 = boundary matched. Nodes 0 and 1 are the root edge's
// endpoints; the root edge arrives last. '#' starts a comment.
struct GameInstance {
    olec::WitnessTree tree;
    olec::BoundaryAssignment decisions;
    double C = 0.0;
};

GameInstance load_game_instance(std::istream& in) {
    std::string line;
    std::vector<std::string> data;
    while (std::getline(in, line)) {
        const std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        data.push_back(line);
    }
    if (data.empty()) throw std::runtime_error("game instance: empty file");
    std::istringstream header(data[0]);
    int k = 0;
    double C = 0.0;
    if (!(header >> k >> C) || k < 2)
        throw std::runtime_error("game instance: bad header, expected 'k C' with k >= 2");
    if (static_cast<int>(data.size()) != k - 1)
        throw std::runtime_error("game instance: expected " + std::to_string(k - 2) +
                                 " node lines");
    GameInstance inst;
    inst.C = C;
    inst.tree.nodes.resize(2);
    std::vector<int> file_to_tree(static_cast<std::size_t>(k), -1);
    file_to_tree[0] = 0;
    file_to_tree[1] = 1;
    std::vector<bool> fixed;
    for (int node = 2; node < k; ++node) {
        std::istringstream ls(data[static_cast<std::size_t>(node - 1)]);
        int parent = -1, flag = 0;
        long long arrival = 0;
        if (!(ls >> parent >> arrival >> flag))
            throw std::runtime_error("game instance: bad node line: " +
                                     data[static_cast<std::size_t>(node - 1)]);
        if (parent < 0 || parent >= node)
            throw std::runtime_error("game instance: parent must precede the node");
        const int tree_parent = file_to_tree[static_cast<std::size_t>(parent)];
        if (tree_parent < 0)
            throw std::runtime_error("game instance: boundary edges cannot have children");
        olec::WitnessTree::EdgeRec rec;
        rec.parent_node = tree_parent;
        rec.rank = arrival;
        if (flag == 0) {
            rec.boundary = false;
            rec.child_node = static_cast<int>(inst.tree.nodes.size());
            file_to_tree[static_cast<std::size_t>(node)] = rec.child_node;
            const int eid = inst.tree.edge_count();
            inst.tree.nodes[static_cast<std::size_t>(tree_parent)].child_edges.push_back(eid);
            inst.tree.edges.push_back(rec);
            inst.tree.nodes.push_back({eid, {}});
        } else if (flag == 1 || flag == 2) {
            rec.boundary = true;
            rec.child_node = -1;
            inst.tree.nodes[static_cast<std::size_t>(tree_parent)].child_edges.push_back(
                inst.tree.edge_count());
            inst.tree.edges.push_back(rec);
            fixed.push_back(flag == 2);
        } else {
            throw std::runtime_error("game instance: flag must be 0, 1 or 2");
        }
    }
    for (auto& node : inst.tree.nodes) {
        std::sort(node.child_edges.begin(), node.child_edges.end(), [&](int a, int b) {
            return inst.tree.edges[static_cast<std::size_t>(a)].rank <
                   inst.tree.edges[static_cast<std::size_t>(b)].rank;
        });
    }
    inst.tree.validate();
    inst.decisions = olec::BoundaryAssignment::fixed(fixed);
    return inst;
}

int run_verify(const std::string& which) {
    bool all_ok = true;
    std::vector<std::string> names;
    if (which == "all")
        names = olec::verify_suite_names();
    else
        names.push_back(which);
    for (const auto& name : names) {
        const olec::SuiteResult result = olec::verify_suite(name);
        for (const auto& l : result.lines) std::cout << result.name << ": " << l << "\n";
        std::cout << result.name << ": " << (result.passed ? "PASS" : "FAIL") << "\n";
        all_ok = all_ok && result.passed;
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"online edge coloring via matching on locally treelike graphs"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "base seed for all randomness");
    app.add_option("--format", g.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", g.out, "output path (default stdout)");
    app.add_option("--threads", g.threads, "worker threads for experiments");

    // gen
    auto* gen = app.add_subcommand("gen", "generate an edge stream");
    std::string gen_kind = "random-tree";
    olec::GeneratorSpec spec;
    std::string order_mode = "as-generated";
    gen->add_option("--kind", gen_kind,
                    "random-regular|random-tree|complete-dary-tree|path|star|erdos-renyi");
    gen->add_option("--n", spec.n, "vertex count");
    gen->add_option("--d", spec.d, "degree (random-regular) or arity (d-ary tree)");
    gen->add_option("--depth", spec.depth, "depth for complete-dary-tree");
    gen->add_option("--p", spec.p, "edge probability for erdos-renyi");
    gen->add_option("--order", order_mode, "as-generated|uniform");

    // match
    auto* match = app.add_subcommand("match", "run the online matcher over a stream");
    std::string match_input = "-";
    double match_C = 0.0;
    match->add_option("--input", match_input, "stream file (default stdin)");
    match->add_option("--C", match_C, "sampling parameter (default delta+2*sqrt(delta)+1)");

    // subsample
    auto* subsample = app.add_subcommand("subsample", "online degree sparsification");
    std::string sub_input = "-";
    int sub_dp = 31;
    subsample->add_option("--input", sub_input, "stream file (default stdin)");
    subsample->add_option("--delta-prime", sub_dp, "target degree")->required();

    // split
    auto* split = app.add_subcommand("split", "random-order partition into T parts");
    std::string split_input = "-";
    int split_dp = 2;
    std::string split_prefix = "split";
    split->add_option("--input", split_input, "stream file (default stdin)");
    split->add_option("--delta-prime", split_dp, "target part degree")->required();
    split->add_option("--out-prefix", split_prefix, "prefix for part stream files");

    // color
    auto* color = app.add_subcommand("color", "run an online coloring strategy");
    std::string color_input = "-";
    std::string color_strategy = "greedy";
    olec::StrategyParams color_params;
    color->add_option("--input", color_input, "stream file (default stdin)");
    color->add_option("--strategy", color_strategy,
                      "greedy|cascade|tree-coloring|pipeline|blank-eps");
    color->add_option("--alpha", color_params.alpha, "cascade alpha");
    color->add_option("--beta", color_params.beta, "cascade beta");
    color->add_option("--delta-prime", color_params.delta_prime, "cascade/pipeline delta'");
    color->add_option("--delta-small", color_params.delta_small, "cascade delta");
    color->add_option("--eps", color_params.eps, "blank-eps epsilon");

    // recurrence
    auto* rec = app.add_subcommand("recurrence", "iterate the error envelopes");
    double rec_C = 41.0;
    int rec_delta = 25, rec_g = 41;
    double rec_delta_small = 0.0;
    rec->add_option("--C", rec_C, "sampling parameter")->required();
    rec->add_option("--delta", rec_delta, "degree bound")->required();
    rec->add_option("--g", rec_g, "depth");
    rec->add_option("--delta-small", rec_delta_small,
                    "delta for the two-step/induction bounds (default 1-lambda)");

    // threshold
    auto* thr = app.add_subcommand("threshold", "critical C and period-2 root");
    int thr_dp = 100;
    double thr_C = 0.0;
    thr->add_option("--delta-prime", thr_dp, "degree bound")->required();
    thr->add_option("--C", thr_C, "sampling parameter (default: the critical value)");

    // game
    auto* game = app.add_subcommand("game", "witness-tree game oracles");
    std::string game_input = "-";
    game->add_option("--input", game_input, "instance file (default stdin)");

    // experiment
    auto* exp = app.add_subcommand("experiment", "run a seeded experiment");
    std::string exp_kind = "random-regular";
    std::string exp_strategy = "greedy";
    olec::ExperimentConfig exp_cfg;
    std::string exp_order = "uniform";
    exp->add_option("--generator", exp_kind, "generator kind");
    exp->add_option("--n", exp_cfg.generator.n, "vertex count");
    exp->add_option("--d", exp_cfg.generator.d, "degree/arity");
    exp->add_option("--depth", exp_cfg.generator.depth, "tree depth");
    exp->add_option("--p", exp_cfg.generator.p, "erdos-renyi probability");
    exp->add_option("--order", exp_order, "as-generated|uniform");
    exp->add_option("--strategy", exp_strategy,
                    "greedy|cascade|tree-coloring|pipeline|blank-eps|matcher");
    exp->add_option("--trials", exp_cfg.trials, "number of trials");
    exp->add_option("--alpha", exp_cfg.params.alpha, "cascade alpha");
    exp->add_option("--beta", exp_cfg.params.beta, "cascade beta");
    exp->add_option("--delta-prime", exp_cfg.params.delta_prime, "delta' where applicable");
    exp->add_option("--g", exp_cfg.params.g, "radius for the cycle metric");
    exp->add_option("--delta-small", exp_cfg.params.delta_small, "cascade delta");
    exp->add_option("--eps", exp_cfg.params.eps, "blank-eps epsilon");
    exp->add_option("--C", exp_cfg.params.C, "matcher C");
    exp->add_flag("--fix-graph", exp_cfg.fix_graph, "reuse one graph across trials");
    exp->add_flag("--timing", exp_cfg.timing, "append wall-clock (nondeterministic) row");
    exp->add_flag("--cycle-metric", exp_cfg.cycle_metric, "report cycle-in-neighborhood rate");

    // verify
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string verify_name = "all";
    verify->add_option("suite", verify_name,
                       "recurrence|game|sparsifier|tree-exact|witness-equivalence|all");

    // Let global flags (--seed, --out, ...) appear after the subcommand too.
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::ofstream file;
        if (gen->parsed()) {
            spec.kind = parse_kind(gen_kind);
            spec.order_mode = order_mode == "uniform" ? olec::OrderMode::UniformlyRandom
                                                      : olec::OrderMode::AsGenerated;
            const olec::EdgeStream s = olec::generate(spec, g.seed);
            olec::emit_stream(s, open_output(g, file));
            return 0;
        }
        if (match->parsed()) {
            const olec::EdgeStream s = read_stream(match_input);
            const olec::Graph& graph = s.graph();
            const double d = graph.delta();
            const double C = match_C > 0.0 ? match_C : d + 2.0 * std::sqrt(d) + 1.0;
            olec::MatcherState state(graph.vertex_count(), C, graph.delta());
            const olec::RandomSource src{g.seed};
            std::vector<olec::MatchOutcome> outcomes(static_cast<std::size_t>(s.size()));
            for (int k = 0; k < s.size(); ++k) {
                const int id = s.arrival(k);
                auto [u, v] = graph.edge(id);
                outcomes[static_cast<std::size_t>(id)] = state.process_edge(
                    id, u, v, olec::uniform_draw(src, 0, static_cast<std::uint64_t>(id)));
            }
            std::ostream& out = open_output(g, file);
            if (g.format == "json") {
                json j;
                j["C"] = C;
                j["matched"] = state.matching();
                j["match_count"] = state.matching().size();
                j["edges"] = s.size();
                out << j.dump(2) << "\n";
            } else {
                out << "# schema=1\n# C=" << olec::format_double(C) << "\n";
                out << "edge_index,u,v,outcome\n";
                const char* names[] = {"matched", "skipped-neighbor-matched", "rejected-by-coin"};
                for (int id = 0; id < s.size(); ++id) {
                    auto [u, v] = graph.edge(id);
                    out << id << ',' << u << ',' << v << ','
                        << names[static_cast<int>(outcomes[static_cast<std::size_t>(id)])] << "\n";
                }
            }
            return 0;
        }
        if (subsample->parsed()) {
            const olec::EdgeStream s = read_stream(sub_input);
            const olec::Graph& graph = s.graph();
            olec::SubsampleState state(graph.vertex_count(), graph.delta(), sub_dp);
            const olec::RandomSource src{g.seed};
            std::vector<int> kept_order;
            for (int k = 0; k < s.size(); ++k) {
                const int id = s.arrival(k);
                auto [u, v] = graph.edge(id);
                if (state.process_edge(id, u, v,
                                       olec::uniform_draw(src, 0, static_cast<std::uint64_t>(id))) ==
                    olec::SubsampleOutcome::Kept)
                    kept_order.push_back(id);
            }
            std::ostream& out = open_output(g, file);
            out << graph.vertex_count() << ' ' << kept_order.size() << ' ' << sub_dp << '\n';
            for (int id : kept_order) {
                auto [u, v] = graph.edge(id);
                out << u << ' ' << v << '\n';
            }
            return 0;
        }
        if (split->parsed()) {
            const olec::EdgeStream s = read_stream(split_input);
            const olec::Graph& graph = s.graph();
            olec::SplitState state(graph.vertex_count(), graph.delta(), split_dp);
            std::vector<std::vector<int>> arrival_order(static_cast<std::size_t>(state.T()) + 1);
            const olec::RandomSource src{g.seed};
            for (int k = 0; k < s.size(); ++k) {
                const int id = s.arrival(k);
                auto [u, v] = graph.edge(id);
                const olec::SplitOutcome out = state.process_edge(
                    id, u, v, olec::uniform_draw(src, 0, static_cast<std::uint64_t>(id)));
                arrival_order[static_cast<std::size_t>(out.part)].push_back(id);
            }
            const int part_delta = static_cast<int>(state.cap());
            for (int p = 0; p <= state.T(); ++p) {
                const std::string path = split_prefix + (p == 0 ? ".reject" : ".part" + std::to_string(p)) + ".txt";
                std::ofstream pf(path);
                if (!pf) throw std::runtime_error("cannot open " + path);
                const auto& ids = arrival_order[static_cast<std::size_t>(p)];
                pf << graph.vertex_count() << ' ' << ids.size() << ' '
                   << (p == 0 ? graph.delta() : part_delta) << '\n';
                for (int id : ids) {
                    auto [u, v] = graph.edge(id);
                    pf << u << ' ' << v << '\n';
                }
            }
            std::cout << "T=" << state.T() << " cap=" << olec::format_double(state.cap())
                      << " reject=" << arrival_order[0].size() << "\n";
            return 0;
        }
        if (color->parsed()) {
            const olec::EdgeStream s = read_stream(color_input);
            const olec::Graph& graph = s.graph();
            const int n = graph.vertex_count();
            const int delta = graph.delta();
            olec::ColoringState state(n, graph.edge_count(), delta);
            const olec::RandomSource src{g.seed};
            std::vector<int> round_of(static_cast<std::size_t>(s.size()), -1);

            auto drive = [&](auto&& one) {
                for (int k = 0; k < s.size(); ++k) {
                    const int id = s.arrival(k);
                    auto [u, v] = graph.edge(id);
                    one(id, u, v);
                }
            };
            if (color_strategy == "greedy") {
                drive([&](int id, int u, int v) { olec::greedy_color(state, id, u, v); });
            } else if (color_strategy == "cascade") {
                const int dp = color_params.delta_prime > 0 ? color_params.delta_prime
                                                            : std::min(delta, 31);
                olec::CascadeColorer strat(
                    olec::CascadeConfig::make(delta, dp, std::max(n, 2), color_params.alpha,
                                              color_params.beta, color_params.delta_small),
                    n, src, 1);
                drive([&](int id, int u, int v) {
                    round_of[static_cast<std::size_t>(id)] = strat.color_edge(state, id, u, v).second;
                });
            } else if (color_strategy == "tree-coloring") {
                olec::TreeColoringColorer strat(olec::TreeColoringConfig::from_delta(delta), n,
                                                src, 1);
                drive([&](int id, int u, int v) {
                    const auto round = strat.color_edge(state, id, u, v);
                    round_of[static_cast<std::size_t>(id)] = round ? *round : -1;
                });
            } else if (color_strategy == "pipeline") {
                const int dp = color_params.delta_prime > 0
                                   ? color_params.delta_prime
                                   : olec::pipeline_default_delta_prime(delta, n);
                olec::RandomOrderPipeline strat(n, delta, dp, src, 1);
                drive([&](int id, int u, int v) {
                    round_of[static_cast<std::size_t>(id)] = strat.color_edge(state, id, u, v).second;
                });
            } else if (color_strategy == "blank-eps") {
                olec::BlankEpsColorer strat(delta, color_params.eps);
                drive([&](int id, int u, int v) {
                    strat.color_edge(state, id, u, v,
                                     olec::uniform_draw(src, 0, static_cast<std::uint64_t>(id)));
                });
            } else {
                throw CLI::ValidationError("unknown strategy: " + color_strategy);
            }
            std::ostream& out = open_output(g, file);
            out << "# schema=1\n";
            out << "edge_index,u,v,color,strategy_round\n";
            for (int id = 0; id < s.size(); ++id) {
                auto [u, v] = graph.edge(id);
                out << id << ',' << u << ',' << v << ',' << state.color_of(id) << ','
                    << round_of[static_cast<std::size_t>(id)] << "\n";
            }
            return 0;
        }
        if (rec->parsed()) {
            const olec::RecurrenceParams params(rec_C, rec_delta, 0.01);
            const double delta_small =
                rec_delta_small > 0.0 ? rec_delta_small : 1.0 - params.lambda;
            const olec::ErrorProfile prof = olec::envelope_iterate(params, rec_g);
            const double K = 1000.0 / (delta_small * rec_C);
            std::ostream& out = open_output(g, file);
            out << "# schema=1\n# lambda=" << olec::format_double(params.lambda)
                << " delta=" << olec::format_double(delta_small) << "\n";
            out << "level,eps_min,eps_max,two_step_bound,induction_bound\n";
            for (int l = 0; l <= prof.levels; ++l) {
                out << l << ',' << olec::format_double(prof.eps_min[static_cast<std::size_t>(l)])
                    << ',' << olec::format_double(prof.eps_max[static_cast<std::size_t>(l)]) << ',';
                if (l >= 2)
                    out << olec::format_double(
                        olec::f_delta(delta_small,
                                      olec::f_delta(delta_small,
                                                    prof.eps_max[static_cast<std::size_t>(l - 2)])) +
                        1000.0 / rec_C);
                out << ',';
                if (l % 2 == 0)
                    out << olec::format_double((1.0 - K) * std::pow(1.0 - delta_small, l / 2) + K);
                out << "\n";
            }
            return 0;
        }
        if (thr->parsed()) {
            const double crit = olec::critical_C(thr_dp);
            const double C = thr_C > 0.0 ? thr_C : crit;
            const double lambda = std::log(C / (C - thr_dp));
            const auto root = olec::period2_fixed_point(lambda);
            std::ostream& out = open_output(g, file);
            if (g.format == "json") {
                json j;
                j["delta_prime"] = thr_dp;
                j["critical_C"] = crit;
                j["C"] = C;
                j["lambda"] = lambda;
                if (root)
                    j["period2_root"] = *root;
                else
                    j["period2_root"] = nullptr;
                out << j.dump(2) << "\n";
            } else {
                out << "# schema=1\ndelta_prime,critical_C,C,lambda,period2_root\n";
                out << thr_dp << ',' << olec::format_double(crit) << ','
                    << olec::format_double(C) << ',' << olec::format_double(lambda) << ',';
                if (root) out << olec::format_double(*root);
                out << "\n";
            }
            return 0;
        }
        if (game->parsed()) {
            GameInstance inst;
            if (game_input.empty() || game_input == "-") {
                inst = load_game_instance(std::cin);
            } else {
                std::ifstream in(game_input);
                if (!in) throw std::runtime_error("cannot open input file: " + game_input);
                inst = load_game_instance(in);
            }
            json j;
            j["edges"] = inst.tree.edge_count();
            j["boundary"] = inst.tree.boundary_count();
            j["C"] = inst.C;
            j["dp"] = olec::dp_match_probability(inst.tree, inst.decisions, inst.C);
            if (inst.tree.edge_count() <= 25)
                j["enumeration"] =
                    olec::exact_match_probability(inst.tree, inst.decisions, inst.C);
            else
                j["enumeration"] = nullptr;
            if (inst.tree.edge_count() <= 20)
                j["adaptive_min"] = olec::adaptive_min_probability(inst.tree, inst.C);
            else
                j["adaptive_min"] = nullptr;
            j["all_unmatched"] = olec::dp_match_probability(
                inst.tree, olec::BoundaryAssignment::all_unmatched(), inst.C);
            j["all_matched"] = olec::dp_match_probability(
                inst.tree, olec::BoundaryAssignment::all_matched(), inst.C);
            open_output(g, file) << j.dump(2) << "\n";
            return 0;
        }
        if (exp->parsed()) {
            exp_cfg.generator.kind = parse_kind(exp_kind);
            exp_cfg.generator.order_mode = exp_order == "uniform"
                                               ? olec::OrderMode::UniformlyRandom
                                               : olec::OrderMode::AsGenerated;
            if (exp_strategy == "greedy")
                exp_cfg.strategy = olec::StrategyKind::Greedy;
            else if (exp_strategy == "cascade")
                exp_cfg.strategy = olec::StrategyKind::Cascade;
            else if (exp_strategy == "tree-coloring")
                exp_cfg.strategy = olec::StrategyKind::TreeColoring;
            else if (exp_strategy == "pipeline")
                exp_cfg.strategy = olec::StrategyKind::Pipeline;
            else if (exp_strategy == "blank-eps")
                exp_cfg.strategy = olec::StrategyKind::BlankEps;
            else if (exp_strategy == "matcher")
                exp_cfg.strategy = olec::StrategyKind::Matcher;
            else
                throw CLI::ValidationError("unknown strategy: " + exp_strategy);
            exp_cfg.seed = g.seed;
            exp_cfg.threads = g.threads;
            const olec::Report report = olec::run_experiment(exp_cfg);
            open_output(g, file) << (g.format == "json" ? report.to_json() + "\n"
                                                        : report.to_csv());
            return 0;
        }
        if (verify->parsed()) {
            if (verify_name != "all") {
                const auto names = olec::verify_suite_names();
                if (std::find(names.begin(), names.end(), verify_name) == names.end()) {
                    std::cerr << "unknown suite: " << verify_name << "\n";
                    return 2;
                }
            }
            return run_verify(verify_name);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const olec::PropernessViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
