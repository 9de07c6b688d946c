#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "schelling/constructions.hpp"
#include "schelling/equilibrium.hpp"
#include "schelling/error.hpp"
#include "schelling/instance_file.hpp"
#include "schelling/instances.hpp"
#include "schelling/report.hpp"
#include "schelling/verify/acceptance.hpp"
#include "schelling/verify/graphs.hpp"

namespace schelling::cli {

namespace {

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCode::InvalidParameters, message); }

// Tolerance flags shared by several subcommands.
struct ToleranceFlags {
    std::string list;
    std::string kind;
    std::optional<int> alpha;

    void attach(CLI::App* app) {
        app->add_option("--tolerance", list, "explicit vector, e.g. 1,1/2,0");
        app->add_option("--kind", kind, "zero | alpha-binary | proportional | inverse-proportional");
        app->add_option("--alpha", alpha, "alpha for --kind alpha-binary");
    }

    [[nodiscard]] std::optional<ToleranceVector> resolve(int lambda) const {
        if (!list.empty()) return parse_tolerance_list(list);
        if (!kind.empty()) {
            const auto k = parse_tolerance_kind(kind);
            if (!k) bad("unknown tolerance kind '" + kind + "'");
            return standard_tolerance(*k, lambda, alpha);
        }
        return std::nullopt;
    }

    [[nodiscard]] ToleranceVector resolve_or_zero(int lambda) const {
        auto tv = resolve(lambda);
        return tv ? *tv : standard_tolerance(ToleranceKind::zero, lambda);
    }
};

const Assignment& find_assignment(const InstanceFile& file, const std::string& label) {
    const auto it = file.assignments.find(label);
    if (it == file.assignments.end()) {
        std::string known;
        for (const auto& [name, a] : file.assignments) known += (known.empty() ? "" : ", ") + name;
        bad("no assignment labelled '" + label + "'" + (known.empty() ? "" : " (have: " + known + ")"));
    }
    return it->second;
}

// A label from the file's tolerance section, or an explicit list.
GameInstance game_under(const InstanceFile& file, const std::string& tolerance) {
    if (tolerance.empty()) return file.game;
    if (const auto it = file.tolerances.find(tolerance); it != file.tolerances.end()) {
        return file.game.with_tolerance(it->second);
    }
    return file.game.with_tolerance(parse_tolerance_list(tolerance));
}

// --- generate --------------------------------------------------------------------

struct GenerateArgs {
    std::string name;
    std::string output;
    int lambda = 2;
    int mu = 1;
    int b = 2;
    std::string t1 = "0";
    int rows = 0;
    int cols = 0;
    int size = 0;
    int agents = 2;
    int extra_edges = 0;
    std::uint64_t seed = 1;
    ToleranceFlags tolerance;
};

InstanceFile generated(const GenerateArgs& g) {
    if (g.name == "no-eq-tree") {
        return to_instance_file(no_equilibrium_tree_game(g.lambda, g.tolerance.resolve_or_zero(g.lambda)));
    }
    if (g.name == "poa-lb") return to_instance_file(poa_lb_game(g.lambda, g.mu, g.tolerance.resolve_or_zero(g.lambda)));
    if (g.name == "pos") return to_instance_file(pos_game(g.b, Rational::parse(g.t1)));
    if (g.name == "seven-type-grid") return to_instance_file(seven_type_grid_example());

    Topology topo = [&] {
        if (g.name == "grid") return grid(g.rows, g.cols);
        if (auto kind = parse_graph_kind(g.name)) return standard_graph(*kind, g.size);
        std::mt19937_64 rng(g.seed);
        if (g.name == "random-tree") return verify::random_tree(g.size, rng);
        if (g.name == "random-graph") return verify::random_connected_graph(g.size, g.extra_edges, rng);
        bad("unknown instance '" + g.name + "'");
    }();
    InstanceFile file{g.name, GameInstance::make(std::move(topo), g.agents, g.tolerance.resolve_or_zero(g.lambda)),
                      {}, {}, {}};
    if (g.name == "random-tree" || g.name == "random-graph") file.metadata["seed"] = std::to_string(g.seed);
    return file;
}

int cmd_generate(const GenerateArgs& g) {
    const auto file = generated(g);
    write_instance_file(g.output, file);
    std::cout << "instance: " << (file.name.empty() ? g.name : file.name) << "\n";
    std::cout << "nodes: " << file.game.node_count() << "\n";
    std::cout << "edges: " << file.game.topology().edge_count() << "\n";
    std::cout << "lambda: " << file.game.lambda() << "\n";
    std::cout << "agents: " << file.game.agent_count() << "\n";
    std::cout << "assignments: " << file.assignments.size() << "\n";
    std::cout << "wrote " << g.output << "\n";
    return kExitOk;
}

// --- check / construct / dynamics ---------------------------------------------------

int cmd_check(const std::string& input, const std::string& label, const std::string& tolerance) {
    const auto file = read_instance_file(input);
    const auto game = game_under(file, tolerance);
    const auto& a = find_assignment(file, label);
    std::cout << render_check(game, a, is_equilibrium(game, a));
    return kExitOk;
}

int cmd_construct(const std::string& input, const std::string& method, std::string label, std::string output) {
    auto file = read_instance_file(input);
    Assignment a;
    if (method == "zts-grid") a = construct_2zts_grid(file.game);
    else if (method == "binary-grid") a = construct_binary_grid(file.game);
    else if (method == "band-grid") a = construct_band_grid(file.game);
    else if (method == "tree") a = construct_tree_equilibrium(file.game);
    else bad("unknown method '" + method + "'");
    if (label.empty()) label = method;
    if (output.empty()) output = input;
    std::cout << "method: " << method << "\n";
    std::cout << render_layout(file.game, a);
    std::cout << render_check(file.game, a, is_equilibrium(file.game, a));
    file.assignments.insert_or_assign(label, a);
    write_instance_file(output, file);
    std::cout << "stored as '" << label << "' in " << output << "\n";
    return kExitOk;
}

int cmd_dynamics(const std::string& input, const std::string& label, std::size_t max_steps, std::size_t trace_limit) {
    const auto file = read_instance_file(input);
    const auto result = best_response_dynamics(file.game, find_assignment(file, label), max_steps);
    std::cout << render_dynamics(file.game, result, trace_limit);
    return kExitOk;
}

// --- enumerate / sweep ---------------------------------------------------------------

int cmd_enumerate(const std::string& input, std::uint64_t budget, int workers, bool list) {
    const auto file = read_instance_file(input);
    const auto result = enumerate_placements(file.game, {budget, workers});
    std::cout << render_enumeration(file.game, result, list);
    return kExitOk;
}

struct SweepArgs {
    int min_nodes = 5;
    int max_nodes = 6;
    int lambda = 2;
    int agents = 2;
    bool trees_only = false;
    std::uint64_t budget = kDefaultEnumerationBudget;
    int workers = 1;
    std::string output;
    ToleranceFlags tolerance;
};

int cmd_sweep(const SweepArgs& s) {
    const auto tv = s.tolerance.resolve_or_zero(s.lambda);
    std::ofstream file;
    if (!s.output.empty()) {
        file.open(s.output);
        if (!file) bad("cannot write " + s.output);
    }
    std::ostream& out = s.output.empty() ? std::cout : file;
    out << "instance,lambda,n,topology,eq_count,opt,poa,pos\n";
    for (int nodes = s.min_nodes; nodes <= s.max_nodes; ++nodes) {
        if (nodes <= s.lambda * s.agents) continue;
        int index = 0;
        for (const auto& topo : verify::connected_graphs(nodes)) {
            const std::string id = "g" + std::to_string(nodes) + "-" + std::to_string(index++);
            if (s.trees_only && !topo.is_tree()) continue;
            const auto game = GameInstance::make(topo, s.agents, tv);
            const auto result = enumerate_placements(game, {s.budget, s.workers});
            std::string poa = "undefined";
            std::string pos = "undefined";
            try {
                const auto prices = price_report(result);
                poa = prices.poa.str();
                pos = prices.pos.str();
            } catch (const Error&) {
                // no equilibrium, or a zero-welfare one
            }
            out << id << "," << s.lambda << "," << game.agent_count() << "," << (topo.is_tree() ? "tree" : "graph")
                << "," << result.equilibria.size() << "," << result.opt.str() << "," << poa << "," << pos << "\n";
        }
    }
    return kExitOk;
}

// --- bounds / verify-paper / export-dot ---------------------------------------------------

int cmd_bounds(const std::string& kind_name, int lambda, int n, const ToleranceFlags& tolerance) {
    const auto kind = parse_bound_kind(kind_name);
    if (!kind) bad("unknown bound kind '" + kind_name + "'");
    std::cout << exact_and_decimal(evaluate_bound(*kind, {lambda, n, tolerance.resolve(lambda)})) << "\n";
    return kExitOk;
}

int cmd_verify(const std::vector<int>& only, std::uint64_t seed, int workers) {
    std::vector<int> ids = only;
    if (ids.empty()) {
        for (int id = 1; id <= verify::kCriterionCount; ++id) ids.push_back(id);
    }
    int passed = 0;
    for (int id : ids) {
        const auto r = verify::run_criterion(id, {seed, workers});
        std::cout << verify::format_line(r) << std::endl;
        passed += r.passed ? 1 : 0;
    }
    std::cout << passed << "/" << ids.size() << " criteria passed\n";
    return passed == static_cast<int>(ids.size()) ? kExitOk : kExitError;
}

int cmd_export_dot(const std::string& input, const std::string& label, const std::string& output) {
    const auto file = read_instance_file(input);
    std::vector<int> types;
    if (!label.empty()) {
        const auto& a = find_assignment(file, label);
        types.assign(a.types().begin(), a.types().end());
    }
    const auto text = to_dot(file.game.topology(), types);
    if (output.empty() || output == "-") {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(output);
    if (!out) bad("cannot write " + output);
    out << text;
    std::cout << "wrote " << output << "\n";
    return kExitOk;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Tolerance Schelling games: equilibria, constructions and bounds"};
    app.require_subcommand(1);
    std::function<int()> action;

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "write an instance file");
    generate->add_option("name", gen.name,
                         "no-eq-tree | poa-lb | pos | seven-type-grid | grid | path | cycle | clique | star | "
                         "random-tree | random-graph")
        ->required();
    generate->add_option("-o,--output", gen.output, "instance file to write")->required();
    generate->add_option("--lambda", gen.lambda, "number of types");
    generate->add_option("--mu", gen.mu, "chain parameter of poa-lb");
    generate->add_option("--b", gen.b, "size parameter of pos");
    generate->add_option("--t1", gen.t1, "t_1 of pos, as p/q");
    generate->add_option("--rows", gen.rows);
    generate->add_option("--cols", gen.cols);
    generate->add_option("--size", gen.size, "node count for path/cycle/clique/star/random-*");
    generate->add_option("--agents", gen.agents, "agents per type for generic topologies");
    generate->add_option("--extra-edges", gen.extra_edges, "chords added by random-graph");
    generate->add_option("--seed", gen.seed);
    gen.tolerance.attach(generate);
    generate->callback([&] { action = [&] { return cmd_generate(gen); }; });

    std::string input;
    std::string label;
    std::string tolerance_label;
    auto* check = app.add_subcommand("check", "test an assignment for equilibrium");
    check->add_option("-i,--input", input)->required();
    check->add_option("--assignment", label)->required();
    check->add_option("--tolerance", tolerance_label, "tolerance label from the file, or an explicit vector");
    check->callback([&] { action = [&] { return cmd_check(input, label, tolerance_label); }; });

    std::string method;
    std::string output;
    auto* construct = app.add_subcommand("construct", "run an equilibrium construction and store it");
    construct->add_option("-i,--input", input)->required();
    construct->add_option("--method", method, "zts-grid | binary-grid | band-grid | tree")->required();
    construct->add_option("--label", label, "assignment label (default: the method)");
    construct->add_option("-o,--output", output, "write here instead of updating the input");
    construct->callback([&] { action = [&] { return cmd_construct(input, method, label, output); }; });

    std::size_t max_steps = 1000;
    std::size_t trace_limit = 20;
    auto* dynamics = app.add_subcommand("dynamics", "best-response dynamics from an assignment");
    dynamics->add_option("-i,--input", input)->required();
    dynamics->add_option("--assignment", label)->required();
    dynamics->add_option("--max-steps", max_steps);
    dynamics->add_option("--trace-limit", trace_limit, "moves to print");
    dynamics->callback([&] { action = [&] { return cmd_dynamics(input, label, max_steps, trace_limit); }; });

    std::uint64_t budget = kDefaultEnumerationBudget;
    int workers = 1;
    bool list = false;
    auto* enumerate = app.add_subcommand("enumerate", "exhaustive equilibria, OPT, PoA and PoS");
    enumerate->add_option("-i,--input", input)->required();
    enumerate->add_option("--budget", budget, "maximum number of type-placements");
    enumerate->add_option("--workers", workers)->check(CLI::Range(1, 256));
    enumerate->add_flag("--list", list, "print every equilibrium");
    enumerate->callback([&] { action = [&] { return cmd_enumerate(input, budget, workers, list); }; });

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "enumerate every connected graph in a node range, CSV out");
    sweep->add_option("--min-nodes", sweep_args.min_nodes)->check(CLI::Range(1, 7));
    sweep->add_option("--max-nodes", sweep_args.max_nodes)->check(CLI::Range(1, 7));
    sweep->add_option("--lambda", sweep_args.lambda);
    sweep->add_option("--agents", sweep_args.agents, "agents per type");
    sweep->add_flag("--trees-only", sweep_args.trees_only);
    sweep->add_option("--budget", sweep_args.budget);
    sweep->add_option("--workers", sweep_args.workers)->check(CLI::Range(1, 256));
    sweep->add_option("-o,--output", sweep_args.output, "CSV file (default stdout)");
    sweep_args.tolerance.attach(sweep);
    sweep->callback([&] { action = [&] { return cmd_sweep(sweep_args); }; });

    std::string bound_kind;
    int lambda = 2;
    int n = 0;
    ToleranceFlags bound_tolerance;
    auto* bounds = app.add_subcommand("bounds", "evaluate a closed-form PoA/PoS bound");
    bounds->add_option("--kind", bound_kind,
                       "poa-upper | poa-lower | zts-poa | pos-lower | proportional-poa-upper | inverse-poa-upper")
        ->required();
    bounds->add_option("--lambda", lambda)->required();
    bounds->add_option("--n", n, "number of agents");
    bounds->add_option("--tolerance", bound_tolerance.list, "explicit vector, e.g. 1,1/2");
    bounds->add_option("--tolerance-kind", bound_tolerance.kind);
    bounds->add_option("--alpha", bound_tolerance.alpha);
    bounds->callback([&] { action = [&] { return cmd_bounds(bound_kind, lambda, n, bound_tolerance); }; });

    std::vector<int> criteria;
    std::uint64_t seed = verify::AcceptanceOptions{}.seed;
    int verify_workers = verify::AcceptanceOptions{}.workers;
    auto* verify_cmd = app.add_subcommand("verify-paper", "run the acceptance criteria");
    verify_cmd->add_option("--theorem,--criterion", criteria, "criterion number(s), 1-12")
        ->check(CLI::Range(1, verify::kCriterionCount));
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--workers", verify_workers)->check(CLI::Range(1, 256));
    verify_cmd->callback([&] { action = [&] { return cmd_verify(criteria, seed, verify_workers); }; });

    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of the topology");
    dot->add_option("-i,--input", input)->required();
    dot->add_option("--assignment", label, "color nodes by this assignment");
    dot->add_option("-o,--output", output, "DOT file (default stdout)");
    dot->callback([&] { action = [&] { return cmd_export_dot(input, label, output); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        return action();
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return e.code() == ErrorCode::BudgetExceeded ? kExitBudget : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: Internal: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace schelling::cli
