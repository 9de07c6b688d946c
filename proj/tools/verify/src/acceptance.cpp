#include "schelling/verify/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>

#include "schelling/constructions.hpp"
#include "schelling/equilibrium.hpp"
#include "schelling/error.hpp"
#include "schelling/instances.hpp"
#include "schelling/report.hpp"
#include "schelling/verify/graphs.hpp"
#include "schelling/verify/oracle.hpp"

namespace schelling::verify {

namespace {

constexpr std::uint64_t kOracleSalt = 0x9e3779b97f4a7c15ULL;

struct Outcome {
    bool passed = true;
    std::ostringstream detail;
};

// An equilibrium produced somewhere in criteria 1-6, kept for the welfare floor check.
struct Witnessed {
    GameInstance game;
    Assignment assignment;
};

// --- instance families shared by several criteria ------------------------------

ToleranceVector binary(int lambda, int alpha) { return standard_tolerance(ToleranceKind::alpha_binary, lambda, alpha); }

std::vector<GameInstance> no_equilibrium_tree_games() {
    return {no_equilibrium_tree_game(2, ToleranceVector::make({1, Rational(1, 2)})).game,
            no_equilibrium_tree_game(2, ToleranceVector::make({1, 0})).game};
}

std::vector<GameInstance> zts_grid_games() {
    std::vector<GameInstance> out;
    const auto zero = standard_tolerance(ToleranceKind::zero, 2);
    for (int m = 2; m <= 6; ++m) {
        for (int cols = m; cols <= 6; ++cols) {
            for (int n = 4; n < m * cols; n += 2) out.push_back(GameInstance::make(grid(m, cols), n / 2, zero));
        }
    }
    return out;
}

// The 2-binary vector for two types is [1, 1], which is not a valid tolerance
// vector, so the sweep starts at three types.
std::vector<GameInstance> binary_grid_games() {
    std::vector<GameInstance> out;
    for (int m = 2; m <= 6; ++m) {
        for (int cols = m; cols <= 6; ++cols) {
            for (int lambda = 3; lambda <= 7; ++lambda) {
                for (int x = 2; lambda * x < m * cols; ++x) {
                    out.push_back(GameInstance::make(grid(m, cols), x, binary(lambda, 2)));
                }
            }
        }
    }
    return out;
}

std::vector<GameInstance> band_grid_games() {
    return {GameInstance::make(grid(2, 5), 2, binary(4, 2)), GameInstance::make(grid(4, 5), 2, binary(9, 3))};
}

std::vector<GameInstance> tree_games(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<GameInstance> out;
    for (int k = 0; k < 50; ++k) {
        const int nodes = std::uniform_int_distribution<int>(8, 30)(rng);
        const auto tree = std::make_shared<const Topology>(random_tree(nodes, rng));
        for (int lambda = 3; lambda <= 6; ++lambda) {
            for (int x = 2; lambda * x < nodes; ++x) {
                out.push_back(GameInstance::make(tree, lambda, x, binary(lambda, tree_alpha(lambda))));
            }
        }
    }
    return out;
}

// Monotone vectors lexicographically above `base`: raise one tail entry at a time.
std::vector<ToleranceVector> vectors_above(const ToleranceVector& base) {
    std::vector<ToleranceVector> out;
    const auto& v = base.values();
    for (std::size_t d = 1; d < v.size(); ++d) {
        if (v[d] == Rational(1)) continue;
        for (const Rational& bump : {Rational(1, 7), Rational(1, 2), Rational(5, 6)}) {
            auto values = v;
            values[d] = std::min(values[d - 1], values[d] + bump);
            for (std::size_t k = d + 1; k < values.size(); ++k) values[k] = std::min(values[k], values[d]);
            if (values.back() == Rational(1)) continue;
            auto tv = ToleranceVector::make(values);
            if (lexicographically_less(base, tv)) out.push_back(std::move(tv));
        }
    }
    return out;
}

struct RandomGame {
    std::string id;
    GameInstance game;
};

std::vector<RandomGame> random_small_games(std::uint64_t seed, int count, std::uint64_t max_placements) {
    std::mt19937_64 rng(seed);
    std::vector<RandomGame> out;
    while (static_cast<int>(out.size()) < count) {
        const int lambda = std::uniform_int_distribution<int>(2, 3)(rng);
        const int nodes = std::uniform_int_distribution<int>(lambda * 2 + 1, 9)(rng);
        const int x = 2;
        if (lambda * x >= nodes) continue;
        const int extra = std::uniform_int_distribution<int>(0, nodes)(rng);
        auto topo = random_connected_graph(nodes, extra, rng);
        auto game = GameInstance::make(std::move(topo), x, random_tolerance(lambda, rng));
        if (placement_count(game) > max_placements) continue;
        out.push_back({"r" + std::to_string(out.size()), std::move(game)});
    }
    return out;
}

std::string join_compact(const std::vector<Assignment>& list) {
    std::string out;
    for (const auto& a : list) out += a.compact() + "\n";
    return out;
}

std::string join_compact(const std::vector<std::vector<int>>& list) {
    std::string out;
    for (const auto& types : list) {
        std::string line;
        for (int t : types) line += t == 0 ? '.' : static_cast<char>(t < 10 ? '0' + t : 'a' + t - 10);
        out += line + "\n";
    }
    return out;
}

Rational welfare_floor(const GameInstance& game) {
    const Rational tau = tolerance_sums(game.tolerance()).tau;
    return (tau * Rational(game.agent_count()) - Rational(game.lambda())) / Rational(game.lambda());
}

bool all_utilities_one(const GameInstance& game, const Assignment& a) {
    for (NodeId v : a.occupied_nodes()) {
        if (utility(game, a, v) != Rational(1)) return false;
    }
    return true;
}

// --- criteria --------------------------------------------------------------------

void no_equilibrium_tree(Outcome& out) {
    for (const auto& game : no_equilibrium_tree_games()) {
        const auto start = std::chrono::steady_clock::now();
        const auto result = enumerate_placements(game);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string tv = "[";
        for (const auto& t : game.tolerance().values()) tv += (tv.size() > 1 ? "," : "") + t.str();
        tv += "]";
        out.detail << tv << ": " << result.placements << " placements, " << result.equilibria.size() << " equilibria, "
                   << secs << " s; ";
        out.passed = out.passed && result.placements == 2772 && result.equilibria.empty() && secs < 10.0 &&
                     game.node_count() == 11 && game.agent_count() == 10;
    }
}

void run_constructions(Outcome& out, const std::vector<GameInstance>& games,
                       const std::function<Assignment(const GameInstance&)>& construct, const char* what) {
    int failures = 0;
    std::string first;
    for (const auto& game : games) {
        try {
            const auto a = construct(game);
            if (!is_equilibrium(game, a)) {
                ++failures;
                if (first.empty()) first = "not an equilibrium on " + std::to_string(game.node_count()) + " nodes";
            }
        } catch (const Error& e) {
            ++failures;
            if (first.empty()) first = e.what();
        }
    }
    out.passed = failures == 0;
    out.detail << games.size() << " " << what << ", " << failures << " failures";
    if (!first.empty()) out.detail << " (first: " << first << ")";
}

void seven_type_grid(Outcome& out) {
    const auto inst = seven_type_grid_example();
    const auto& a = inst.assignments.at("equilibrium_v");
    const auto good = is_equilibrium(inst.game.with_tolerance(inst.tolerances.at("binary")), a);
    const auto bad = is_equilibrium(inst.game.with_tolerance(inst.tolerances.at("perturbed")), a);
    out.detail << "rows " << a.compact().substr(0, 4) << "/" << a.compact().substr(4, 4) << "/"
               << a.compact().substr(8, 4) << "/" << a.compact().substr(12, 4) << "; binary: "
               << (good ? "equilibrium" : "NOT equilibrium");
    out.passed = good.is_equilibrium && !bad.is_equilibrium && bad.witness &&
                 bad.witness->old_utility == Rational(2, 3) && bad.witness->new_utility == Rational(11, 15) &&
                 a.type_at(bad.witness->from_node) == 4;
    if (bad.witness) {
        out.detail << "; perturbed: witness node " << bad.witness->from_node << " (type "
                   << a.type_at(bad.witness->from_node) << ") -> " << bad.witness->to_node << ", "
                   << bad.witness->old_utility << " -> " << bad.witness->new_utility;
    } else {
        out.detail << "; perturbed: no witness";
    }
}

void band_grids(Outcome& out) {
    int rechecks = 0;
    for (const auto& game : band_grid_games()) {
        const auto a = construct_band_grid(game);
        const bool eq = is_equilibrium(game, a).is_equilibrium;
        const bool ones = all_utilities_one(game, a);
        bool above = true;
        for (const auto& tv : vectors_above(game.tolerance())) {
            ++rechecks;
            above = above && is_equilibrium(game.with_tolerance(tv), a).is_equilibrium;
        }
        out.passed = out.passed && eq && ones && above;
        out.detail << "lambda " << game.lambda() << " on " << game.topology().grid()->rows << "x"
                   << game.topology().grid()->cols << ": " << (eq ? "equilibrium" : "NOT equilibrium")
                   << (ones ? ", all utilities 1" : ", some utility below 1") << "; ";
    }
    out.detail << rechecks << " rechecks under larger vectors";
}

void welfare_floor_check(Outcome& out, std::uint64_t seed) {
    std::vector<Witnessed> checked;
    auto add = [&](const GameInstance& game, const std::function<Assignment(const GameInstance&)>& f) {
        try {
            auto a = f(game);
            if (is_equilibrium(game, a)) checked.push_back({game, std::move(a)});
        } catch (const Error&) {
            // construction failures are reported by their own criterion
        }
    };
    for (const auto& game : no_equilibrium_tree_games()) {
        for (auto& a : enumerate_equilibria(game)) checked.push_back({game, std::move(a)});
    }
    for (const auto& g : zts_grid_games()) add(g, construct_2zts_grid);
    for (const auto& g : binary_grid_games()) add(g, construct_binary_grid);
    for (const auto& g : band_grid_games()) add(g, construct_band_grid);
    for (const auto& g : tree_games(seed)) add(g, construct_tree_equilibrium);
    const auto fig = seven_type_grid_example();
    checked.push_back({fig.game, fig.assignments.at("equilibrium_v")});
    const auto constructed = checked.size();

    std::mt19937_64 rng(seed ^ 0x5eedULL);
    int random_games = 0;
    int attempts = 0;
    while (random_games < 20 && attempts < 2000) {
        ++attempts;
        const int lambda = std::uniform_int_distribution<int>(2, 3)(rng);
        const int nodes = std::uniform_int_distribution<int>(2 * lambda + 1, 8)(rng);
        auto topo = random_connected_graph(nodes, std::uniform_int_distribution<int>(0, nodes)(rng), rng);
        auto game = GameInstance::make(std::move(topo), 2, random_tolerance(lambda, rng));
        if (placement_count(game) > 200000) continue;
        auto eqs = enumerate_equilibria(game);
        if (eqs.empty()) continue;
        ++random_games;
        for (auto& a : eqs) checked.push_back({game, std::move(a)});
    }

    int violations = 0;
    for (const auto& w : checked) {
        if (social_welfare(w.game, w.assignment) < welfare_floor(w.game)) ++violations;
    }
    out.passed = violations == 0 && random_games == 20;
    out.detail << constructed << " equilibria from the construction sweeps, " << checked.size() - constructed
               << " enumerated over " << random_games << " random games; " << violations
               << " below (tau*n - lambda)/lambda";
}

void poa_lower_bound(Outcome& out) {
    for (auto kind : {ToleranceKind::zero, ToleranceKind::proportional, ToleranceKind::inverse_proportional}) {
        const auto tv = standard_tolerance(kind, 3);
        const auto inst = poa_lb_game(3, 1, tv);
        const auto& v = inst.assignments.at("equilibrium_v");
        const auto& opt = inst.assignments.at("optimal");
        const bool eq = is_equilibrium(inst.game, v).is_equilibrium;
        const Rational sw = social_welfare(inst.game, v);
        const Rational sw_opt = social_welfare(inst.game, opt);
        const Rational form = poa_lb_equilibrium_welfare(3, 1, tv);
        const Rational ratio = sw_opt / sw;
        const Rational bound = evaluate_bound(BoundKind::poa_lower, {3, 21, tv});
        bool ok = eq && sw == form && sw_opt == Rational(21) && ratio == bound && inst.game.node_count() == 43;
        if (kind == ToleranceKind::zero) {
            ok = ok && sw == Rational(21, 3) - 1 && ratio == Rational(7, 2) &&
                 ratio == evaluate_bound(BoundKind::zts_poa, {3, 21, std::nullopt});
        }
        out.passed = out.passed && ok;
        out.detail << to_string(kind) << ": sw " << sw << " (form " << form << "), opt " << sw_opt << ", ratio "
                   << ratio << (eq ? "" : ", NOT equilibrium") << "; ";
    }
}

void pos_instance(Outcome& out) {
    const int b = 2;
    for (const Rational& t1 : {Rational(1, 2), Rational(0)}) {
        const auto inst = pos_game(b, t1);
        const auto sizes = pos_game_sizes(b);
        const auto& v = inst.assignments.at("equilibrium_v");
        const auto& star = inst.assignments.at("v_star");
        const bool eq = is_equilibrium(inst.game, v).is_equilibrium;

        // Y agents see b red X agents and the blue s
        const Rational y_expected = (Rational(1) + t1 * b) / Rational(b + 1);
        bool y_ok = true;
        for (NodeId y : inst.groups.at("Y")) {
            if (v.occupied(y)) y_ok = y_ok && utility(inst.game, v, y) == y_expected;
        }
        Rational x_min(1);
        for (NodeId x : inst.groups.at("X")) x_min = std::min(x_min, utility(inst.game, v, x));
        const Rational x_floor(sizes.z, sizes.z + 2);

        const Rational sw = social_welfare(inst.game, v);
        const Rational sw_star = social_welfare(inst.game, star);
        const bool sw_ok = sw == pos_equilibrium_welfare(b, t1);
        const bool star_ok = sw_star == pos_vstar_welfare(b, t1);
        const bool printed_ok = sw_star == pos_vstar_welfare_zero_tolerance_form(b, t1);
        bool ok = eq && y_ok && x_min >= x_floor && sw_ok && star_ok && sw_star > pos_vstar_lower_bound(b, t1) &&
                  inst.game.node_count() == 121;
        if (t1 == Rational(0)) ok = ok && y_expected == Rational(1, b + 1) && printed_ok;
        out.passed = out.passed && ok;
        out.detail << "t1=" << t1 << ": " << (eq ? "equilibrium" : "NOT equilibrium") << ", Y-blue " << y_expected
                   << (y_ok ? "" : " (mismatch)") << ", X-red min " << x_min << " >= " << x_floor << ", SW(v) " << sw
                   << (sw_ok ? " = form" : " != form") << ", SW(v*) " << sw_star << (star_ok ? " = form" : " != form")
                   << (printed_ok ? "" : " (t1-free form gives " + pos_vstar_welfare_zero_tolerance_form(b, t1).str() + ")")
                   << ", ratio " << exact_and_decimal(sw_star / sw) << "; ";
    }
    out.detail << "uniqueness not checked";
}

void two_type_equivalence(Outcome& out) {
    int graphs = 0;
    int games = 0;
    int violations = 0;
    const auto zero = standard_tolerance(ToleranceKind::zero, 2);
    for (int nodes = 5; nodes <= 7; ++nodes) {
        for (const auto& topo : connected_graphs(nodes)) {
            ++graphs;
            const auto shared = std::make_shared<const Topology>(topo);
            const auto base = GameInstance::make(shared, 2, 2, zero);
            const auto zero_eq = enumerate_equilibria(base);
            for (const Rational& t1 : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
                ++games;
                const auto tolerant = base.with_tolerance(ToleranceVector::make({1, t1}));
                for (const auto& a : enumerate_equilibria(tolerant)) {
                    if (!is_equilibrium(base, a)) ++violations;
                }
                for (const auto& a : zero_eq) {
                    if (isolated_agents(base, a).empty() && !is_equilibrium(tolerant, a)) ++violations;
                }
            }
        }
    }
    out.passed = violations == 0 && graphs == 21 + 112 + 853;
    out.detail << graphs << " connected graphs on 5..7 nodes (4 agents need at least 5), " << games
               << " tolerant games, " << violations << " violations";
}

void oracle_equivalence(Outcome& out, std::uint64_t seed) {
    int mismatches = 0;
    std::uint64_t total = 0;
    const auto games = random_small_games(seed ^ kOracleSalt, 30, 5000);
    for (const auto& [id, game] : games) {
        const auto fast = enumerate_placements(game);
        const auto slow = naive_enumerate(game);
        total += slow.placements;
        const bool same = fast.placements == slow.placements &&
                          join_compact(fast.equilibria) == join_compact(slow.equilibria) && fast.opt == slow.opt &&
                          std::vector<int>(fast.optimum.types().begin(), fast.optimum.types().end()) == slow.optimum;
        if (!same) {
            ++mismatches;
            if (mismatches == 1) out.detail << "first mismatch on " << id << "; ";
        }
    }
    out.passed = mismatches == 0;
    out.detail << games.size() << " random games, " << total << " placements, " << mismatches << " mismatches";
}

void worker_determinism(Outcome& out, std::uint64_t seed, int workers) {
    int differences = 0;
    const auto games = random_small_games(seed ^ kOracleSalt, 30, 5000);
    for (const auto& [id, game] : games) {
        const auto one = render_enumeration(game, enumerate_placements(game, {kDefaultEnumerationBudget, 1}), true);
        const auto many =
            render_enumeration(game, enumerate_placements(game, {kDefaultEnumerationBudget, workers}), true);
        if (one != many) ++differences;
    }
    out.passed = differences == 0;
    out.detail << games.size() << " games, workers 1 vs " << workers << ", " << differences << " differing outputs";
}

const char* criterion_name(int id) {
    switch (id) {
    case 1: return "no-equilibrium tree, exhaustive";
    case 2: return "two-type zero-tolerance grids";
    case 3: return "2-binary grid tiling";
    case 4: return "seven-type 4x4 grid example";
    case 5: return "sqrt(lambda)-binary band grids";
    case 6: return "tree construction on random trees";
    case 7: return "equilibrium welfare floor";
    case 8: return "price of anarchy lower-bound instance";
    case 9: return "price of stability instance";
    case 10: return "two-type equilibrium set relations";
    case 11: return "kernel vs naive oracle";
    case 12: return "worker-count determinism";
    default: return "unknown";
    }
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
    CriterionResult result;
    result.id = id;
    result.name = criterion_name(id);
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        switch (id) {
        case 1: no_equilibrium_tree(out); break;
        case 2: run_constructions(out, zts_grid_games(), construct_2zts_grid, "grid games"); break;
        case 3: run_constructions(out, binary_grid_games(), construct_binary_grid, "grid games (3..7 types)"); break;
        case 4: seven_type_grid(out); break;
        case 5: band_grids(out); break;
        case 6: run_constructions(out, tree_games(options.seed), construct_tree_equilibrium, "tree games on 50 trees"); break;
        case 7: welfare_floor_check(out, options.seed); break;
        case 8: poa_lower_bound(out); break;
        case 9: pos_instance(out); break;
        case 10: two_type_equivalence(out); break;
        case 11: oracle_equivalence(out, options.seed); break;
        case 12: worker_determinism(out, options.seed, options.workers); break;
        default:
            out.passed = false;
            out.detail << "no such criterion";
        }
    } catch (const std::exception& e) {
        out.passed = false;
        out.detail << "exception: " << e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.passed = out.passed;
    result.detail = out.detail.str();
    while (!result.detail.empty() && (result.detail.back() == ' ' || result.detail.back() == ';')) result.detail.pop_back();
    return result;
}

std::string format_line(const CriterionResult& r) {
    char head[64];
    std::snprintf(head, sizeof head, "[%s] %02d ", r.passed ? "PASS" : "FAIL", r.id);
    char tail[32];
    std::snprintf(tail, sizeof tail, " (%.2f s)", r.seconds);
    return head + r.name + ": " + r.detail + tail;
}

}  // namespace schelling::verify
