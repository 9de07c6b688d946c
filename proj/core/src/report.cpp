#include "schelling/report.hpp"

#include <algorithm>
#include <sstream>

#include "schelling/error.hpp"

namespace schelling {

std::string render_layout(const GameInstance& game, const Assignment& a) {
    const auto text = a.compact();
    const auto& shape = game.topology().grid();
    if (!shape) return text + "\n";
    std::string out;
    for (int i = 0; i < shape->rows; ++i) {
        out += text.substr(static_cast<std::size_t>(i * shape->cols), static_cast<std::size_t>(shape->cols));
        out += '\n';
    }
    return out;
}

std::string render_enumeration(const GameInstance& game, const EnumerationResult& result, bool list) {
    std::ostringstream out;
    out << "nodes: " << game.node_count() << "\n";
    out << "lambda: " << game.lambda() << "\n";
    out << "agents: " << game.agent_count() << "\n";
    out << "placements: " << result.placements << "\n";
    out << "equilibria: " << result.equilibria.size() << "\n";
    out << "opt: " << exact_and_decimal(result.opt) << "\n";
    out << "optimum: " << result.optimum.compact() << "\n";
    try {
        const auto prices = price_report(result);
        out << "worst_eq: " << exact_and_decimal(prices.worst_eq) << "\n";
        out << "best_eq: " << exact_and_decimal(prices.best_eq) << "\n";
        out << "poa: " << exact_and_decimal(prices.poa) << "\n";
        out << "pos: " << exact_and_decimal(prices.pos) << "\n";
    } catch (const Error& e) {
        out << "poa: undefined (" << to_string(e.code()) << ")\n";
        out << "pos: undefined (" << to_string(e.code()) << ")\n";
    }
    if (list) {
        for (std::size_t k = 0; k < result.equilibria.size(); ++k) {
            out << "eq " << result.equilibria[k].compact() << " sw " << exact_and_decimal(result.equilibrium_welfare[k])
                << "\n";
        }
    }
    return out.str();
}

std::string render_check(const GameInstance& game, const Assignment& a, const EquilibriumReport& report) {
    std::ostringstream out;
    if (report.is_equilibrium) {
        out << "EQUILIBRIUM\n";
    } else {
        const auto& w = *report.witness;
        out << "NOT EQUILIBRIUM; witness: node " << w.from_node << " (type " << a.type_at(w.from_node) << ") -> node "
            << w.to_node << ", gain " << w.old_utility << " -> " << w.new_utility << "\n";
    }
    out << "sw: " << exact_and_decimal(social_welfare(game, a)) << "\n";
    out << "isolated: " << isolated_agents(game, a).size() << "\n";
    return out.str();
}

std::string render_dynamics(const GameInstance& game, const DynamicsResult& result, std::size_t trace_limit) {
    std::ostringstream out;
    out << "outcome: " << to_string(result.outcome) << "\n";
    out << "steps: " << result.steps << "\n";
    out << "final: " << result.final_assignment.compact() << "\n";
    out << "sw: " << exact_and_decimal(social_welfare(game, result.final_assignment)) << "\n";
    const std::size_t shown = std::min(trace_limit, result.trace.size());
    for (std::size_t k = 0; k < shown; ++k) {
        out << "move " << k + 1 << ": " << result.trace[k].from << " -> " << result.trace[k].to << "\n";
    }
    if (shown < result.trace.size()) out << "... " << result.trace.size() - shown << " more moves\n";
    return out.str();
}

}  // namespace schelling
