#include "schelling/equilibrium.hpp"

#include <string>

#include "schelling/error.hpp"

namespace schelling {

std::optional<DeviationWitness> best_deviation(const GameInstance& game, const Assignment& a, NodeId node) {
    const Rational current = utility(game, a, node);
    const TypeIndex type = a.type_at(node);
    std::optional<DeviationWitness> best;
    if (current == Rational(1)) return best;
    for (NodeId target = 0; target < a.node_count(); ++target) {
        if (a.occupied(target)) continue;
        Rational value = utility_at(game, a, target, type, node);
        if (value <= current) continue;
        if (!best || value > best->new_utility) best = DeviationWitness{node, target, current, value};
    }
    return best;
}

EquilibriumReport is_equilibrium(const GameInstance& game, const Assignment& a) {
    for (NodeId v = 0; v < a.node_count(); ++v) {
        if (!a.occupied(v)) continue;
        if (auto witness = best_deviation(game, a, v)) return {false, witness};
    }
    return {};
}

PriceReport price_report(const EnumerationResult& result) {
    if (result.equilibria.empty()) throw Error(ErrorCode::NoEquilibrium, "game has no equilibrium");
    PriceReport report;
    report.opt = result.opt;
    report.equilibrium_count = result.equilibria.size();
    report.worst_eq = result.equilibrium_welfare.front();
    report.best_eq = result.equilibrium_welfare.front();
    for (const auto& sw : result.equilibrium_welfare) {
        if (sw < report.worst_eq) report.worst_eq = sw;
        if (sw > report.best_eq) report.best_eq = sw;
    }
    if (report.worst_eq == Rational(0)) {
        throw Error(ErrorCode::ZeroWelfareEquilibrium, "worst equilibrium has zero welfare; PoA undefined");
    }
    report.poa = report.opt / report.worst_eq;
    report.pos = report.opt / report.best_eq;
    return report;
}

PriceReport price_ratios(const GameInstance& game, const EnumerationOptions& options) {
    return price_report(enumerate_placements(game, options));
}

std::vector<Assignment> enumerate_equilibria(const GameInstance& game, const EnumerationOptions& options) {
    return enumerate_placements(game, options).equilibria;
}

std::pair<Assignment, Rational> optimal_welfare(const GameInstance& game, const EnumerationOptions& options) {
    auto result = enumerate_placements(game, options);
    return {std::move(result.optimum), result.opt};
}

}  // namespace schelling
