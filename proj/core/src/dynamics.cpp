#include <set>

#include "schelling/equilibrium.hpp"

namespace schelling {

std::string_view to_string(DynamicsOutcome outcome) {
    switch (outcome) {
        case DynamicsOutcome::Converged: return "Converged";
        case DynamicsOutcome::CycleDetected: return "CycleDetected";
        case DynamicsOutcome::StepLimit: return "StepLimit";
    }
    return "Unknown";
}

DynamicsResult best_response_dynamics(const GameInstance& game, const Assignment& initial, std::size_t max_steps,
                                      bool record_trace) {
    DynamicsResult result;
    result.final_assignment = initial;
    std::set<std::vector<TypeIndex>> seen;
    auto key = [](const Assignment& a) { return std::vector<TypeIndex>(a.types().begin(), a.types().end()); };
    seen.insert(key(initial));

    Assignment& current = result.final_assignment;
    for (;;) {
        std::optional<DeviationWitness> move;
        for (NodeId v = 0; v < current.node_count() && !move; ++v) {
            if (current.occupied(v)) move = best_deviation(game, current, v);
        }
        if (!move) {
            result.outcome = DynamicsOutcome::Converged;
            return result;
        }
        if (result.steps >= max_steps) {
            result.outcome = DynamicsOutcome::StepLimit;
            return result;
        }
        current = current.jumped(move->from_node, move->to_node);
        ++result.steps;
        if (record_trace) result.trace.push_back({move->from_node, move->to_node});
        if (!seen.insert(key(current)).second) {
            result.outcome = DynamicsOutcome::CycleDetected;
            return result;
        }
    }
}

}  // namespace schelling
