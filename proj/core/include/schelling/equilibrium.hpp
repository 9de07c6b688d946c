#ifndef SCHELLING_EQUILIBRIUM_HPP
#define SCHELLING_EQUILIBRIUM_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "schelling/game.hpp"
#include "schelling/rational.hpp"

namespace schelling {

/// A strictly improving jump of the agent at `from_node` to the empty `to_node`.
struct DeviationWitness {
    NodeId from_node = -1;
    NodeId to_node = -1;
    Rational old_utility;
    Rational new_utility;
    friend bool operator==(const DeviationWitness&, const DeviationWitness&) = default;
};

/// Best strictly improving jump for the agent at `node`, smallest target id
/// among equally good targets. The origin is vacated before the target is
/// evaluated. Errors: NodeUnknown, NodeEmpty.
std::optional<DeviationWitness> best_deviation(const GameInstance& game, const Assignment& a, NodeId node);

struct EquilibriumReport {
    bool is_equilibrium = true;
    /// Deviation of the smallest occupied node that has one.
    std::optional<DeviationWitness> witness;
    explicit operator bool() const noexcept { return is_equilibrium; }
};

EquilibriumReport is_equilibrium(const GameInstance& game, const Assignment& a);

// --- best-response dynamics --------------------------------------------------

enum class DynamicsOutcome { Converged, CycleDetected, StepLimit };
std::string_view to_string(DynamicsOutcome outcome);

struct Move {
    NodeId from = -1;
    NodeId to = -1;
    friend bool operator==(const Move&, const Move&) = default;
};

struct DynamicsResult {
    DynamicsOutcome outcome = DynamicsOutcome::StepLimit;
    Assignment final_assignment;
    std::size_t steps = 0;
    std::vector<Move> trace;
};

/// Repeatedly lets the lowest-id agent with an improving jump take her best
/// jump. Stops at a fixpoint, on revisiting an assignment, or after
/// `max_steps` moves.
DynamicsResult best_response_dynamics(const GameInstance& game, const Assignment& initial, std::size_t max_steps,
                                      bool record_trace = true);

// --- exhaustive analysis -----------------------------------------------------

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

struct EnumerationOptions {
    std::uint64_t budget = kDefaultEnumerationBudget;
    int workers = 1;
};

/// Multinomial |V|! / (x!^λ (|V|-n)!), saturating at UINT64_MAX.
std::uint64_t placement_count(const GameInstance& game);

struct EnumerationResult {
    std::uint64_t placements = 0;
    /// Every equilibrium, in lexicographic order of the type-placement.
    std::vector<Assignment> equilibria;
    std::vector<Rational> equilibrium_welfare;
    /// Lexicographically smallest welfare maximizer.
    Assignment optimum;
    Rational opt;
};

/// One pass over all type-placements. Errors: BudgetExceeded.
EnumerationResult enumerate_placements(const GameInstance& game, const EnumerationOptions& options = {});

std::vector<Assignment> enumerate_equilibria(const GameInstance& game, const EnumerationOptions& options = {});
std::pair<Assignment, Rational> optimal_welfare(const GameInstance& game, const EnumerationOptions& options = {});

struct PriceReport {
    Rational opt;
    Rational worst_eq;
    Rational best_eq;
    Rational poa;
    Rational pos;
    std::size_t equilibrium_count = 0;
};

/// Errors: NoEquilibrium, ZeroWelfareEquilibrium.
PriceReport price_report(const EnumerationResult& result);
/// Errors: BudgetExceeded, NoEquilibrium, ZeroWelfareEquilibrium.
PriceReport price_ratios(const GameInstance& game, const EnumerationOptions& options = {});

}  // namespace schelling

#endif  // SCHELLING_EQUILIBRIUM_HPP
