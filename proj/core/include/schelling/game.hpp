#ifndef SCHELLING_GAME_HPP
#define SCHELLING_GAME_HPP

#include <compare>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "schelling/rational.hpp"
#include "schelling/tolerance.hpp"
#include "schelling/topology.hpp"

namespace schelling {

/// Type index: 1..λ for an occupied node, 0 for an empty one.
using TypeIndex = int;
inline constexpr TypeIndex kEmpty = 0;

/// A balanced λ-type tolerance Schelling game: λ·x agents (x >= 2 per type)
/// on a connected topology with more nodes than agents.
class GameInstance {
public:
    /// Errors: InvalidGame (x < 2, |V| <= λx, tolerance length != λ).
    static GameInstance make(std::shared_ptr<const Topology> topology, int lambda, int agents_per_type,
                             ToleranceVector tolerance);
    static GameInstance make(Topology topology, int agents_per_type, ToleranceVector tolerance);

    [[nodiscard]] const Topology& topology() const noexcept { return *topology_; }
    [[nodiscard]] const std::shared_ptr<const Topology>& shared_topology() const noexcept { return topology_; }
    [[nodiscard]] const ToleranceVector& tolerance() const noexcept { return tolerance_; }
    [[nodiscard]] int lambda() const noexcept { return lambda_; }
    [[nodiscard]] int agents_per_type() const noexcept { return agents_per_type_; }
    [[nodiscard]] int agent_count() const noexcept { return lambda_ * agents_per_type_; }
    [[nodiscard]] int node_count() const noexcept { return topology_->node_count(); }
    [[nodiscard]] int empty_count() const noexcept { return node_count() - agent_count(); }

    /// Same board and agents under another tolerance vector of equal length.
    [[nodiscard]] GameInstance with_tolerance(ToleranceVector tolerance) const;

    friend bool operator==(const GameInstance& a, const GameInstance& b) {
        return a.lambda_ == b.lambda_ && a.agents_per_type_ == b.agents_per_type_ &&
               a.tolerance_ == b.tolerance_ && *a.topology_ == *b.topology_;
    }

private:
    GameInstance(std::shared_ptr<const Topology> topology, int lambda, int agents_per_type,
                 ToleranceVector tolerance)
        : topology_(std::move(topology)), tolerance_(std::move(tolerance)), lambda_(lambda),
          agents_per_type_(agents_per_type) {}

    std::shared_ptr<const Topology> topology_;
    ToleranceVector tolerance_;
    int lambda_;
    int agents_per_type_;
};

/// Type-placement: which type occupies each node. Agents of one type are
/// interchangeable, so this is the canonical form of an assignment.
class Assignment {
public:
    Assignment() = default;

    /// Errors: InvalidAssignment (wrong length, type out of range, counts not x per type).
    static Assignment from_types(const GameInstance& game, std::vector<TypeIndex> types);
    /// (node, type) pairs; unlisted nodes are empty. Errors: NodeUnknown, InvalidAssignment.
    static Assignment from_pairs(const GameInstance& game, std::span<const std::pair<NodeId, TypeIndex>> pairs);

    [[nodiscard]] int node_count() const noexcept { return static_cast<int>(types_.size()); }
    [[nodiscard]] TypeIndex type_at(NodeId v) const { return types_.at(static_cast<std::size_t>(v)); }
    [[nodiscard]] bool occupied(NodeId v) const { return type_at(v) != kEmpty; }
    [[nodiscard]] std::span<const TypeIndex> types() const noexcept { return types_; }
    [[nodiscard]] std::vector<std::pair<NodeId, TypeIndex>> pairs() const;
    [[nodiscard]] std::vector<NodeId> empty_nodes() const;
    [[nodiscard]] std::vector<NodeId> occupied_nodes() const;

    /// The assignment after the occupant of `from` jumps to the empty node `to`.
    [[nodiscard]] Assignment jumped(NodeId from, NodeId to) const;

    /// Compact rendering, one character per node: '.' empty, '1'..'9', then 'a'...
    [[nodiscard]] std::string compact() const;

    friend bool operator==(const Assignment&, const Assignment&) = default;
    friend auto operator<=>(const Assignment& a, const Assignment& b) { return a.types_ <=> b.types_; }

private:
    explicit Assignment(std::vector<TypeIndex> types) : types_(std::move(types)) {}
    std::vector<TypeIndex> types_;
};

/// Occupied-neighbor counts by type; counts[k] for type k (index 0 unused).
struct NeighborCounts {
    std::vector<int> by_type;
    int total = 0;
};

NeighborCounts neighbor_counts(const GameInstance& game, const Assignment& a, NodeId node);

/// u_i = (1/n(v)) Σ_k t_{|ℓ-k|} n_k(v); 0 for an isolated agent.
/// Errors: NodeUnknown, NodeEmpty.
Rational utility(const GameInstance& game, const Assignment& a, NodeId node);

/// Utility an agent of type `type` would get at `node` given the other occupants of `a`
/// (the node's own occupant, if any, is ignored; `ignore` is treated as empty).
Rational utility_at(const GameInstance& game, const Assignment& a, NodeId node, TypeIndex type,
                    NodeId ignore = -1);

Rational social_welfare(const GameInstance& game, const Assignment& a);

/// Occupied nodes with no occupied neighbor.
std::vector<NodeId> isolated_agents(const GameInstance& game, const Assignment& a);

}  // namespace schelling

#endif  // SCHELLING_GAME_HPP
