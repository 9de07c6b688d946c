#include "schelling/game.hpp"

#include <cstdlib>
#include <string>

#include "schelling/error.hpp"

namespace schelling {

GameInstance GameInstance::make(std::shared_ptr<const Topology> topology, int lambda, int agents_per_type,
                                ToleranceVector tolerance) {
    if (!topology) throw Error(ErrorCode::InvalidGame, "game without topology");
    if (tolerance.lambda() != lambda) {
        throw Error(ErrorCode::InvalidGame, "tolerance vector has " + std::to_string(tolerance.lambda()) +
                                                " entries but lambda = " + std::to_string(lambda));
    }
    if (agents_per_type < 2) {
        throw Error(ErrorCode::InvalidGame, "each type needs at least two agents");
    }
    if (topology->node_count() <= lambda * agents_per_type) {
        throw Error(ErrorCode::InvalidGame,
                    "topology has " + std::to_string(topology->node_count()) + " nodes but needs more than " +
                        std::to_string(lambda * agents_per_type));
    }
    return GameInstance(std::move(topology), lambda, agents_per_type, std::move(tolerance));
}

GameInstance GameInstance::make(Topology topology, int agents_per_type, ToleranceVector tolerance) {
    const int lambda = tolerance.lambda();
    return make(std::make_shared<const Topology>(std::move(topology)), lambda, agents_per_type,
                std::move(tolerance));
}

GameInstance GameInstance::with_tolerance(ToleranceVector tolerance) const {
    return make(topology_, lambda_, agents_per_type_, std::move(tolerance));
}

Assignment Assignment::from_types(const GameInstance& game, std::vector<TypeIndex> types) {
    if (static_cast<int>(types.size()) != game.node_count()) {
        throw Error(ErrorCode::InvalidAssignment, "assignment covers " + std::to_string(types.size()) +
                                                      " nodes, topology has " +
                                                      std::to_string(game.node_count()));
    }
    std::vector<int> counts(static_cast<std::size_t>(game.lambda()) + 1, 0);
    for (TypeIndex t : types) {
        if (t < 0 || t > game.lambda()) {
            throw Error(ErrorCode::InvalidAssignment, "type index " + std::to_string(t) + " out of range");
        }
        ++counts[static_cast<std::size_t>(t)];
    }
    for (int t = 1; t <= game.lambda(); ++t) {
        if (counts[static_cast<std::size_t>(t)] != game.agents_per_type()) {
            throw Error(ErrorCode::InvalidAssignment,
                        "type " + std::to_string(t) + " has " + std::to_string(counts[static_cast<std::size_t>(t)]) +
                            " agents, expected " + std::to_string(game.agents_per_type()));
        }
    }
    return Assignment(std::move(types));
}

Assignment Assignment::from_pairs(const GameInstance& game, std::span<const std::pair<NodeId, TypeIndex>> pairs) {
    std::vector<TypeIndex> types(static_cast<std::size_t>(game.node_count()), kEmpty);
    for (auto [node, type] : pairs) {
        if (!game.topology().contains(node)) {
            throw Error(ErrorCode::NodeUnknown, "node " + std::to_string(node) + " not in topology");
        }
        if (types[static_cast<std::size_t>(node)] != kEmpty) {
            throw Error(ErrorCode::InvalidAssignment, "node " + std::to_string(node) + " assigned twice");
        }
        if (type < 1) throw Error(ErrorCode::InvalidAssignment, "type index must be >= 1");
        types[static_cast<std::size_t>(node)] = type;
    }
    return from_types(game, std::move(types));
}

std::vector<std::pair<NodeId, TypeIndex>> Assignment::pairs() const {
    std::vector<std::pair<NodeId, TypeIndex>> out;
    for (NodeId v = 0; v < node_count(); ++v) {
        if (types_[static_cast<std::size_t>(v)] != kEmpty) out.emplace_back(v, types_[static_cast<std::size_t>(v)]);
    }
    return out;
}

std::vector<NodeId> Assignment::empty_nodes() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < node_count(); ++v) {
        if (types_[static_cast<std::size_t>(v)] == kEmpty) out.push_back(v);
    }
    return out;
}

std::vector<NodeId> Assignment::occupied_nodes() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < node_count(); ++v) {
        if (types_[static_cast<std::size_t>(v)] != kEmpty) out.push_back(v);
    }
    return out;
}

Assignment Assignment::jumped(NodeId from, NodeId to) const {
    if (!occupied(from)) throw Error(ErrorCode::NodeEmpty, "node " + std::to_string(from) + " is empty");
    if (occupied(to)) throw Error(ErrorCode::InvalidAssignment, "target " + std::to_string(to) + " is occupied");
    Assignment next = *this;
    next.types_[static_cast<std::size_t>(to)] = types_[static_cast<std::size_t>(from)];
    next.types_[static_cast<std::size_t>(from)] = kEmpty;
    return next;
}

std::string Assignment::compact() const {
    std::string out;
    out.reserve(types_.size());
    for (TypeIndex t : types_) {
        if (t == kEmpty) out.push_back('.');
        else if (t <= 9) out.push_back(static_cast<char>('0' + t));
        else out.push_back(static_cast<char>('a' + (t - 10)));
    }
    return out;
}

NeighborCounts neighbor_counts(const GameInstance& game, const Assignment& a, NodeId node) {
    NeighborCounts counts;
    counts.by_type.assign(static_cast<std::size_t>(game.lambda()) + 1, 0);
    for (NodeId w : game.topology().neighbors(node)) {
        TypeIndex k = a.type_at(w);
        if (k == kEmpty) continue;
        ++counts.by_type[static_cast<std::size_t>(k)];
        ++counts.total;
    }
    return counts;
}

Rational utility_at(const GameInstance& game, const Assignment& a, NodeId node, TypeIndex type, NodeId ignore) {
    const auto& tv = game.tolerance();
    Rational weighted;
    int total = 0;
    for (NodeId w : game.topology().neighbors(node)) {
        if (w == ignore) continue;
        TypeIndex k = a.type_at(w);
        if (k == kEmpty) continue;
        weighted += tv[std::abs(type - k)];
        ++total;
    }
    if (total == 0) return Rational(0);
    return weighted / Rational(total);
}

Rational utility(const GameInstance& game, const Assignment& a, NodeId node) {
    if (!game.topology().contains(node)) {
        throw Error(ErrorCode::NodeUnknown, "node " + std::to_string(node) + " not in topology");
    }
    if (!a.occupied(node)) throw Error(ErrorCode::NodeEmpty, "node " + std::to_string(node) + " is empty");
    return utility_at(game, a, node, a.type_at(node));
}

Rational social_welfare(const GameInstance& game, const Assignment& a) {
    Rational total;
    for (NodeId v = 0; v < a.node_count(); ++v) {
        if (a.occupied(v)) total += utility_at(game, a, v, a.type_at(v));
    }
    return total;
}

std::vector<NodeId> isolated_agents(const GameInstance& game, const Assignment& a) {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < a.node_count(); ++v) {
        if (!a.occupied(v)) continue;
        bool alone = true;
        for (NodeId w : game.topology().neighbors(v)) {
            if (a.occupied(w)) {
                alone = false;
                break;
            }
        }
        if (alone) out.push_back(v);
    }
    return out;
}

}  // namespace schelling
