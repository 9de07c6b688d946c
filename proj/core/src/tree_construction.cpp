#include <algorithm>
#include <cstdlib>
#include <string>

#include "schelling/constructions.hpp"
#include "schelling/equilibrium.hpp"
#include "schelling/error.hpp"

namespace schelling {
namespace {

struct SubtreeView {
    NodeId root = -1;
    std::vector<NodeId> nodes;
    std::vector<char> member;  // indexed by node id
};

SubtreeView make_view(const RootedTree& tree, NodeId subtree_root) {
    SubtreeView view;
    view.root = subtree_root;
    view.nodes = subtree_nodes(tree, subtree_root);
    view.member.assign(tree.parent.size(), 0);
    for (NodeId v : view.nodes) view.member[static_cast<std::size_t>(v)] = 1;
    return view;
}

bool compatible(TypeIndex a, TypeIndex b, int compatible_below) {
    return std::abs(a - b) < compatible_below;
}

bool empty(const std::vector<TypeIndex>& cells, NodeId v) { return cells[static_cast<std::size_t>(v)] == kEmpty; }

// Deepest level first; within a level, the smallest free id and then its siblings.
bool place_bottom_up(const RootedTree& tree, const SubtreeView& view, AgentPool& pool,
                     std::vector<TypeIndex>& cells) {
    int max_depth = 0;
    for (NodeId v : view.nodes) max_depth = std::max(max_depth, tree.depth[static_cast<std::size_t>(v)]);
    for (int depth = max_depth; depth >= 0 && pool.count > 0; --depth) {
        std::vector<NodeId> level;
        for (NodeId v : view.nodes) {
            if (tree.depth[static_cast<std::size_t>(v)] == depth) level.push_back(v);
        }
        std::sort(level.begin(), level.end());
        for (NodeId v : level) {
            if (pool.count == 0) return false;
            if (!empty(cells, v)) continue;
            cells[static_cast<std::size_t>(v)] = pool.type;
            --pool.count;
            NodeId parent = tree.parent[static_cast<std::size_t>(v)];
            for (NodeId sibling : tree.children[static_cast<std::size_t>(parent)]) {
                if (pool.count == 0) break;
                if (!view.member[static_cast<std::size_t>(sibling)] || !empty(cells, sibling)) continue;
                cells[static_cast<std::size_t>(sibling)] = pool.type;
                --pool.count;
            }
        }
    }
    return pool.count == 0;
}

// One agent of `type` at a free node adjacent to the occupied part of the
// subtree; compatible neighborhoods first, then the smallest id.
bool place_connected(const Topology& topology, const RootedTree& tree, const SubtreeView& view, TypeIndex type,
                     std::vector<TypeIndex>& cells, int compatible_below) {
    NodeId best = -1;
    bool best_compatible = false;
    for (NodeId v : view.nodes) {
        if (!empty(cells, v)) continue;
        bool touches = false;
        bool ok = true;
        for (NodeId w : topology.neighbors(v)) {
            if (!view.member[static_cast<std::size_t>(w)] || empty(cells, w)) continue;
            touches = true;
            if (!compatible(type, cells[static_cast<std::size_t>(w)], compatible_below)) ok = false;
        }
        if (!touches) continue;
        const int depth = tree.depth[static_cast<std::size_t>(v)];
        const int best_depth = best < 0 ? -1 : tree.depth[static_cast<std::size_t>(best)];
        if (best < 0 || (ok && !best_compatible) ||
            (ok == best_compatible && (depth > best_depth || (depth == best_depth && v < best)))) {
            best = v;
            best_compatible = ok;
        }
    }
    if (best < 0) return false;
    cells[static_cast<std::size_t>(best)] = type;
    return true;
}

bool subtree_full(const SubtreeView& view, const std::vector<TypeIndex>& cells) {
    return std::none_of(view.nodes.begin(), view.nodes.end(), [&](NodeId v) { return empty(cells, v); });
}

// Free node of `view` with at least one occupied neighbor, all of them
// compatible with `type`; smallest id, or -1.
NodeId compatible_free_node(const Topology& topology, const SubtreeView& view, TypeIndex type,
                            const std::vector<TypeIndex>& cells, int compatible_below) {
    for (NodeId v : view.nodes) {
        if (!empty(cells, v)) continue;
        bool touches = false;
        bool ok = true;
        for (NodeId w : topology.neighbors(v)) {
            if (empty(cells, w)) continue;
            touches = true;
            ok = ok && compatible(type, cells[static_cast<std::size_t>(w)], compatible_below);
        }
        if (touches && ok) return v;
    }
    return -1;
}

bool subtree_has_agents(const SubtreeView& view, const std::vector<TypeIndex>& cells) {
    return std::any_of(view.nodes.begin(), view.nodes.end(), [&](NodeId v) { return !empty(cells, v); });
}

}  // namespace

std::vector<NodeId> subtree_nodes(const RootedTree& tree, NodeId subtree_root) {
    std::vector<NodeId> out{subtree_root};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (NodeId c : tree.children[static_cast<std::size_t>(out[head])]) out.push_back(c);
    }
    return out;
}

void bottom_up(const Topology& topology, const RootedTree& tree, NodeId subtree_root, std::span<AgentPool> pools,
               std::vector<TypeIndex>& cells, int compatible_below) {
    const SubtreeView view = make_view(tree, subtree_root);
    std::size_t p = 0;
    while (p < pools.size() && pools[p].count == 0) ++p;
    if (p == pools.size()) return;

    // First pool: bottom-up with sibling priority.
    AgentPool& first = pools[p];
    if (!subtree_has_agents(view, cells)) {
        place_bottom_up(tree, view, first, cells);
    }
    while (first.count > 0 && !subtree_full(view, cells)) {
        if (!place_connected(topology, tree, view, first.type, cells, compatible_below)) break;
        --first.count;
    }
    ++p;
    while (p < pools.size() && pools[p].count == 0) ++p;
    if (p == pools.size() || subtree_full(view, cells)) return;

    // Second pool: cover every empty parent of a first-pool agent.
    AgentPool& second = pools[p];
    for (bool progress = true; progress && second.count > 0;) {
        progress = false;
        NodeId target = -1;
        for (NodeId v : view.nodes) {
            if (!empty(cells, v)) continue;
            bool covers = false;
            for (NodeId c : tree.children[static_cast<std::size_t>(v)]) {
                if (cells[static_cast<std::size_t>(c)] == first.type) covers = true;
            }
            if (covers && (target < 0 || v < target)) target = v;
        }
        if (target >= 0) {
            cells[static_cast<std::size_t>(target)] = second.type;
            --second.count;
            progress = true;
        }
    }

    // Second and later pools: grow the occupied region one adjacent node at a time.
    for (; p < pools.size(); ++p) {
        AgentPool& pool = pools[p];
        while (pool.count > 0 && !subtree_full(view, cells)) {
            if (!place_connected(topology, tree, view, pool.type, cells, compatible_below)) {
                // Nothing occupied yet (every earlier pool was empty).
                AgentPool one{pool.type, 1};
                if (!place_bottom_up(tree, view, one, cells)) return;
            }
            --pool.count;
        }
        if (subtree_full(view, cells)) return;
    }
}

int tree_alpha(int lambda) { return lambda == 3 ? 2 : lambda / 2; }

Assignment construct_tree_equilibrium(const GameInstance& game) {
    const Topology& topology = game.topology();
    if (!topology.is_tree()) throw Error(ErrorCode::NotATree, "tree construction needs a tree topology");
    const int lambda = game.lambda();
    if (lambda < 3) {
        throw Error(ErrorCode::WrongGameClass, "tree construction needs at least three types");
    }
    const int alpha = tree_alpha(lambda);
    const ToleranceVector base = standard_tolerance(ToleranceKind::alpha_binary, lambda, alpha);
    if (lexicographically_less(game.tolerance(), base)) {
        throw Error(ErrorCode::WrongGameClass,
                    "tolerance vector is lexicographically below the " + std::to_string(alpha) + "-binary vector");
    }

    const NodeId center = centroid(topology);
    const RootedTree tree = topology.rooted_at(center);
    std::vector<NodeId> subtrees = tree.children[static_cast<std::size_t>(center)];
    std::vector<std::size_t> sizes(static_cast<std::size_t>(topology.node_count()), 0);
    std::vector<NodeId> smallest(static_cast<std::size_t>(topology.node_count()), 0);
    for (NodeId s : subtrees) {
        auto nodes = subtree_nodes(tree, s);
        sizes[static_cast<std::size_t>(s)] = nodes.size();
        smallest[static_cast<std::size_t>(s)] = *std::min_element(nodes.begin(), nodes.end());
    }
    std::sort(subtrees.begin(), subtrees.end(), [&](NodeId a, NodeId b) {
        const auto sa = sizes[static_cast<std::size_t>(a)];
        const auto sb = sizes[static_cast<std::size_t>(b)];
        if (sa != sb) return sa > sb;
        return smallest[static_cast<std::size_t>(a)] < smallest[static_cast<std::size_t>(b)];
    });

    std::vector<TypeIndex> cells(static_cast<std::size_t>(topology.node_count()), kEmpty);
    std::vector<int> remaining(static_cast<std::size_t>(lambda) + 1, game.agents_per_type());
    remaining[0] = 0;
    auto left = [&](int t) { return remaining[static_cast<std::size_t>(t)]; };

    std::size_t cursor = 0;
    std::size_t last = 0;
    auto run = [&](const std::vector<TypeIndex>& order) {
        std::vector<AgentPool> pools;
        for (TypeIndex t : order) pools.push_back({t, left(t)});
        bottom_up(topology, tree, subtrees[cursor], pools, cells, alpha);
        for (const auto& pool : pools) remaining[static_cast<std::size_t>(pool.type)] = pool.count;
        last = cursor++;
    };
    auto any_left = [&](int lo, int hi) {
        for (int t = lo; t <= hi; ++t) {
            if (left(t) > 0) return true;
        }
        return false;
    };

    // Step 1: T_1 .. T_ceil(λ/2) until T_1 is placed.
    const int low_end = (lambda + 1) / 2;
    std::vector<TypeIndex> low;
    for (int t = 1; t <= low_end; ++t) low.push_back(t);
    while (left(1) > 0 && cursor < subtrees.size()) run(low);

    int a = 1;
    while (a <= lambda && left(a) == 0) ++a;

    // Step 2: T_λ down to T_ceil((λ+1)/2) until T_λ is placed.
    const int high_end = (lambda + 2) / 2;
    std::vector<TypeIndex> high;
    for (int t = lambda; t >= high_end; --t) high.push_back(t);
    while (left(lambda) > 0 && cursor < subtrees.size()) run(high);

    int b = lambda;
    while (b >= 1 && left(b) == 0) --b;

    // Step 3: the middle types T_a .. T_b on the following subtrees.
    if (a <= b) {
        std::vector<TypeIndex> middle;
        for (int t = a; t <= b; ++t) middle.push_back(t);
        while (any_left(a, b) && cursor < subtrees.size()) run(middle);
    }

    // Subtrees exhausted with agents left: place them next to compatible
    // occupants in the leftover space, latest subtree first.
    for (int t = 1; t <= lambda; ++t) {
        while (left(t) > 0) {
            bool placed = false;
            for (std::size_t i = cursor; i-- > 0 && !placed;) {
                const SubtreeView view = make_view(tree, subtrees[i]);
                std::vector<TypeIndex> trial = cells;
                if (place_connected(topology, tree, view, t, trial, alpha)) {
                    cells = std::move(trial);
                    placed = true;
                    last = i;
                }
            }
            if (!placed) {
                throw Error(ErrorCode::ConstructionCheckFailed, "no room left for type " + std::to_string(t));
            }
            --remaining[static_cast<std::size_t>(t)];
        }
    }

    // Step 4: repair isolated agents of the last subtree.
    const SubtreeView last_view = make_view(tree, subtrees[last]);
    const SubtreeView whole = make_view(tree, center);
    auto isolated_in = [&](const std::vector<TypeIndex>& state, const SubtreeView* view) {
        std::vector<NodeId> out;
        for (NodeId v : isolated_agents(game, Assignment::from_types(game, state))) {
            if (view == nullptr || view->member[static_cast<std::size_t>(v)]) out.push_back(v);
        }
        return out;
    };
    auto move_to_root = [&](std::vector<TypeIndex>& state, NodeId v) {
        state[static_cast<std::size_t>(center)] = state[static_cast<std::size_t>(v)];
        state[static_cast<std::size_t>(v)] = kEmpty;
    };
    // Lift the isolated agents and regrow them connectedly inside the last subtree.
    auto rearrange = [&](std::vector<TypeIndex>& state, const std::vector<NodeId>& isolated) {
        std::vector<TypeIndex> moving;
        for (NodeId v : isolated) {
            moving.push_back(state[static_cast<std::size_t>(v)]);
            state[static_cast<std::size_t>(v)] = kEmpty;
        }
        std::sort(moving.begin(), moving.end());
        for (TypeIndex t : moving) {
            if (place_connected(topology, tree, last_view, t, state, alpha)) continue;
            NodeId spot = last_view.root;
            if (!empty(state, spot)) spot = compatible_free_node(topology, last_view, t, state, alpha);
            if (spot < 0) return false;
            state[static_cast<std::size_t>(spot)] = t;
        }
        return true;
    };
    // Isolated agents anywhere go next to compatible occupants only, if such a free node exists.
    auto park = [&](std::vector<TypeIndex>& state) {
        for (NodeId v : isolated_in(state, nullptr)) {
            const TypeIndex t = state[static_cast<std::size_t>(v)];
            state[static_cast<std::size_t>(v)] = kEmpty;
            const NodeId target = compatible_free_node(topology, whole, t, state, alpha);
            state[static_cast<std::size_t>(target >= 0 ? target : v)] = t;
        }
    };

    const auto isolated = isolated_in(cells, &last_view);
    std::vector<std::vector<TypeIndex>> candidates;
    {
        // As stated: two or more are rearranged, a single one goes to the root.
        auto literal = cells;
        if (isolated.size() == 1) {
            move_to_root(literal, isolated.front());
        } else if (isolated.size() >= 2 && !rearrange(literal, isolated)) {
            literal.clear();
        }
        if (!literal.empty()) candidates.push_back(std::move(literal));
    }
    if (!isolated.empty()) {
        // Free nodes left over in partly filled subtrees break the argument
        // for the stated repair; these variants cover that case.
        auto regrown = cells;
        if (rearrange(regrown, isolated)) {
            park(regrown);
            candidates.push_back(std::move(regrown));
        }
        auto parked = cells;
        park(parked);
        candidates.push_back(parked);
        for (NodeId v : isolated_in(parked, nullptr)) {
            if (!empty(parked, center)) break;
            move_to_root(parked, v);
        }
        candidates.push_back(std::move(parked));
    }

    EquilibriumReport report;
    for (auto& candidate : candidates) {
        Assignment result = Assignment::from_types(game, std::move(candidate));
        report = is_equilibrium(game, result);
        if (report) return result;
    }
    throw Error(ErrorCode::ConstructionCheckFailed,
                "tree construction output is not an equilibrium: node " + std::to_string(report.witness->from_node) +
                    " gains " + report.witness->old_utility.str() + " -> " + report.witness->new_utility.str() +
                    " by jumping to " + std::to_string(report.witness->to_node));
}


}  // namespace schelling
