#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "schelling/error.hpp"
#include "schelling/game.hpp"
#include "schelling/instances.hpp"
#include "schelling/verify/graphs.hpp"
#include "schelling/verify/oracle.hpp"

using namespace schelling;

namespace {

ErrorCode code_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no Error thrown";
    return ErrorCode::InvalidParameters;
}

const ToleranceVector kHalf = ToleranceVector::make({1, Rational(1, 2), 0});

// Star-ish gadget: node 0 has neighbors 1 and 2; the rest hang off node 1 so
// balance can be met without touching node 0.
GameInstance gadget_game() {
    return GameInstance::make(build_graph(8, {{0, 1}, {0, 2}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}), 2, kHalf);
}

// Random balanced type vector with at least one empty node.
std::vector<int> random_types(const GameInstance& game, std::mt19937_64& rng) {
    std::vector<int> types(static_cast<std::size_t>(game.node_count()), 0);
    for (int l = 1; l <= game.lambda(); ++l) {
        for (int k = 0; k < game.agents_per_type(); ++k) types[static_cast<std::size_t>((l - 1) * game.agents_per_type() + k)] = l;
    }
    std::shuffle(types.begin(), types.end(), rng);
    return types;
}

}  // namespace

TEST(GameInstance, Preconditions) {
    EXPECT_EQ(code_of([] { GameInstance::make(standard_graph(GraphKind::path, 5), 1, standard_tolerance(ToleranceKind::zero, 2)); }),
              ErrorCode::InvalidGame);
    EXPECT_EQ(code_of([] { GameInstance::make(standard_graph(GraphKind::path, 4), 2, standard_tolerance(ToleranceKind::zero, 2)); }),
              ErrorCode::InvalidGame);
    const auto game = GameInstance::make(standard_graph(GraphKind::path, 5), 2, standard_tolerance(ToleranceKind::zero, 2));
    EXPECT_EQ(game.agent_count(), 4);
    EXPECT_EQ(game.empty_count(), 1);
}

TEST(Assignment, Validation) {
    const auto game = GameInstance::make(standard_graph(GraphKind::path, 5), 2, standard_tolerance(ToleranceKind::zero, 2));
    EXPECT_NO_THROW(Assignment::from_types(game, {1, 1, 0, 2, 2}));
    EXPECT_EQ(code_of([&] { Assignment::from_types(game, {1, 1, 1, 2, 2}); }), ErrorCode::InvalidAssignment);
    EXPECT_EQ(code_of([&] { Assignment::from_types(game, {1, 1, 0, 2}); }), ErrorCode::InvalidAssignment);
    EXPECT_EQ(code_of([&] { Assignment::from_types(game, {1, 1, 0, 3, 3}); }), ErrorCode::InvalidAssignment);
    const std::vector<std::pair<NodeId, TypeIndex>> pairs{{0, 1}, {1, 1}, {3, 2}, {4, 2}};
    EXPECT_EQ(Assignment::from_pairs(game, pairs), Assignment::from_types(game, {1, 1, 0, 2, 2}));
    const std::vector<std::pair<NodeId, TypeIndex>> bad{{0, 1}, {1, 1}, {3, 2}, {9, 2}};
    EXPECT_EQ(code_of([&] { Assignment::from_pairs(game, bad); }), ErrorCode::NodeUnknown);
    EXPECT_EQ(Assignment::from_types(game, {1, 1, 0, 2, 2}).compact(), "11.22");
}

TEST(Utility, ProofExamples) {
    const auto game = gadget_game();
    // neighbors {T1, T3} under [1, 1/2, 0]
    const auto a = Assignment::from_types(game, {1, 1, 3, 2, 2, 3, 0, 0});
    EXPECT_EQ(utility(game, a, 0), Rational(1, 2));
    // neighbors {T1, T2}
    const auto b = Assignment::from_types(game, {1, 1, 2, 2, 3, 3, 0, 0});
    EXPECT_EQ(utility(game, b, 0), Rational(3, 4));
}

TEST(Utility, IsolatedAndHomogeneous) {
    const auto game = GameInstance::make(standard_graph(GraphKind::path, 6), 2, standard_tolerance(ToleranceKind::zero, 2));
    const auto a = Assignment::from_types(game, {1, 0, 1, 2, 2, 0});
    EXPECT_EQ(utility(game, a, 0), Rational(0));
    EXPECT_EQ(isolated_agents(game, a), std::vector<NodeId>{0});
    EXPECT_EQ(utility(game, a, 4), Rational(1));
    EXPECT_EQ(utility(game, a, 2), Rational(0));
    EXPECT_EQ(code_of([&] { (void)utility(game, a, 1); }), ErrorCode::NodeEmpty);
    EXPECT_EQ(code_of([&] { (void)utility(game, a, 6); }), ErrorCode::NodeUnknown);
}

TEST(SocialWelfare, SegregatedCliquesGiveN) {
    // two triangles joined by a path through an empty node
    const auto t = build_graph(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}});
    const auto game = GameInstance::make(t, 3, standard_tolerance(ToleranceKind::zero, 2));
    const auto a = Assignment::from_types(game, {1, 1, 1, 0, 2, 2, 2});
    EXPECT_EQ(social_welfare(game, a), Rational(6));
}

TEST(SocialWelfare, PoaInstanceEquilibriumIsSix) {
    const auto inst = poa_lb_game(3, 1, standard_tolerance(ToleranceKind::zero, 3));
    EXPECT_EQ(social_welfare(inst.game, inst.assignments.at("equilibrium_v")), Rational(6));
}

TEST(Utility, PropertiesOnRandomGames) {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 200; ++k) {
        const int lambda = 2 + k % 3;
        const int nodes = lambda * 2 + 1 + k % 5;
        const auto game = GameInstance::make(verify::random_connected_graph(nodes, k % 6, rng), 2,
                                             verify::random_tolerance(lambda, rng));
        const auto types = random_types(game, rng);
        const auto a = Assignment::from_types(game, types);
        Rational total;
        for (NodeId v : a.occupied_nodes()) {
            const Rational u = utility(game, a, v);
            EXPECT_EQ(u, verify::naive_utility(game, types, v));
            EXPECT_GE(u, Rational(0));
            EXPECT_LE(u, Rational(1));
            // utility 1 iff every occupied neighbor sits at a distance with t_d = 1
            bool all_one = true;
            bool all_zero = true;
            int occupied = 0;
            for (NodeId w : game.topology().neighbors(v)) {
                if (!a.occupied(w)) continue;
                ++occupied;
                const auto& t = game.tolerance()[std::abs(a.type_at(w) - a.type_at(v))];
                all_one = all_one && t == Rational(1);
                all_zero = all_zero && t == Rational(0);
            }
            EXPECT_EQ(u == Rational(1), occupied > 0 && all_one);
            EXPECT_EQ(u == Rational(0), occupied == 0 || all_zero);
            total += u;
        }
        EXPECT_EQ(social_welfare(game, a), total);
    }
}

TEST(SocialWelfare, InvariantUnderRelabeling) {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 100; ++k) {
        const int nodes = 6 + k % 5;
        const auto t = verify::random_connected_graph(nodes, k % 4, rng);
        const auto game = GameInstance::make(t, 2, verify::random_tolerance(2, rng));
        const auto types = random_types(game, rng);

        std::vector<NodeId> perm(static_cast<std::size_t>(nodes));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> edges;
        for (auto [u, v] : t.edges()) edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        const auto relabeled = game.with_tolerance(game.tolerance());
        const auto game2 = GameInstance::make(build_graph(nodes, edges), 2, game.tolerance());
        std::vector<int> types2(types.size());
        for (std::size_t v = 0; v < types.size(); ++v) types2[static_cast<std::size_t>(perm[v])] = types[v];

        EXPECT_EQ(social_welfare(relabeled, Assignment::from_types(relabeled, types)),
                  social_welfare(game2, Assignment::from_types(game2, types2)));
    }
}

TEST(Assignment, JumpVacatesOrigin) {
    const auto game = GameInstance::make(standard_graph(GraphKind::path, 5), 2, standard_tolerance(ToleranceKind::zero, 2));
    const auto a = Assignment::from_types(game, {1, 1, 0, 2, 2});
    const auto b = a.jumped(1, 2);
    EXPECT_EQ(b.compact(), "1.122");
    EXPECT_EQ(code_of([&] { (void)a.jumped(2, 1); }), ErrorCode::NodeEmpty);
}
