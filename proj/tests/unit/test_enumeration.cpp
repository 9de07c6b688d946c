#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "schelling/equilibrium.hpp"
#include "schelling/error.hpp"
#include "schelling/instances.hpp"
#include "schelling/report.hpp"
#include "schelling/verify/graphs.hpp"
#include "schelling/verify/oracle.hpp"

using namespace schelling;

namespace {

GameInstance p5_zero() {
    return GameInstance::make(standard_graph(GraphKind::path, 5), 2, standard_tolerance(ToleranceKind::zero, 2));
}

std::vector<std::vector<int>> as_vectors(const std::vector<Assignment>& list) {
    std::vector<std::vector<int>> out;
    for (const auto& a : list) out.emplace_back(a.types().begin(), a.types().end());
    return out;
}

}  // namespace

TEST(PlacementCount, Multinomial) {
    EXPECT_EQ(placement_count(p5_zero()), 30u);
    const auto tree = no_equilibrium_tree_game(2, ToleranceVector::make({1, Rational(1, 2)}));
    EXPECT_EQ(placement_count(tree.game), 2772u);
}

TEST(Enumerate, PathFiveZeroTolerance) {
    const auto game = p5_zero();
    const auto result = enumerate_placements(game);
    EXPECT_EQ(result.placements, 30u);
    ASSERT_EQ(result.equilibria.size(), 2u);
    EXPECT_EQ(result.equilibria[0].compact(), "11.22");
    EXPECT_EQ(result.equilibria[1].compact(), "22.11");
    EXPECT_EQ(result.opt, Rational(4));
    EXPECT_EQ(result.optimum.compact(), "11.22");

    const auto prices = price_report(result);
    EXPECT_EQ(prices.poa, Rational(1));
    EXPECT_EQ(prices.pos, Rational(1));
    EXPECT_EQ(prices.equilibrium_count, 2u);
}

TEST(Enumerate, NoEquilibriumTree) {
    for (const auto& tv : {ToleranceVector::make({1, Rational(1, 2)}), ToleranceVector::make({1, 0})}) {
        const auto inst = no_equilibrium_tree_game(2, tv);
        const auto result = enumerate_placements(inst.game);
        EXPECT_EQ(result.placements, 2772u);
        EXPECT_TRUE(result.equilibria.empty());
        try {
            (void)price_report(result);
            ADD_FAILURE() << "expected NoEquilibrium";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::NoEquilibrium);
        }
    }
}

TEST(Enumerate, BudgetExceeded) {
    const auto inst = no_equilibrium_tree_game(2, ToleranceVector::make({1, 0}));
    try {
        (void)enumerate_placements(inst.game, {100, 1});
        ADD_FAILURE() << "expected BudgetExceeded";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
        EXPECT_NE(std::string(e.what()).find("2772"), std::string::npos);
    }
    EXPECT_NO_THROW((void)enumerate_placements(inst.game, {2772, 1}));
}

TEST(Enumerate, CliqueForcesMixing) {
    for (int x = 2; x <= 3; ++x) {
        const auto game = GameInstance::make(standard_graph(GraphKind::clique, 2 * x + 1), x,
                                             standard_tolerance(ToleranceKind::zero, 2));
        const auto [opt_assignment, opt] = optimal_welfare(game);
        EXPECT_LT(opt, Rational(game.agent_count()));
    }
}

TEST(Enumerate, TwoTrianglesWithBridge) {
    // K3 - K3 joined by one edge, four agents: monochromatic triangles are equilibria
    const auto t = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    const auto game = GameInstance::make(t, 2, standard_tolerance(ToleranceKind::zero, 2));
    const auto eq = enumerate_equilibria(game);
    const auto naive = verify::naive_enumerate(game);
    EXPECT_EQ(as_vectors(eq), naive.equilibria);
    // both reds in the far corners of one triangle, blues likewise: every utility 1
    const auto seg = Assignment::from_types(game, {1, 1, 0, 0, 2, 2});
    EXPECT_TRUE(std::binary_search(eq.begin(), eq.end(), seg));
}

TEST(Enumerate, MatchesNaiveOracle) {
    std::mt19937_64 rng(1234);
    int checked = 0;
    while (checked < 40) {
        const int lambda = 2 + checked % 2;
        const int nodes = lambda * 2 + 1 + static_cast<int>(rng() % 3);
        const auto game = GameInstance::make(verify::random_connected_graph(nodes, static_cast<int>(rng() % 5), rng), 2,
                                             verify::random_tolerance(lambda, rng));
        if (placement_count(game) > 5000) continue;
        const auto result = enumerate_placements(game);
        const auto naive = verify::naive_enumerate(game);
        EXPECT_EQ(result.placements, naive.placements);
        EXPECT_EQ(as_vectors(result.equilibria), naive.equilibria);
        EXPECT_EQ(result.opt, naive.opt);
        EXPECT_EQ(std::vector<int>(result.optimum.types().begin(), result.optimum.types().end()), naive.optimum);
        ++checked;
    }
}

TEST(Enumerate, WorkerCountDoesNotChangeResult) {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 10; ++k) {
        const auto game = GameInstance::make(verify::random_connected_graph(9, k, rng), 2,
                                             verify::random_tolerance(3, rng));
        const auto one = enumerate_placements(game, {kDefaultEnumerationBudget, 1});
        for (int workers : {2, 3, 8}) {
            const auto many = enumerate_placements(game, {kDefaultEnumerationBudget, workers});
            EXPECT_EQ(one.equilibria, many.equilibria);
            EXPECT_EQ(one.equilibrium_welfare, many.equilibrium_welfare);
            EXPECT_EQ(one.optimum, many.optimum);
            EXPECT_EQ(render_enumeration(game, one, true), render_enumeration(game, many, true));
        }
    }
}

TEST(PriceReport, InvariantsAndWelfareFloor) {
    std::mt19937_64 rng(2024);
    int with_eq = 0;
    for (int k = 0; k < 60; ++k) {
        const int lambda = 2 + k % 2;
        const auto game = GameInstance::make(verify::random_connected_graph(lambda * 2 + 2, k % 5, rng), 2,
                                             verify::random_tolerance(lambda, rng));
        const auto result = enumerate_placements(game);
        if (result.equilibria.empty()) continue;
        ++with_eq;
        const Rational tau = tolerance_sums(game.tolerance()).tau;
        const Rational floor = (tau * Rational(game.agent_count()) - Rational(lambda)) / Rational(lambda);
        for (const auto& sw : result.equilibrium_welfare) EXPECT_GE(sw, floor);
        try {
            const auto p = price_report(result);
            EXPECT_LE(p.worst_eq, p.best_eq);
            EXPECT_LE(p.best_eq, p.opt);
            EXPECT_GE(p.poa, p.pos);
            EXPECT_GE(p.pos, Rational(1));
            EXPECT_EQ(p.poa, p.opt / p.worst_eq);
            if (result.equilibria.size() == 1) EXPECT_EQ(p.poa, p.pos);
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ZeroWelfareEquilibrium);
        }
    }
    EXPECT_GT(with_eq, 10);
}

TEST(PriceReport, PoaInstanceRatioMatchesBound) {
    // the instance is too large to enumerate; compare the constructed pair
    const auto inst = poa_lb_game(3, 1, standard_tolerance(ToleranceKind::zero, 3));
    const Rational eq = social_welfare(inst.game, inst.assignments.at("equilibrium_v"));
    const Rational opt = social_welfare(inst.game, inst.assignments.at("optimal"));
    EXPECT_EQ(opt, Rational(21));
    EXPECT_EQ(opt / eq, Rational(7, 2));
    EXPECT_EQ(opt / eq, evaluate_bound(BoundKind::zts_poa, {3, 21, std::nullopt}));
}
