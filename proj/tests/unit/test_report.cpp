#include <gtest/gtest.h>

#include "schelling/constructions.hpp"
#include "schelling/equilibrium.hpp"
#include "schelling/instances.hpp"
#include "schelling/report.hpp"

using namespace schelling;

TEST(Report, Enumeration) {
    const auto game = GameInstance::make(standard_graph(GraphKind::path, 5), 2, standard_tolerance(ToleranceKind::zero, 2));
    const auto text = render_enumeration(game, enumerate_placements(game), true);
    EXPECT_EQ(text,
              "nodes: 5\n"
              "lambda: 2\n"
              "agents: 4\n"
              "placements: 30\n"
              "equilibria: 2\n"
              "opt: 4 (4)\n"
              "optimum: 11.22\n"
              "worst_eq: 4 (4)\n"
              "best_eq: 4 (4)\n"
              "poa: 1 (1)\n"
              "pos: 1 (1)\n"
              "eq 11.22 sw 4 (4)\n"
              "eq 22.11 sw 4 (4)\n");
}

TEST(Report, UndefinedPrices) {
    const auto inst = no_equilibrium_tree_game(2, ToleranceVector::make({1, Rational(1, 2)}));
    const auto text = render_enumeration(inst.game, enumerate_placements(inst.game), false);
    EXPECT_NE(text.find("equilibria: 0\n"), std::string::npos);
    EXPECT_NE(text.find("poa: undefined (NoEquilibrium)\n"), std::string::npos);
}

TEST(Report, CheckWitnessLine) {
    const auto inst = seven_type_grid_example();
    const auto game = inst.game.with_tolerance(inst.tolerances.at("perturbed"));
    const auto& a = inst.assignments.at("equilibrium_v");
    const auto text = render_check(game, a, is_equilibrium(game, a));
    EXPECT_EQ(text.substr(0, text.find('\n')), "NOT EQUILIBRIUM; witness: node 7 (type 4) -> node 9, gain 2/3 -> 11/15");
    EXPECT_NE(text.find("sw: "), std::string::npos);
}

TEST(Report, LayoutAndDynamics) {
    const auto inst = seven_type_grid_example();
    EXPECT_EQ(render_layout(inst.game, inst.assignments.at("equilibrium_v")), "1234\n1234\n..67\n5567\n");

    const auto game = GameInstance::make(standard_graph(GraphKind::path, 5), 2, standard_tolerance(ToleranceKind::zero, 2));
    const auto r = best_response_dynamics(game, Assignment::from_types(game, {1, 2, 1, 2, 0}), 100);
    const auto text = render_dynamics(game, r, 1);
    EXPECT_EQ(text.rfind("outcome: Converged\n", 0), 0u);
    EXPECT_NE(text.find("move 1: "), std::string::npos);
    if (r.trace.size() > 1) EXPECT_NE(text.find("more moves"), std::string::npos);
}
