#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "schelling/constructions.hpp"
#include "schelling/equilibrium.hpp"
#include "schelling/error.hpp"
#include "schelling/instances.hpp"
#include "schelling/report.hpp"
#include "schelling/verify/graphs.hpp"

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

ToleranceVector binary(int lambda, int alpha) { return standard_tolerance(ToleranceKind::alpha_binary, lambda, alpha); }

std::string layout(const GameInstance& game, const Assignment& a) { return render_layout(game, a); }

std::string layout(const GameInstance& game, const std::vector<TypeIndex>& cells) {
    std::string text;
    for (TypeIndex t : cells) text += t == kEmpty ? '.' : static_cast<char>('0' + t);
    const int cols = game.topology().grid()->cols;
    std::string out;
    for (std::size_t i = 0; i < text.size(); i += static_cast<std::size_t>(cols)) {
        out += text.substr(i, static_cast<std::size_t>(cols)) + "\n";
    }
    return out;
}

// Monotone vectors above `base`, one raised tail entry at a time.
std::vector<ToleranceVector> raised(const ToleranceVector& base) {
    std::vector<ToleranceVector> out;
    const auto& v = base.values();
    for (std::size_t d = 1; d < v.size(); ++d) {
        if (v[d] == Rational(1)) continue;
        auto values = v;
        values[d] = std::min(values[d - 1], values[d] + Rational(1, 5));
        if (values.back() == Rational(1)) continue;
        out.push_back(ToleranceVector::make(values));
    }
    return out;
}

}  // namespace

// --- two types, zero tolerance -----------------------------------------------------

TEST(Zts, TwoByThree) {
    const auto game = GameInstance::make(grid(2, 3), 2, standard_tolerance(ToleranceKind::zero, 2));
    const auto a = construct_2zts_grid(game);
    EXPECT_EQ(layout(game, a), "1.2\n1.2\n");
    EXPECT_EQ(social_welfare(game, a), Rational(4));
    EXPECT_TRUE(is_equilibrium(game, a));
}

TEST(Zts, ThreeByThree) {
    const auto game = GameInstance::make(grid(3, 3), 4, standard_tolerance(ToleranceKind::zero, 2));
    const auto a = construct_2zts_grid(game);
    EXPECT_EQ(layout(game, a), "112\n1.2\n122\n");
    EXPECT_TRUE(is_equilibrium(game, a));
}

TEST(Zts, TallGridIsTransposed) {
    const auto game = GameInstance::make(grid(5, 2), 3, standard_tolerance(ToleranceKind::zero, 2));
    EXPECT_TRUE(is_equilibrium(game, construct_2zts_grid(game)));
}

TEST(Zts, Errors) {
    EXPECT_EQ(code_of([] { GameInstance::make(grid(1, 4), 2, standard_tolerance(ToleranceKind::zero, 2)); }),
              ErrorCode::InvalidGame);
    const auto three = GameInstance::make(grid(3, 3), 2, standard_tolerance(ToleranceKind::zero, 3));
    EXPECT_EQ(code_of([&] { construct_2zts_grid(three); }), ErrorCode::WrongGameClass);
    const auto path = GameInstance::make(standard_graph(GraphKind::cycle, 6), 2, standard_tolerance(ToleranceKind::zero, 2));
    EXPECT_EQ(code_of([&] { construct_2zts_grid(path); }), ErrorCode::NotGrid);
}

// --- tile ----------------------------------------------------------------------------

TEST(Tile, SevenTypesFirstTwoRows) {
    const auto game = GameInstance::make(grid(4, 4), 2, binary(7, 2));
    auto state = make_fill_state(game);
    state = tile(std::move(state), 2, 0);
    EXPECT_EQ(state.cursor, 3);
    EXPECT_EQ(layout(game, state.cells), "1234\n1234\n....\n....\n");
    EXPECT_EQ(state.agents_left(), 6);
    EXPECT_EQ(state.next_type(), 5);
}

TEST(Tile, FullEmptyRow) {
    const auto game = GameInstance::make(grid(3, 4), 2, binary(3, 2));
    auto state = make_fill_state(game);
    state = tile(std::move(state), 1, 4);
    EXPECT_EQ(state.agents_left(), 6);
    EXPECT_EQ(state.cursor, 2);
    EXPECT_EQ(layout(game, state.cells), "....\n....\n....\n");
}

TEST(Tile, EmptiesThenFill) {
    const auto game = GameInstance::make(grid(2, 4), 2, binary(3, 2));
    auto state = tile(make_fill_state(game), 2, 2);
    EXPECT_TRUE(state.done());
    EXPECT_EQ(layout(game, state.cells), "..23\n1123\n");
}

TEST(Tile, Errors) {
    const auto game = GameInstance::make(grid(2, 4), 2, binary(3, 2));
    EXPECT_EQ(code_of([&] { (void)tile(make_fill_state(game), 3, 0); }), ErrorCode::RowOverflow);
    EXPECT_EQ(code_of([&] { (void)tile(make_fill_state(game), 1, 5); }), ErrorCode::KTooLarge);
}

// --- 2-binary grids ---------------------------------------------------------------

TEST(BinaryGrid, SevenTypeExample) {
    const auto game = GameInstance::make(grid(4, 4), 2, binary(7, 2));
    const auto a = construct_binary_grid(game);
    EXPECT_EQ(layout(game, a), "1234\n1234\n..67\n5567\n");
    EXPECT_TRUE(is_equilibrium(game, a));
    const auto perturbed = game.with_tolerance(ToleranceVector::make({1, 1, Rational(3, 5), 0, 0, 0, 0}));
    EXPECT_FALSE(is_equilibrium(perturbed, a));
}

TEST(BinaryGrid, WhileLoopPlacesEveryone) {
    // x = 2 rows per group, a spare row in between, all agents placed by the loop
    const auto game = GameInstance::make(grid(4, 5), 2, binary(4, 2));
    const auto a = construct_binary_grid(game);
    EXPECT_EQ(layout(game, a), "1234.\n1234.\n.....\n.....\n");
    for (NodeId v : a.occupied_nodes()) EXPECT_EQ(utility(game, a, v), Rational(1));
}

TEST(BinaryGrid, SingleRowWithHolesGoesBelow) {
    // Taken literally, the beta = 1 branch gives .11/234/234, where the type-1 agent
    // at (1,2) gains by moving into the corner hole.
    const auto game = GameInstance::make(grid(3, 3), 2, binary(4, 2));
    const auto literal = Assignment::from_types(game, {0, 1, 1, 2, 3, 4, 2, 3, 4});
    const auto report = is_equilibrium(game, literal);
    ASSERT_FALSE(report);
    EXPECT_EQ(report.witness->from_node, 1);
    EXPECT_EQ(report.witness->to_node, 0);

    const auto a = construct_binary_grid(game);
    EXPECT_EQ(layout(game, a), "123\n123\n.44\n");
    EXPECT_TRUE(is_equilibrium(game, a));
}

TEST(BinaryGrid, SweepWithProofBounds) {
    int games = 0;
    for (int m = 2; m <= 7; ++m) {
        for (int cols = m; cols <= 8; ++cols) {
            for (int lambda = 3; lambda <= 8; ++lambda) {
                for (int x = 2; lambda * x < m * cols; ++x) {
                    const auto game = GameInstance::make(grid(m, cols), x, binary(lambda, 2));
                    const auto a = construct_binary_grid(game);
                    ++games;
                    EXPECT_TRUE(is_equilibrium(game, a)) << m << "x" << cols << " lambda " << lambda << " x " << x;
                    for (NodeId v : a.occupied_nodes()) {
                        const Rational u = utility(game, a, v);
                        EXPECT_GE(u, Rational(1, 3));
                        if (u < Rational(2, 3)) EXPECT_FALSE(best_deviation(game, a, v));
                    }
                }
            }
        }
    }
    EXPECT_GT(games, 300);
}

TEST(BinaryGrid, Errors) {
    const auto game = GameInstance::make(grid(3, 3), 2, binary(3, 1));
    EXPECT_EQ(code_of([&] { construct_binary_grid(game); }), ErrorCode::WrongGameClass);
}

// --- band grids ----------------------------------------------------------------------

TEST(BandGrid, FourTypes) {
    const auto game = GameInstance::make(grid(2, 5), 2, binary(4, 2));
    const auto a = construct_band_grid(game);
    EXPECT_EQ(layout(game, a), "1234.\n1234.\n");
    for (NodeId v : a.occupied_nodes()) EXPECT_EQ(utility(game, a, v), Rational(1));
    for (const auto& tv : raised(game.tolerance())) EXPECT_TRUE(is_equilibrium(game.with_tolerance(tv), a));
}

TEST(BandGrid, NineTypes) {
    const auto game = GameInstance::make(grid(4, 5), 2, binary(9, 3));
    const auto a = construct_band_grid(game);
    EXPECT_TRUE(is_equilibrium(game, a));
    for (NodeId v : a.occupied_nodes()) EXPECT_EQ(utility(game, a, v), Rational(1));
}

TEST(BandGrid, TallGridUsesTopRowsOnly) {
    const auto tall = GameInstance::make(grid(6, 7), 2, binary(4, 2));
    const auto flat = GameInstance::make(grid(2, 7), 2, binary(4, 2));
    const auto a = construct_band_grid(tall);
    const auto b = construct_band_grid(flat);
    const auto ta = a.compact();
    EXPECT_EQ(ta.substr(0, 14), b.compact());
    EXPECT_EQ(ta.substr(14), std::string(28, '.'));
}

TEST(BandGrid, Errors) {
    const auto low_alpha = GameInstance::make(grid(3, 5), 2, binary(5, 2));
    EXPECT_EQ(code_of([&] { construct_band_grid(low_alpha); }), ErrorCode::WrongGameClass);
    const auto two = GameInstance::make(grid(3, 5), 2, standard_tolerance(ToleranceKind::zero, 2));
    EXPECT_EQ(code_of([&] { construct_band_grid(two); }), ErrorCode::WrongGameClass);
}

// --- trees --------------------------------------------------------------------------

TEST(BottomUp, StarSubtree) {
    // root 0 -> 1 -> leaves 2, 3
    const auto t = build_graph(4, {{0, 1}, {1, 2}, {1, 3}});
    const auto tree = t.rooted_at(0);
    std::vector<TypeIndex> cells(4, kEmpty);
    std::vector<AgentPool> pools{{1, 2}, {2, 1}};
    bottom_up(t, tree, 1, pools, cells, 2);
    EXPECT_EQ(cells, (std::vector<TypeIndex>{kEmpty, 2, 1, 1}));
    EXPECT_EQ(pools[0].count, 0);
    EXPECT_EQ(pools[1].count, 0);
}

TEST(BottomUp, PathSubtree) {
    const auto t = standard_graph(GraphKind::path, 5);
    const auto tree = t.rooted_at(0);
    std::vector<TypeIndex> cells(5, kEmpty);
    std::vector<AgentPool> pools{{1, 1}, {2, 3}};
    bottom_up(t, tree, 1, pools, cells, 2);
    EXPECT_EQ(cells, (std::vector<TypeIndex>{kEmpty, 2, 2, 2, 1}));
}

TEST(BottomUp, EmptyPoolsLeaveCellsAlone) {
    const auto t = standard_graph(GraphKind::path, 5);
    const auto tree = t.rooted_at(0);
    std::vector<TypeIndex> cells(5, kEmpty);
    std::vector<AgentPool> pools;
    bottom_up(t, tree, 1, pools, cells, 2);
    EXPECT_EQ(cells, std::vector<TypeIndex>(5, kEmpty));
}

TEST(TreeConstruction, NoEquilibriumTopologyWithFourTypes) {
    const auto base = no_equilibrium_tree_game(3, standard_tolerance(ToleranceKind::zero, 3));
    const auto game = GameInstance::make(base.game.topology(), 3, binary(4, 2));
    const auto a = construct_tree_equilibrium(game);
    EXPECT_TRUE(is_equilibrium(game, a));
    EXPECT_EQ(static_cast<int>(a.occupied_nodes().size()), 12);
}

TEST(TreeConstruction, Star) {
    const auto game = GameInstance::make(standard_graph(GraphKind::star, 8), 2, binary(3, 2));
    EXPECT_TRUE(is_equilibrium(game, construct_tree_equilibrium(game)));
}

TEST(TreeConstruction, RandomTreesAndRaisedVectors) {
    std::mt19937_64 rng(31);
    int games = 0;
    for (int k = 0; k < 60; ++k) {
        const auto t = verify::random_tree(8 + k % 25, rng);
        for (int lambda = 3; lambda <= 7; ++lambda) {
            for (int x = 2; lambda * x < t.node_count(); ++x) {
                const auto game = GameInstance::make(t, x, binary(lambda, tree_alpha(lambda)));
                const auto a = construct_tree_equilibrium(game);
                ++games;
                ASSERT_TRUE(is_equilibrium(game, a)) << "tree " << k << " lambda " << lambda << " x " << x;
                if (lambda >= 4) {
                    for (const auto& tv : raised(game.tolerance())) {
                        EXPECT_TRUE(is_equilibrium(game.with_tolerance(tv), a));
                    }
                }
            }
        }
    }
    EXPECT_GT(games, 200);
}

TEST(TreeConstruction, Errors) {
    const auto cycle = GameInstance::make(standard_graph(GraphKind::cycle, 9), 2, binary(3, 2));
    EXPECT_EQ(code_of([&] { construct_tree_equilibrium(cycle); }), ErrorCode::NotATree);
    const auto weak = GameInstance::make(standard_graph(GraphKind::path, 13), 2, binary(6, 2));
    EXPECT_EQ(code_of([&] { construct_tree_equilibrium(weak); }), ErrorCode::WrongGameClass);
    EXPECT_EQ(tree_alpha(3), 2);
    EXPECT_EQ(tree_alpha(7), 3);
}
