#ifndef SCHELLING_CONSTRUCTIONS_HPP
#define SCHELLING_CONSTRUCTIONS_HPP

#include <span>
#include <vector>

#include "schelling/game.hpp"
#include "schelling/topology.hpp"

namespace schelling {

// --- grids --------------------------------------------------------------------

/// A grid seen with rows <= cols. (i, j) are 1-based coordinates in that
/// orientation; `node` maps them back to topology ids.
struct OrientedGrid {
    GridShape shape;          // as stored on the topology
    bool transposed = false;  // true when the topology has more rows than columns

    [[nodiscard]] int rows() const noexcept { return transposed ? shape.cols : shape.rows; }
    [[nodiscard]] int cols() const noexcept { return transposed ? shape.rows : shape.cols; }
    [[nodiscard]] NodeId node(int i, int j) const noexcept {
        return transposed ? shape.id(j, i) : shape.id(i, j);
    }
};

/// Errors: NotGrid.
OrientedGrid orient(const Topology& t);

/// Row-by-row fill state shared by the grid algorithms.
struct GridFillState {
    OrientedGrid grid;
    int cursor = 1;                  ///< next unused row of the oriented grid
    std::vector<TypeIndex> cells;    ///< per topology node
    std::vector<int> remaining;      ///< remaining[ℓ] for ℓ = 1..λ (index 0 unused)

    [[nodiscard]] int rows_left() const noexcept { return grid.rows() - cursor + 1; }
    [[nodiscard]] bool done() const noexcept;
    [[nodiscard]] int agents_left() const noexcept;
    /// Smallest type index with agents left, or kEmpty.
    [[nodiscard]] TypeIndex next_type() const noexcept;
    /// Places the next agent in type order at `v`; false when none are left.
    bool place_next(NodeId v);
};

/// Fresh state: every node empty, x agents of each type pending. Errors: NotGrid.
GridFillState make_fill_state(const GameInstance& game);

/// Fills the next `rows` rows column by column (top to bottom, left to
/// right), leaving the leftmost `empties` nodes of the first of those rows
/// empty. Stops placing when agents run out. Errors: RowOverflow, KTooLarge.
GridFillState tile(GridFillState state, int rows, int empties);

/// Two types, zero tolerance: reds, then mM - n empty nodes, then blues,
/// column-wise. Errors: NotGrid, WrongGameClass.
Assignment construct_2zts_grid(const GameInstance& game);

/// Row-group tiling for 2-binary tolerance vectors. Errors: NotGrid, WrongGameClass.
Assignment construct_binary_grid(const GameInstance& game);

/// Column-major fill of the top rows for α-binary vectors with α >= ceil(sqrt(λ)).
/// Every agent ends with utility 1 when the construction applies; the result
/// is checked and ConstructionCheckFailed is thrown otherwise.
/// Errors: NotGrid, WrongGameClass, ConstructionCheckFailed.
Assignment construct_band_grid(const GameInstance& game);

/// Number of top rows the band construction uses.
int band_rows(int rows, int cols, int agents);

// --- trees ----------------------------------------------------------------------

struct AgentPool {
    TypeIndex type = kEmpty;
    int count = 0;
};

/// Nodes of the subtree of `tree` hanging from `subtree_root`, in BFS order.
std::vector<NodeId> subtree_nodes(const RootedTree& tree, NodeId subtree_root);

/// Deepest-level-first placement into the subtree at `subtree_root`.
///
/// The first non-empty pool fills levels bottom-up, finishing sibling groups
/// first. The second covers every empty parent of a first-pool agent, then
/// both it and later pools grow the occupied region one adjacent node at a
/// time, preferring nodes whose occupied neighbors are within type distance
/// `< compatible_below` of the agent, then deeper nodes, then smaller ids.
/// Pool counts are decremented in place.
void bottom_up(const Topology& topology, const RootedTree& tree, NodeId subtree_root, std::span<AgentPool> pools,
               std::vector<TypeIndex>& cells, int compatible_below);

/// Base binary width the tree construction relies on: 2 for λ = 3, floor(λ/2) otherwise.
int tree_alpha(int lambda);

/// Centroid-rooted construction for ⌊λ/2⌋-binary games on trees (2-binary
/// for λ = 3), and for vectors lexicographically above those.
/// Errors: NotATree, WrongGameClass, ConstructionCheckFailed.
Assignment construct_tree_equilibrium(const GameInstance& game);

}  // namespace schelling

#endif  // SCHELLING_CONSTRUCTIONS_HPP
