#include <algorithm>
#include <string>

#include "schelling/constructions.hpp"
#include "schelling/equilibrium.hpp"
#include "schelling/error.hpp"

namespace schelling {
namespace {

int isqrt(int n) {
    int r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

void require_done(const GridFillState& state, const char* what) {
    if (!state.done()) {
        throw Error(ErrorCode::ConstructionCheckFailed,
                    std::string(what) + " left " + std::to_string(state.agents_left()) + " agents unplaced");
    }
}

}  // namespace

OrientedGrid orient(const Topology& t) {
    if (!t.grid()) throw Error(ErrorCode::NotGrid, "topology carries no grid metadata");
    OrientedGrid g;
    g.shape = *t.grid();
    g.transposed = g.shape.rows > g.shape.cols;
    return g;
}

bool GridFillState::done() const noexcept { return agents_left() == 0; }

int GridFillState::agents_left() const noexcept {
    int total = 0;
    for (std::size_t t = 1; t < remaining.size(); ++t) total += remaining[t];
    return total;
}

TypeIndex GridFillState::next_type() const noexcept {
    for (std::size_t t = 1; t < remaining.size(); ++t) {
        if (remaining[t] > 0) return static_cast<TypeIndex>(t);
    }
    return kEmpty;
}

bool GridFillState::place_next(NodeId v) {
    TypeIndex t = next_type();
    if (t == kEmpty) return false;
    cells[static_cast<std::size_t>(v)] = t;
    --remaining[static_cast<std::size_t>(t)];
    return true;
}

GridFillState make_fill_state(const GameInstance& game) {
    GridFillState state;
    state.grid = orient(game.topology());
    state.cells.assign(static_cast<std::size_t>(game.node_count()), kEmpty);
    state.remaining.assign(static_cast<std::size_t>(game.lambda()) + 1, game.agents_per_type());
    state.remaining[0] = 0;
    return state;
}

GridFillState tile(GridFillState state, int rows, int empties) {
    const int cols = state.grid.cols();
    if (rows < 0 || rows > state.rows_left()) {
        throw Error(ErrorCode::RowOverflow, "tile of " + std::to_string(rows) + " rows with only " +
                                                std::to_string(state.rows_left()) + " rows left");
    }
    if (empties < 0 || empties > cols) {
        throw Error(ErrorCode::KTooLarge, "cannot leave " + std::to_string(empties) + " of " +
                                              std::to_string(cols) + " nodes empty");
    }
    if (rows == 0) return state;
    const int top = state.cursor;
    for (int j = 1; j <= cols; ++j) {
        for (int i = top; i < top + rows; ++i) {
            if (i == top && j <= empties) continue;  // marked empty
            if (!state.place_next(state.grid.node(i, j))) break;
        }
    }
    state.cursor += rows;
    return state;
}

Assignment construct_2zts_grid(const GameInstance& game) {
    OrientedGrid grid = orient(game.topology());
    if (game.lambda() != 2 || !game.tolerance().is_zero_tolerance()) {
        throw Error(ErrorCode::WrongGameClass, "zts-grid construction needs two types and zero tolerance");
    }
    const int x = game.agents_per_type();
    const int empties = game.empty_count();
    std::vector<TypeIndex> cells(static_cast<std::size_t>(game.node_count()), kEmpty);
    int position = 0;
    for (int j = 1; j <= grid.cols(); ++j) {
        for (int i = 1; i <= grid.rows(); ++i, ++position) {
            TypeIndex t = position < x ? 1 : position < x + empties ? kEmpty : 2;
            cells[static_cast<std::size_t>(grid.node(i, j))] = t;
        }
    }
    return Assignment::from_types(game, std::move(cells));
}

Assignment construct_binary_grid(const GameInstance& game) {
    GridFillState state = make_fill_state(game);
    if (game.tolerance().binary_alpha() != 2) {
        throw Error(ErrorCode::WrongGameClass, "binary-grid construction needs a 2-binary tolerance vector");
    }
    const int x = game.agents_per_type();
    const int cols = state.grid.cols();
    int m = state.rows_left();
    int e = game.empty_count();

    while (!state.done() && x <= m && e >= cols) {
        state = tile(std::move(state), x, 0);
        if (state.done()) break;
        state.cursor += 1;  // leave the next row empty
        m -= x + 1;
        e -= cols;
    }
    if (!state.done()) {
        if (m != state.rows_left()) {
            throw Error(ErrorCode::ConstructionCheckFailed, "binary-grid row bookkeeping out of range");
        }
        if (x > m) {
            state = tile(std::move(state), m, 0);
        } else {
            // e < M and x <= m here: split the remaining rows as m = αx + β.
            const int alpha = m / x;
            const int beta = m % x;
            for (int i = 1; i <= alpha - 1 && !state.done(); ++i) state = tile(std::move(state), x, 0);
            if (!state.done()) {
                if (beta == 0) {
                    state = tile(std::move(state), x, e);
                } else if (beta == 1) {
                    // As written, the single row with the e holes comes first. Its agents next to
                    // the holes can then jump to a hole on the top border and gain (3x3, four types
                    // of two agents: .11/234/234). In that case we tile the same rows in the
                    // other order, as the beta >= 2 branch does.
                    GridFillState swapped = state;
                    state = tile(std::move(state), 1, e);
                    if (!state.done()) state = tile(std::move(state), x, 0);
                    if (state.done() && !is_equilibrium(game, Assignment::from_types(game, state.cells))) {
                        swapped = tile(std::move(swapped), x, 0);
                        if (!swapped.done()) swapped = tile(std::move(swapped), 1, e);
                        state = std::move(swapped);
                    }
                } else {
                    state = tile(std::move(state), x, 0);
                    if (!state.done()) state = tile(std::move(state), beta, e);
                }
            }
        }
    }
    require_done(state, "binary-grid construction");
    return Assignment::from_types(game, std::move(state.cells));
}

int band_rows(int rows, int cols, int agents) {
    const int needed = (agents + cols - 1) / cols;
    return std::min(rows, std::max(isqrt(agents), needed));
}

Assignment construct_band_grid(const GameInstance& game) {
    GridFillState state = make_fill_state(game);
    const int lambda = game.lambda();
    const auto alpha = game.tolerance().binary_alpha();
    const int root = isqrt(lambda);
    const int ceil_root = root * root == lambda ? root : root + 1;
    if (lambda < 3 || !alpha || *alpha < ceil_root) {
        throw Error(ErrorCode::WrongGameClass,
                    "band-grid construction needs lambda >= 3 and an alpha-binary vector with alpha >= ceil(sqrt(lambda))");
    }
    const int rows = band_rows(state.grid.rows(), state.grid.cols(), game.agent_count());
    for (int j = 1; j <= state.grid.cols() && !state.done(); ++j) {
        for (int i = 1; i <= rows; ++i) {
            if (!state.place_next(state.grid.node(i, j))) break;
        }
    }
    require_done(state, "band-grid construction");
    Assignment a = Assignment::from_types(game, std::move(state.cells));
    if (auto report = is_equilibrium(game, a); !report) {
        throw Error(ErrorCode::ConstructionCheckFailed,
                    "band-grid output is not an equilibrium: node " + std::to_string(report.witness->from_node) +
                        " gains by jumping to " + std::to_string(report.witness->to_node));
    }
    return a;
}

}  // namespace schelling
