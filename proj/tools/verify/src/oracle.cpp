#include "schelling/verify/oracle.hpp"

#include <cstdlib>

namespace schelling::verify {

Rational naive_utility(const GameInstance& game, const std::vector<int>& types, int node) {
    const int own = types[static_cast<std::size_t>(node)];
    Rational sum(0);
    int occupied = 0;
    for (int w = 0; w < game.node_count(); ++w) {
        if (w == node || !game.topology().adjacent(node, w)) continue;
        const int other = types[static_cast<std::size_t>(w)];
        if (other == 0) continue;
        ++occupied;
        sum += game.tolerance()[std::abs(own - other)];
    }
    if (occupied == 0) return Rational(0);
    return sum / Rational(occupied);
}

bool naive_is_equilibrium(const GameInstance& game, const std::vector<int>& types) {
    for (int v = 0; v < game.node_count(); ++v) {
        if (types[static_cast<std::size_t>(v)] == 0) continue;
        const Rational now = naive_utility(game, types, v);
        for (int target = 0; target < game.node_count(); ++target) {
            if (types[static_cast<std::size_t>(target)] != 0) continue;
            auto moved = types;
            moved[static_cast<std::size_t>(target)] = moved[static_cast<std::size_t>(v)];
            moved[static_cast<std::size_t>(v)] = 0;
            if (naive_utility(game, moved, target) > now) return false;
        }
    }
    return true;
}

NaiveResult naive_enumerate(const GameInstance& game) {
    const int nodes = game.node_count();
    const int base = game.lambda() + 1;
    NaiveResult out;
    bool have_opt = false;
    std::vector<int> digits(static_cast<std::size_t>(nodes), 0);
    while (true) {
        std::vector<int> counts(static_cast<std::size_t>(base), 0);
        for (int d : digits) ++counts[static_cast<std::size_t>(d)];
        bool balanced = true;
        for (int t = 1; t < base; ++t) balanced = balanced && counts[static_cast<std::size_t>(t)] == game.agents_per_type();
        if (balanced) {
            ++out.placements;
            Rational sw(0);
            for (int v = 0; v < nodes; ++v) {
                if (digits[static_cast<std::size_t>(v)] != 0) sw += naive_utility(game, digits, v);
            }
            if (!have_opt || sw > out.opt) {
                out.opt = sw;
                out.optimum = digits;
                have_opt = true;
            }
            if (naive_is_equilibrium(game, digits)) out.equilibria.push_back(digits);
        }
        // node 0 is the most significant digit, so this walks in lexicographic order
        int pos = nodes - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == base - 1) digits[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++digits[static_cast<std::size_t>(pos)];
    }
    return out;
}

}  // namespace schelling::verify
