#ifndef SCHELLING_VERIFY_ORACLE_HPP
#define SCHELLING_VERIFY_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "schelling/game.hpp"
#include "schelling/rational.hpp"

namespace schelling::verify {

/// Deliberately plain re-implementation of the game rules, sharing nothing
/// with the core kernel but the input types. Used as a cross-check only.
Rational naive_utility(const GameInstance& game, const std::vector<int>& types, int node);
bool naive_is_equilibrium(const GameInstance& game, const std::vector<int>& types);

struct NaiveResult {
    std::uint64_t placements = 0;
    std::vector<std::vector<int>> equilibria;  ///< in lexicographic order
    std::vector<int> optimum;                  ///< lexicographically smallest maximizer
    Rational opt;
};

/// Counts through {0..λ}^|V| in base λ+1 and keeps the balanced vectors.
/// Only meant for a few thousand placements.
NaiveResult naive_enumerate(const GameInstance& game);

}  // namespace schelling::verify

#endif  // SCHELLING_VERIFY_ORACLE_HPP
