#ifndef SCHELLING_REPORT_HPP
#define SCHELLING_REPORT_HPP

#include <string>

#include "schelling/equilibrium.hpp"
#include "schelling/game.hpp"

namespace schelling {

/// Text printed by `enumerate`: placement and equilibrium counts, OPT, PoA and
/// PoS, then one line per equilibrium when `list` is set. Deterministic.
std::string render_enumeration(const GameInstance& game, const EnumerationResult& result, bool list);

/// Text printed by `check`: verdict, witness if any, SW.
std::string render_check(const GameInstance& game, const Assignment& a, const EquilibriumReport& report);

/// Text printed by `dynamics`.
std::string render_dynamics(const GameInstance& game, const DynamicsResult& result, std::size_t trace_limit);

/// Grid rows as compact strings when the topology is a grid, else the one-line compact form.
std::string render_layout(const GameInstance& game, const Assignment& a);

}  // namespace schelling

#endif  // SCHELLING_REPORT_HPP
