#ifndef SCHELLING_INSTANCES_HPP
#define SCHELLING_INSTANCES_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schelling/game.hpp"
#include "schelling/rational.hpp"
#include "schelling/tolerance.hpp"

namespace schelling {

/// A generated game plus the assignments and node groups its construction names.
struct NamedInstance {
    std::string name;
    GameInstance game;
    std::map<std::string, Assignment> assignments;         ///< "equilibrium_v", "optimal", "v_star"
    std::map<std::string, std::string> parameters;         ///< construction parameters, rendered
    std::map<std::string, std::vector<NodeId>> groups;     ///< named node sets
    std::map<std::string, ToleranceVector> tolerances;     ///< alternative vectors worth checking
};

/// Four-level tree with n = λ(2λ+1) agents and n+1 nodes: root α, its child
/// β, 2λ-1 children Γ of β, and λ leaves under each γ ∈ Γ. Admits no
/// equilibrium whenever t_1 < 1. Errors: T1IsOne, InvalidParameters.
NamedInstance no_equilibrium_tree_game(int lambda, const ToleranceVector& tv);

/// Center c, λ cliques of size 2λμ+1, 2λμ chained cliques of size λ and one
/// more λ-clique, n = λ(2λμ+1) agents on 2n+1 nodes. Errors: InvalidParameters.
NamedInstance poa_lb_game(int lambda, int mu, const ToleranceVector& tv);

/// SW of the small-clique equilibrium: (Στ_ℓ/λ²)n + (Στ_ℓ − λ²)/(λ(λ−1)).
Rational poa_lb_equilibrium_welfare(int lambda, int mu, const ToleranceVector& tv);

/// Two-type game on n+1 nodes, z = 2b+1, c = bz, n = 2c(z+1), tolerance [1, t1].
/// Errors: BadB (b odd, a multiple of 3, or < 2), T1IsOne, Negative.
NamedInstance pos_game(int b, const Rational& t1);

struct PosGameSizes {
    int b = 0;
    int z = 0;
    int c = 0;
    int n = 0;
};
PosGameSizes pos_game_sizes(int b);

/// Exact welfare of the pos_game equilibrium, summed group by group.
Rational pos_equilibrium_welfare(int b, const Rational& t1);
/// Exact welfare of v_star (I ∪ K ∪ J red, Y ∪ S blue, c-1 blues in X).
Rational pos_vstar_welfare(int b, const Rational& t1);
/// The same sum without the tolerance terms of J and s; equal to
/// `pos_vstar_welfare` only at t1 = 0.
Rational pos_vstar_welfare_zero_tolerance_form(int b, const Rational& t1);
/// cz(2z+3+t1)/(z+2), strictly below SW(v_star).
Rational pos_vstar_lower_bound(int b, const Rational& t1);
/// cz(b(1+t1)+2)/(b+1) + 2c + 1, strictly above SW(equilibrium_v).
Rational pos_equilibrium_upper_bound(int b, const Rational& t1);

/// 4x4 grid, seven types of two agents, with the binary-grid construction
/// output; tolerances "binary" = [1,1,0,...] and "perturbed" = [1,1,3/5,0,...].
NamedInstance seven_type_grid_example();

// --- closed-form bounds --------------------------------------------------------

enum class BoundKind { poa_upper, poa_lower, zts_poa, pos_lower, proportional_poa_upper, inverse_poa_upper };

std::optional<BoundKind> parse_bound_kind(std::string_view name);
std::string_view to_string(BoundKind kind);

struct BoundParams {
    int lambda = 2;
    int n = 0;
    std::optional<ToleranceVector> tolerance;
};

/// Errors: InvalidParameters, DegenerateDenominator.
Rational evaluate_bound(BoundKind kind, const BoundParams& params);

/// H_λ = 1 + 1/2 + ... + 1/λ.
Rational harmonic(int lambda);

}  // namespace schelling

#endif  // SCHELLING_INSTANCES_HPP
