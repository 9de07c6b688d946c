#ifndef SCHELLING_VERIFY_GRAPHS_HPP
#define SCHELLING_VERIFY_GRAPHS_HPP

#include <random>
#include <vector>

#include "schelling/topology.hpp"
#include "schelling/tolerance.hpp"

namespace schelling::verify {

/// Every connected graph on `nodes` vertices, one per isomorphism class, in a
/// fixed order. Supports 1..7 nodes (853 classes at 7).
std::vector<Topology> connected_graphs(int nodes);

/// Uniform labelled tree via a random Prüfer sequence.
Topology random_tree(int nodes, std::mt19937_64& rng);

/// Random tree plus `extra_edges` distinct random chords (fewer if the graph
/// saturates).
Topology random_connected_graph(int nodes, int extra_edges, std::mt19937_64& rng);

/// Valid tolerance vector of length `lambda` with small denominators.
ToleranceVector random_tolerance(int lambda, std::mt19937_64& rng);

}  // namespace schelling::verify

#endif  // SCHELLING_VERIFY_GRAPHS_HPP
