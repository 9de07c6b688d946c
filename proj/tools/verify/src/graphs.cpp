#include "schelling/verify/graphs.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

namespace schelling::verify {

namespace {

constexpr int kMaxNodes = 7;

struct PairIndex {
    std::array<std::array<int, kMaxNodes>, kMaxNodes> index{};
    PairIndex() {
        int k = 0;
        for (int i = 0; i < kMaxNodes; ++i) {
            for (int j = i + 1; j < kMaxNodes; ++j) {
                index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
                index[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = k;
                ++k;
            }
        }
    }
    [[nodiscard]] int operator()(int i, int j) const {
        return index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
};

const PairIndex& pair_index() {
    static const PairIndex table;
    return table;
}

using Mask = std::uint32_t;

std::vector<Edge> mask_edges(int n, Mask mask) {
    std::vector<Edge> out;
    const auto& idx = pair_index();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (mask >> idx(i, j) & 1U) out.emplace_back(i, j);
        }
    }
    return out;
}

// Smallest relabelled mask over all n! permutations.
Mask canonical(int n, Mask mask) {
    const auto& idx = pair_index();
    const auto edges = mask_edges(n, mask);
    std::array<int, kMaxNodes> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    Mask best = ~Mask{0};
    do {
        Mask m = 0;
        for (const auto& [u, v] : edges) {
            m |= Mask{1} << idx(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        }
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return best;
}

}  // namespace

std::vector<Topology> connected_graphs(int nodes) {
    if (nodes < 1 || nodes > kMaxNodes) throw std::invalid_argument("connected_graphs supports 1..7 nodes");
    // Every connected graph has a vertex whose removal keeps it connected, so
    // each class on n nodes extends some class on n-1 nodes by one vertex.
    std::set<Mask> level{0};
    const auto& idx = pair_index();
    for (int n = 2; n <= nodes; ++n) {
        std::set<Mask> next;
        for (Mask base : level) {
            for (Mask subset = 1; subset < (Mask{1} << (n - 1)); ++subset) {
                Mask m = base;
                for (int v = 0; v < n - 1; ++v) {
                    if (subset >> v & 1U) m |= Mask{1} << idx(v, n - 1);
                }
                next.insert(canonical(n, m));
            }
        }
        level = std::move(next);
    }
    std::vector<Topology> out;
    out.reserve(level.size());
    for (Mask m : level) out.push_back(build_graph(nodes, mask_edges(nodes, m)));
    return out;
}

Topology random_tree(int nodes, std::mt19937_64& rng) {
    if (nodes < 2) throw std::invalid_argument("random_tree needs at least two nodes");
    if (nodes == 2) return build_graph(2, {{0, 1}}).with_kind("tree");
    std::uniform_int_distribution<int> pick(0, nodes - 1);
    std::vector<int> code(static_cast<std::size_t>(nodes - 2));
    for (auto& c : code) c = pick(rng);
    std::vector<int> degree(static_cast<std::size_t>(nodes), 1);
    for (int c : code) ++degree[static_cast<std::size_t>(c)];
    std::vector<Edge> edges;
    std::set<int> leaves;
    for (int v = 0; v < nodes; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    }
    for (int c : code) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
        if (--degree[static_cast<std::size_t>(c)] == 1) leaves.insert(c);
    }
    const int u = *leaves.begin();
    const int v = *std::next(leaves.begin());
    edges.emplace_back(u, v);
    return build_graph(nodes, edges).with_kind("tree");
}

Topology random_connected_graph(int nodes, int extra_edges, std::mt19937_64& rng) {
    const auto tree = random_tree(nodes, rng);
    std::set<Edge> edges(tree.edges().begin(), tree.edges().end());
    std::vector<Edge> missing;
    for (int u = 0; u < nodes; ++u) {
        for (int v = u + 1; v < nodes; ++v) {
            if (!edges.count({u, v})) missing.emplace_back(u, v);
        }
    }
    std::shuffle(missing.begin(), missing.end(), rng);
    const auto take = std::min<std::size_t>(missing.size(), static_cast<std::size_t>(std::max(extra_edges, 0)));
    edges.insert(missing.begin(), missing.begin() + static_cast<std::ptrdiff_t>(take));
    return build_graph(nodes, std::vector<Edge>(edges.begin(), edges.end()));
}

ToleranceVector random_tolerance(int lambda, std::mt19937_64& rng) {
    static constexpr int kDenominators[] = {2, 3, 4, 6};
    const int den = kDenominators[std::uniform_int_distribution<int>(0, 3)(rng)];
    std::vector<Rational> values{Rational(1)};
    int num = den;
    for (int d = 1; d < lambda; ++d) {
        num = std::uniform_int_distribution<int>(0, num)(rng);
        values.emplace_back(num, den);
    }
    if (values.back() == Rational(1)) values.back() = Rational(den - 1, den);
    return ToleranceVector::make(values);
}

}  // namespace schelling::verify
