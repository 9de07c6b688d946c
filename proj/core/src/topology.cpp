#include "schelling/topology.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "schelling/error.hpp"

namespace schelling {
namespace {

std::vector<int> bfs_order(const std::vector<std::vector<NodeId>>& adjacency, NodeId start,
                           NodeId removed) {
    std::vector<int> seen(adjacency.size(), 0);
    std::vector<int> order;
    if (start == removed) return order;
    seen[static_cast<std::size_t>(start)] = 1;
    order.push_back(start);
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (NodeId w : adjacency[static_cast<std::size_t>(order[head])]) {
            if (w == removed || seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            order.push_back(w);
        }
    }
    return order;
}

// Fill colors per type index; cycled for λ > palette size.
constexpr std::array<const char*, 10> kPalette = {
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
    "#ffff33", "#a65628", "#f781bf", "#999999", "#66c2a5",
};

}  // namespace

int Topology::max_degree() const noexcept {
    int best = 0;
    for (const auto& row : adjacency_) best = std::max(best, static_cast<int>(row.size()));
    return best;
}

bool Topology::adjacent(NodeId u, NodeId v) const {
    if (!contains(u) || !contains(v)) return false;
    const auto bit = static_cast<std::size_t>(v);
    return (matrix_[static_cast<std::size_t>(u) * words_per_row_ + bit / 64] >> (bit % 64)) & 1U;
}

Topology Topology::with_kind(std::string kind) const {
    Topology copy = *this;
    copy.kind_ = std::move(kind);
    return copy;
}

RootedTree Topology::rooted_at(NodeId root) const {
    if (!is_tree()) throw Error(ErrorCode::NotATree, "topology is not a tree");
    if (!contains(root)) throw Error(ErrorCode::NodeUnknown, "root " + std::to_string(root) + " not in tree");
    RootedTree tree;
    tree.root = root;
    const auto n = static_cast<std::size_t>(node_count());
    tree.parent.assign(n, -1);
    tree.depth.assign(n, 0);
    tree.children.assign(n, {});
    for (NodeId v : bfs_order(adjacency_, root, -1)) {
        for (NodeId w : adjacency_[static_cast<std::size_t>(v)]) {
            if (w == tree.parent[static_cast<std::size_t>(v)]) continue;
            tree.parent[static_cast<std::size_t>(w)] = v;
            tree.depth[static_cast<std::size_t>(w)] = tree.depth[static_cast<std::size_t>(v)] + 1;
            tree.children[static_cast<std::size_t>(v)].push_back(w);
        }
    }
    return tree;
}

Topology build_graph(int node_count, std::span<const Edge> edges) {
    if (node_count < 1) throw Error(ErrorCode::TooSmall, "graph needs at least one node");
    Topology t;
    const auto n = static_cast<std::size_t>(node_count);
    t.adjacency_.assign(n, {});
    t.words_per_row_ = (n + 63) / 64;
    t.matrix_.assign(n * t.words_per_row_, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= node_count || v >= node_count) {
            throw Error(ErrorCode::NodeUnknown,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        }
        if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at node " + std::to_string(u));
        if (t.adjacent(u, v)) {
            throw Error(ErrorCode::DuplicateEdge,
                        "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        const auto su = static_cast<std::size_t>(u);
        const auto sv = static_cast<std::size_t>(v);
        t.matrix_[su * t.words_per_row_ + sv / 64] |= std::uint64_t{1} << (sv % 64);
        t.matrix_[sv * t.words_per_row_ + su / 64] |= std::uint64_t{1} << (su % 64);
        t.adjacency_[su].push_back(v);
        t.adjacency_[sv].push_back(u);
        t.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    for (auto& row : t.adjacency_) std::sort(row.begin(), row.end());
    std::sort(t.edges_.begin(), t.edges_.end());
    if (bfs_order(t.adjacency_, 0, -1).size() != n) {
        throw Error(ErrorCode::Disconnected, "graph is not connected");
    }
    if (t.is_tree()) t.kind_ = "tree";
    return t;
}

Topology grid(int rows, int cols) {
    if (rows < 1 || cols < 1 || rows * cols < 2) {
        throw Error(ErrorCode::TooSmall, "grid needs m, M >= 1 and at least two nodes");
    }
    GridShape shape{rows, cols};
    std::vector<Edge> edges;
    for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= cols; ++j) {
            if (j < cols) edges.emplace_back(shape.id(i, j), shape.id(i, j + 1));
            if (i < rows) edges.emplace_back(shape.id(i, j), shape.id(i + 1, j));
        }
    }
    Topology t = build_graph(rows * cols, edges);
    t.grid_ = shape;
    t.kind_ = "grid";
    return t;
}

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
    if (name == "path") return GraphKind::path;
    if (name == "cycle") return GraphKind::cycle;
    if (name == "clique") return GraphKind::clique;
    if (name == "star") return GraphKind::star;
    return std::nullopt;
}

std::string_view to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::path: return "path";
        case GraphKind::cycle: return "cycle";
        case GraphKind::clique: return "clique";
        case GraphKind::star: return "star";
    }
    return "graph";
}

Topology standard_graph(GraphKind kind, int size) {
    const int minimum = kind == GraphKind::cycle ? 3 : 2;
    if (size < minimum) {
        throw Error(ErrorCode::TooSmall, std::string(to_string(kind)) + " needs at least " +
                                             std::to_string(minimum) + " nodes");
    }
    std::vector<Edge> edges;
    switch (kind) {
        case GraphKind::path:
        case GraphKind::cycle:
            for (int v = 0; v + 1 < size; ++v) edges.emplace_back(v, v + 1);
            if (kind == GraphKind::cycle) edges.emplace_back(size - 1, 0);
            break;
        case GraphKind::clique:
            for (int u = 0; u < size; ++u) {
                for (int v = u + 1; v < size; ++v) edges.emplace_back(u, v);
            }
            break;
        case GraphKind::star:
            for (int v = 1; v < size; ++v) edges.emplace_back(0, v);
            break;
    }
    return build_graph(size, edges).with_kind(std::string(to_string(kind)));
}

std::vector<int> component_sizes_without(const Topology& t, NodeId removed) {
    std::vector<int> seen(static_cast<std::size_t>(t.node_count()), 0);
    std::vector<int> sizes;
    std::vector<std::vector<NodeId>> adjacency(static_cast<std::size_t>(t.node_count()));
    for (NodeId v = 0; v < t.node_count(); ++v) {
        auto nb = t.neighbors(v);
        adjacency[static_cast<std::size_t>(v)].assign(nb.begin(), nb.end());
    }
    for (NodeId v = 0; v < t.node_count(); ++v) {
        if (v == removed || seen[static_cast<std::size_t>(v)]) continue;
        auto comp = bfs_order(adjacency, v, removed);
        for (NodeId w : comp) seen[static_cast<std::size_t>(w)] = 1;
        sizes.push_back(static_cast<int>(comp.size()));
    }
    return sizes;
}

NodeId centroid(const Topology& t) {
    if (!t.is_tree()) throw Error(ErrorCode::NotATree, "centroid requires a tree");
    const int n = t.node_count();
    if (n < 3) throw Error(ErrorCode::TooSmall, "centroid requires at least 3 nodes");
    // Subtree sizes from an arbitrary root give every component size in O(n).
    RootedTree rooted = t.rooted_at(0);
    std::vector<NodeId> order;
    order.reserve(static_cast<std::size_t>(n));
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (NodeId c : rooted.children[static_cast<std::size_t>(order[head])]) order.push_back(c);
    }
    std::vector<int> size(static_cast<std::size_t>(n), 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        NodeId p = rooted.parent[static_cast<std::size_t>(*it)];
        if (p >= 0) size[static_cast<std::size_t>(p)] += size[static_cast<std::size_t>(*it)];
    }
    for (NodeId v = 0; v < n; ++v) {
        int largest = n - size[static_cast<std::size_t>(v)];
        for (NodeId c : rooted.children[static_cast<std::size_t>(v)]) {
            largest = std::max(largest, size[static_cast<std::size_t>(c)]);
        }
        if (largest <= n / 2) return v;
    }
    throw Error(ErrorCode::NotATree, "no centroid found");  // unreachable for trees
}

std::string to_dot(const Topology& t, std::span<const int> types) {
    std::ostringstream out;
    out << "graph G {\n";
    out << "  node [shape=circle, style=filled, fillcolor=\"#ffffff\"];\n";
    for (NodeId v = 0; v < t.node_count(); ++v) {
        out << "  " << v;
        const int type = static_cast<std::size_t>(v) < types.size() ? types[static_cast<std::size_t>(v)] : 0;
        if (type > 0) {
            out << " [label=\"" << v << ":T" << type << "\", fillcolor=\""
                << kPalette[static_cast<std::size_t>(type - 1) % kPalette.size()] << "\"]";
        }
        out << ";\n";
    }
    for (auto [u, v] : t.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace schelling
