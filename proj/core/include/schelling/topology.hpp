#ifndef SCHELLING_TOPOLOGY_HPP
#define SCHELLING_TOPOLOGY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schelling {

using NodeId = int;
using Edge = std::pair<NodeId, NodeId>;

/// Row/column shape of a 4-neighborhood grid. Node (i, j), 1-based, has id
/// (i-1)*cols + (j-1).
struct GridShape {
    int rows = 0;
    int cols = 0;
    [[nodiscard]] NodeId id(int i, int j) const noexcept { return (i - 1) * cols + (j - 1); }
    [[nodiscard]] std::pair<int, int> coords(NodeId v) const noexcept { return {v / cols + 1, v % cols + 1}; }
    friend bool operator==(const GridShape&, const GridShape&) = default;
};

/// A tree hung from a root: parent[root] = -1, children sorted by id.
struct RootedTree {
    NodeId root = 0;
    std::vector<NodeId> parent;
    std::vector<int> depth;
    std::vector<std::vector<NodeId>> children;
};

/// Simple, undirected, connected graph on nodes 0..node_count-1.
/// Immutable once built; construct through `build_graph` or a generator.
class Topology {
public:
    [[nodiscard]] int node_count() const noexcept { return static_cast<int>(adjacency_.size()); }
    [[nodiscard]] int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    [[nodiscard]] std::span<const NodeId> neighbors(NodeId v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    [[nodiscard]] int degree(NodeId v) const { return static_cast<int>(neighbors(v).size()); }
    [[nodiscard]] int max_degree() const noexcept;
    [[nodiscard]] bool adjacent(NodeId u, NodeId v) const;
    [[nodiscard]] bool contains(NodeId v) const noexcept { return v >= 0 && v < node_count(); }
    /// Sorted (u < v) and lexicographically ordered.
    [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

    [[nodiscard]] const std::optional<GridShape>& grid() const noexcept { return grid_; }
    [[nodiscard]] bool is_tree() const noexcept { return edge_count() == node_count() - 1; }
    /// Throws NotATree unless `is_tree()`.
    [[nodiscard]] RootedTree rooted_at(NodeId root) const;

    /// Human-readable family tag ("grid", "path", "tree", "graph", ...).
    [[nodiscard]] const std::string& kind() const noexcept { return kind_; }
    [[nodiscard]] Topology with_kind(std::string kind) const;

    friend bool operator==(const Topology& a, const Topology& b) {
        return a.adjacency_ == b.adjacency_ && a.grid_ == b.grid_;
    }

    friend Topology build_graph(int node_count, std::span<const Edge> edges);
    friend Topology grid(int rows, int cols);

private:
    std::vector<std::vector<NodeId>> adjacency_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> matrix_;  // row-major adjacency bitset
    std::size_t words_per_row_ = 0;
    std::optional<GridShape> grid_;
    std::string kind_ = "graph";
};

/// Validates and builds. Errors: NodeUnknown, SelfLoop, DuplicateEdge,
/// Disconnected.
Topology build_graph(int node_count, std::span<const Edge> edges);
inline Topology build_graph(int node_count, std::initializer_list<Edge> edges) {
    return build_graph(node_count, std::span<const Edge>(edges.begin(), edges.size()));
}

/// m x M grid, 4-neighborhood, row-major ids. Errors: TooSmall.
Topology grid(int rows, int cols);

enum class GraphKind { path, cycle, clique, star };
std::optional<GraphKind> parse_graph_kind(std::string_view name);
std::string_view to_string(GraphKind kind);

/// Path 0-1-...-(size-1); cycle adds (size-1, 0); star is centered at 0.
Topology standard_graph(GraphKind kind, int size);

/// Sizes of the connected components left after deleting `removed`.
std::vector<int> component_sizes_without(const Topology& t, NodeId removed);

/// Node whose removal leaves components of at most floor(n/2) nodes,
/// smallest id on ties. Errors: NotATree, TooSmall (fewer than 3 nodes).
NodeId centroid(const Topology& t);

/// Graphviz rendering; `types[v]` (0 = empty) colors occupied nodes.
std::string to_dot(const Topology& t, std::span<const int> types = {});

}  // namespace schelling

#endif  // SCHELLING_TOPOLOGY_HPP
