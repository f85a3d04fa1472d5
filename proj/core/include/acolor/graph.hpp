#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace acolor {

using Vertex = int;

/// Undirected edge handle, always stored with a < b.
struct Edge {
    Vertex a = 0;
    Vertex b = 0;

    /// Canonicalises the endpoint order. Does not reject a == b; Graph does.
    static constexpr auto of(Vertex x, Vertex y) noexcept -> Edge
    {
        return x < y ? Edge{x, y} : Edge{y, x};
    }

    [[nodiscard]] constexpr auto other(Vertex x) const noexcept -> Vertex { return x == a ? b : a; }
    [[nodiscard]] constexpr auto touches(Vertex x) const noexcept -> bool { return x == a || x == b; }

    friend constexpr auto operator<=>(const Edge &, const Edge &) = default;
};

/// Simple undirected graph on the dense vertex set 0..n-1 with sorted
/// adjacency. Removing edges never renumbers vertices, so vertex ids stay
/// meaningful across every derived graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    [[nodiscard]] auto vertex_count() const noexcept -> int { return static_cast<int>(adj_.size()); }
    [[nodiscard]] auto edge_count() const noexcept -> std::size_t { return edge_count_; }
    [[nodiscard]] auto degree(Vertex v) const -> int;
    [[nodiscard]] auto neighbors(Vertex v) const -> std::span<const Vertex>;
    [[nodiscard]] auto has_edge(Vertex x, Vertex y) const -> bool;
    [[nodiscard]] auto has_edge(Edge e) const -> bool { return has_edge(e.a, e.b); }
    [[nodiscard]] auto max_degree() const noexcept -> int;
    [[nodiscard]] auto min_positive_degree() const noexcept -> int;

    /// All edges in ascending canonical order.
    [[nodiscard]] auto edges() const -> std::vector<Edge>;

    /// Position of y inside neighbors(x); throws EdgeAbsent.
    [[nodiscard]] auto slot(Vertex x, Vertex y) const -> std::size_t;

    /// Adds x-y; duplicates are ignored. Throws SelfLoop / VertexOutOfRange.
    void add_edge(Vertex x, Vertex y);
    /// Throws EdgeAbsent.
    void erase_edge(Edge e);

    [[nodiscard]] auto without_edge(Edge e) const -> Graph;
    [[nodiscard]] auto with_edge(Edge e) const -> Graph;

    /// Loop-freeness, symmetry and sortedness of the adjacency.
    [[nodiscard]] auto is_consistent() const -> bool;

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

[[nodiscard]] auto build_graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges) -> Graph;
[[nodiscard]] auto build_graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges) -> Graph;

/// G - e. Throws EdgeAbsent.
[[nodiscard]] auto remove_edge(const Graph & graph, Edge e) -> Graph;

struct StrippedGraph {
    Graph graph;
    std::vector<Vertex> removed;
};

/// Induced subgraph on the vertices whose degree in `graph` is not 2.
/// Degrees are measured once, in the input; removed vertices keep their ids
/// and end up isolated.
[[nodiscard]] auto strip_degree2(const Graph & graph) -> StrippedGraph;

/// Connected components with at least one edge, each sorted ascending;
/// components are ordered by their smallest vertex.
[[nodiscard]] auto edge_components(const Graph & graph) -> std::vector<std::vector<Vertex>>;

}
