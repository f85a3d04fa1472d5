#include <acolor/error.hpp>
#include <acolor/graph.hpp>

#include <algorithm>
#include <string>

namespace acolor {

Graph::Graph(int vertex_count)
{
    if (vertex_count < 0)
        throw Error(ErrorKind::VertexOutOfRange, "negative vertex count");
    adj_.resize(static_cast<std::size_t>(vertex_count));
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= vertex_count())
        throw Error(ErrorKind::VertexOutOfRange,
            "vertex " + std::to_string(v) + " not in 0.." + std::to_string(vertex_count() - 1));
}

auto Graph::degree(Vertex v) const -> int
{
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

auto Graph::neighbors(Vertex v) const -> std::span<const Vertex>
{
    check_vertex(v);
    return adj_[v];
}

auto Graph::has_edge(Vertex x, Vertex y) const -> bool
{
    if (x < 0 || y < 0 || x >= vertex_count() || y >= vertex_count())
        return false;
    return std::ranges::binary_search(adj_[x], y);
}

auto Graph::max_degree() const noexcept -> int
{
    std::size_t best = 0;
    for (const auto & row : adj_)
        best = std::max(best, row.size());
    return static_cast<int>(best);
}

auto Graph::min_positive_degree() const noexcept -> int
{
    std::size_t best = 0;
    for (const auto & row : adj_)
        if (! row.empty() && (best == 0 || row.size() < best))
            best = row.size();
    return static_cast<int>(best);
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(edge_count_);
    for (Vertex x = 0; x < vertex_count(); ++x)
        for (Vertex y : adj_[x])
            if (x < y)
                result.push_back(Edge{x, y});
    return result;
}

auto Graph::slot(Vertex x, Vertex y) const -> std::size_t
{
    check_vertex(x);
    auto it = std::ranges::lower_bound(adj_[x], y);
    if (it == adj_[x].end() || *it != y)
        throw Error(ErrorKind::EdgeAbsent, "edge " + std::to_string(x) + "-" + std::to_string(y));
    return static_cast<std::size_t>(it - adj_[x].begin());
}

void Graph::add_edge(Vertex x, Vertex y)
{
    check_vertex(x);
    check_vertex(y);
    if (x == y)
        throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(x));
    auto it = std::ranges::lower_bound(adj_[x], y);
    if (it != adj_[x].end() && *it == y)
        return;
    adj_[x].insert(it, y);
    adj_[y].insert(std::ranges::lower_bound(adj_[y], x), x);
    ++edge_count_;
}

void Graph::erase_edge(Edge e)
{
    if (! has_edge(e))
        throw Error(ErrorKind::EdgeAbsent, "edge " + std::to_string(e.a) + "-" + std::to_string(e.b));
    adj_[e.a].erase(std::ranges::lower_bound(adj_[e.a], e.b));
    adj_[e.b].erase(std::ranges::lower_bound(adj_[e.b], e.a));
    --edge_count_;
}

auto Graph::without_edge(Edge e) const -> Graph
{
    Graph result = *this;
    result.erase_edge(e);
    return result;
}

auto Graph::with_edge(Edge e) const -> Graph
{
    Graph result = *this;
    result.add_edge(e.a, e.b);
    return result;
}

auto Graph::is_consistent() const -> bool
{
    std::size_t half_edges = 0;
    for (Vertex x = 0; x < vertex_count(); ++x) {
        const auto & row = adj_[x];
        if (! std::ranges::is_sorted(row) || std::ranges::adjacent_find(row) != row.end())
            return false;
        for (Vertex y : row) {
            if (y == x || y < 0 || y >= vertex_count() || ! std::ranges::binary_search(adj_[y], x))
                return false;
        }
        half_edges += row.size();
    }
    return half_edges == 2 * edge_count_;
}

auto build_graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges) -> Graph
{
    Graph graph(vertex_count);
    for (auto [x, y] : edges)
        graph.add_edge(x, y);
    return graph;
}

auto build_graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges) -> Graph
{
    return build_graph(vertex_count, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

auto remove_edge(const Graph & graph, Edge e) -> Graph
{
    return graph.without_edge(e);
}

auto strip_degree2(const Graph & graph) -> StrippedGraph
{
    StrippedGraph result{Graph(graph.vertex_count()), {}};
    std::vector<bool> gone(static_cast<std::size_t>(graph.vertex_count()), false);
    for (Vertex v = 0; v < graph.vertex_count(); ++v)
        if (graph.degree(v) == 2) {
            gone[v] = true;
            result.removed.push_back(v);
        }
    for (auto e : graph.edges())
        if (! gone[e.a] && ! gone[e.b])
            result.graph.add_edge(e.a, e.b);
    return result;
}

auto edge_components(const Graph & graph) -> std::vector<std::vector<Vertex>>
{
    std::vector<std::vector<Vertex>> components;
    std::vector<bool> seen(static_cast<std::size_t>(graph.vertex_count()), false);
    for (Vertex start = 0; start < graph.vertex_count(); ++start) {
        if (seen[start] || graph.degree(start) == 0)
            continue;
        std::vector<Vertex> component{start};
        seen[start] = true;
        for (std::size_t head = 0; head < component.size(); ++head)
            for (Vertex w : graph.neighbors(component[head]))
                if (! seen[w]) {
                    seen[w] = true;
                    component.push_back(w);
                }
        std::ranges::sort(component);
        components.push_back(std::move(component));
    }
    return components;
}

}
