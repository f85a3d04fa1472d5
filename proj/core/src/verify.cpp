#include <acolor/verify.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace acolor {

auto to_string(FailureKind kind) -> std::string_view
{
    switch (kind) {
        case FailureKind::None: return "none";
        case FailureKind::ForeignEdge: return "foreign_edge";
        case FailureKind::ColorOutOfRange: return "color_out_of_range";
        case FailureKind::Improper: return "improper";
        case FailureKind::Incomplete: return "incomplete";
        case FailureKind::BichromaticCycle: return "bichromatic_cycle";
    }
    return "unknown";
}

namespace {
    auto fail(FailureKind kind, std::string detail, std::vector<Vertex> where = {}) -> Verdict
    {
        return Verdict{false, kind, std::nullopt, std::move(where), std::move(detail)};
    }

    struct DisjointSets {
        std::vector<Vertex> parent;

        explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }

        auto find(Vertex x) -> Vertex
        {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        }
    };

    // Path from `from` to `to` in the forest given by `tree` (adjacency lists).
    auto tree_path(const std::map<Vertex, std::vector<Vertex>> & tree, Vertex from, Vertex to) -> std::vector<Vertex>
    {
        std::map<Vertex, Vertex> parent{{from, from}};
        std::vector<Vertex> queue{from};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex x = queue[head];
            if (x == to)
                break;
            auto it = tree.find(x);
            if (it == tree.end())
                continue;
            for (Vertex y : it->second)
                if (parent.emplace(y, x).second)
                    queue.push_back(y);
        }
        std::vector<Vertex> path;
        for (Vertex x = to; x != from; x = parent.at(x))
            path.push_back(x);
        path.push_back(from);
        std::ranges::reverse(path);
        return path;
    }
}

auto verify_acyclic(const Graph & graph, std::span<const ColoredEdge> edges, bool require_total,
    std::optional<int> palette) -> Verdict
{
    std::map<std::pair<Vertex, Vertex>, Color> colored;
    std::vector<std::vector<std::pair<Color, Vertex>>> at(static_cast<std::size_t>(graph.vertex_count()));

    for (const auto & e : edges) {
        if (e.u == e.v || ! graph.has_edge(e.u, e.v))
            return fail(FailureKind::ForeignEdge,
                "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in the graph", {e.u, e.v});
        if (e.color < 1 || (palette && e.color > *palette))
            return fail(FailureKind::ColorOutOfRange,
                "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " has color " + std::to_string(e.color),
                {e.u, e.v});
        auto key = std::minmax(e.u, e.v);
        if (! colored.emplace(key, e.color).second)
            return fail(FailureKind::Improper,
                "edge " + std::to_string(key.first) + "-" + std::to_string(key.second) + " colored twice",
                {key.first, key.second});
        at[e.u].emplace_back(e.color, e.v);
        at[e.v].emplace_back(e.color, e.u);
    }

    for (Vertex x = 0; x < graph.vertex_count(); ++x) {
        auto & row = at[x];
        std::ranges::sort(row);
        for (std::size_t i = 1; i < row.size(); ++i)
            if (row[i].first == row[i - 1].first)
                return fail(FailureKind::Improper,
                    "color " + std::to_string(row[i].first) + " twice at vertex " + std::to_string(x),
                    {x, row[i - 1].second, row[i].second});
    }

    if (require_total && colored.size() != graph.edge_count()) {
        for (auto e : graph.edges())
            if (! colored.contains({e.a, e.b}))
                return fail(FailureKind::Incomplete,
                    "edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " is uncolored", {e.a, e.b});
    }

    std::set<std::pair<Color, Color>> pairs;
    for (const auto & row : at)
        for (std::size_t i = 0; i < row.size(); ++i)
            for (std::size_t j = i + 1; j < row.size(); ++j)
                pairs.emplace(row[i].first, row[j].first);

    std::map<Color, std::vector<std::pair<Vertex, Vertex>>> by_color;
    for (const auto & [key, c] : colored)
        by_color[c].push_back(key);

    DisjointSets sets(graph.vertex_count());
    std::vector<Vertex> touched;
    for (const auto & [alpha, beta] : pairs) {
        touched.clear();
        std::optional<std::pair<Vertex, Vertex>> closing;
        std::vector<std::pair<Vertex, Vertex>> kept;
        for (Color c : {alpha, beta}) {
            for (auto [x, y] : by_color[c]) {
                touched.push_back(x);
                touched.push_back(y);
                auto rx = sets.find(x);
                auto ry = sets.find(y);
                if (rx == ry) {
                    closing = std::pair{x, y};
                    break;
                }
                sets.parent[rx] = ry;
                kept.emplace_back(x, y);
            }
            if (closing)
                break;
        }
        for (Vertex x : touched)
            sets.parent[x] = x;
        if (closing) {
            std::map<Vertex, std::vector<Vertex>> forest;
            for (auto [x, y] : kept) {
                forest[x].push_back(y);
                forest[y].push_back(x);
            }
            Verdict verdict = fail(FailureKind::BichromaticCycle,
                "(" + std::to_string(alpha) + "," + std::to_string(beta) + ") bichromatic cycle",
                tree_path(forest, closing->first, closing->second));
            verdict.color_pair = std::pair{alpha, beta};
            return verdict;
        }
    }
    return Verdict{};
}

auto verify_acyclic(const Graph & graph, const PartialColoring & coloring, bool require_total) -> Verdict
{
    std::vector<ColoredEdge> edges;
    for (const auto & [e, c] : coloring.assigned_edges())
        edges.push_back(ColoredEdge{e.a, e.b, c});
    return verify_acyclic(graph, edges, require_total, coloring.palette());
}

}
