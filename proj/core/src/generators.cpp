#include <acolor/error.hpp>
#include <acolor/generators.hpp>

#include <array>
#include <charconv>
#include <random>
#include <stdexcept>
#include <vector>

namespace acolor {

namespace {
    // Every generator output must pass the necessary planarity edge bound.
    auto checked(Graph graph) -> Graph
    {
        auto n = static_cast<std::size_t>(graph.vertex_count());
        if (n >= 3 && graph.edge_count() > 3 * n - 6)
            throw std::logic_error("generated graph exceeds 3n-6 edges");
        return graph;
    }

    auto from_list(int n, std::span<const std::array<int, 2>> edges) -> Graph
    {
        Graph graph(n);
        for (auto [x, y] : edges)
            graph.add_edge(x, y);
        return graph;
    }

    constexpr std::array<std::array<int, 2>, 6> tetrahedron{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    constexpr std::array<std::array<int, 2>, 12> cube{{{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 7}, {2, 3}, {2, 6}, {3, 5},
        {4, 5}, {4, 7}, {5, 6}, {6, 7}}};
    constexpr std::array<std::array<int, 2>, 12> octahedron{{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 5},
        {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}};
    constexpr std::array<std::array<int, 2>, 30> dodecahedron{{{0, 1}, {0, 10}, {0, 19}, {1, 2}, {1, 8}, {2, 3},
        {2, 6}, {3, 4}, {3, 19}, {4, 5}, {4, 17}, {5, 6}, {5, 15}, {6, 7}, {7, 8}, {7, 14}, {8, 9}, {9, 10}, {9, 13},
        {10, 11}, {11, 12}, {11, 18}, {12, 13}, {12, 16}, {13, 14}, {14, 15}, {15, 16}, {16, 17}, {17, 18}, {18, 19}}};
    constexpr std::array<std::array<int, 2>, 30> icosahedron{{{0, 1}, {0, 5}, {0, 7}, {0, 8}, {0, 11}, {1, 2}, {1, 5},
        {1, 6}, {1, 8}, {2, 3}, {2, 6}, {2, 8}, {2, 9}, {3, 4}, {3, 6}, {3, 9}, {3, 10}, {4, 5}, {4, 6}, {4, 10},
        {4, 11}, {5, 6}, {5, 11}, {7, 8}, {7, 9}, {7, 10}, {7, 11}, {8, 9}, {9, 10}, {10, 11}}};

    auto to_int(const std::string & text) -> int
    {
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw Error(ErrorKind::BadParams, "expected an integer, got '" + text + "'");
        return value;
    }

    void expect_params(std::span<const std::string> params, std::size_t count, std::string_view kind)
    {
        if (params.size() != count)
            throw Error(ErrorKind::BadParams,
                std::string{kind} + " takes " + std::to_string(count) + " parameter(s), got " + std::to_string(params.size()));
    }
}

auto grid_graph(int rows, int cols) -> Graph
{
    if (rows < 1 || cols < 1)
        throw Error(ErrorKind::BadParams, "grid needs positive dimensions");
    Graph graph(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int v = r * cols + c;
            if (c + 1 < cols)
                graph.add_edge(v, v + 1);
            if (r + 1 < rows)
                graph.add_edge(v, v + cols);
        }
    return checked(std::move(graph));
}

auto wheel_graph(int rim) -> Graph
{
    if (rim < 3)
        throw Error(ErrorKind::BadParams, "wheel needs a rim of at least 3 vertices");
    Graph graph(rim + 1);
    for (int i = 0; i < rim; ++i) {
        graph.add_edge(i, (i + 1) % rim);
        graph.add_edge(i, rim);
    }
    return checked(std::move(graph));
}

auto cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw Error(ErrorKind::BadParams, "cycle needs at least 3 vertices");
    Graph graph(n);
    for (int i = 0; i < n; ++i)
        graph.add_edge(i, (i + 1) % n);
    return checked(std::move(graph));
}

auto platonic_graph(Solid solid) -> Graph
{
    switch (solid) {
        case Solid::Tetrahedron: return checked(from_list(4, tetrahedron));
        case Solid::Cube: return checked(from_list(8, cube));
        case Solid::Octahedron: return checked(from_list(6, octahedron));
        case Solid::Dodecahedron: return checked(from_list(20, dodecahedron));
        case Solid::Icosahedron: return checked(from_list(12, icosahedron));
    }
    throw Error(ErrorKind::BadParams, "unknown solid");
}

auto parse_solid(std::string_view name) -> Solid
{
    if (name == "tetrahedron") return Solid::Tetrahedron;
    if (name == "cube") return Solid::Cube;
    if (name == "octahedron") return Solid::Octahedron;
    if (name == "dodecahedron") return Solid::Dodecahedron;
    if (name == "icosahedron") return Solid::Icosahedron;
    throw Error(ErrorKind::BadParams, "unknown platonic solid '" + std::string{name} + "'");
}

auto random_triangulation(int n, std::uint64_t seed) -> Graph
{
    if (n < 3)
        throw Error(ErrorKind::BadParams, "a triangulation needs at least 3 vertices");
    std::mt19937_64 rng(seed);
    Graph graph(n);
    graph.add_edge(0, 1);
    graph.add_edge(1, 2);
    graph.add_edge(0, 2);
    // The outer face of the initial triangle is a face too.
    std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 1, 2}};
    for (Vertex v = 3; v < n; ++v) {
        auto pick = static_cast<std::size_t>(rng() % faces.size());
        auto [a, b, c] = faces[pick];
        faces[pick] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({a, c, v});
        graph.add_edge(v, a);
        graph.add_edge(v, b);
        graph.add_edge(v, c);
    }
    return checked(std::move(graph));
}

auto gen_planar(std::string_view kind, std::span<const std::string> params, std::uint64_t seed) -> Graph
{
    if (kind == "grid") {
        expect_params(params, 2, kind);
        return grid_graph(to_int(params[0]), to_int(params[1]));
    }
    if (kind == "wheel") {
        expect_params(params, 1, kind);
        return wheel_graph(to_int(params[0]));
    }
    if (kind == "cycle") {
        expect_params(params, 1, kind);
        return cycle_graph(to_int(params[0]));
    }
    if (kind == "platonic") {
        expect_params(params, 1, kind);
        return platonic_graph(parse_solid(params[0]));
    }
    if (kind == "random_triangulation") {
        expect_params(params, 1, kind);
        return random_triangulation(to_int(params[0]), seed);
    }
    throw Error(ErrorKind::BadParams, "unknown generator '" + std::string{kind} + "'");
}

}
