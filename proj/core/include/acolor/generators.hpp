#pragma once

#include <acolor/graph.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace acolor {

enum class Solid { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

[[nodiscard]] auto grid_graph(int rows, int cols) -> Graph;
/// W_n: rim vertices 0..n-1 form a cycle, vertex n is the hub.
[[nodiscard]] auto wheel_graph(int rim) -> Graph;
[[nodiscard]] auto cycle_graph(int n) -> Graph;
[[nodiscard]] auto platonic_graph(Solid solid) -> Graph;
[[nodiscard]] auto parse_solid(std::string_view name) -> Solid;

/// Maximal planar graph: starts from a triangle and inserts each further
/// vertex into a uniformly chosen face, joining it to the face's corners.
/// Deterministic in (n, seed); always has 3n - 6 edges.
[[nodiscard]] auto random_triangulation(int n, std::uint64_t seed) -> Graph;

/// Dispatch used by the command line: kind is one of grid, wheel, cycle,
/// platonic, random_triangulation. Throws BadParams.
[[nodiscard]] auto gen_planar(std::string_view kind, std::span<const std::string> params, std::uint64_t seed) -> Graph;

}
