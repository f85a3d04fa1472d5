#pragma once

#include <acolor/graph.hpp>
#include <acolor/palette.hpp>

#include <optional>
#include <vector>

namespace acolor {

/// A maximal path whose edges alternate between two colors.
///
/// `vertices` is ordered so that the first edge has `first_color`. When the
/// traced vertex is an endpoint, it is vertices.front().
struct BichromaticPath {
    std::vector<Vertex> vertices;
    Color alpha = 0;
    Color beta = 0;
    Color first_color = 0;

    [[nodiscard]] auto edge_count() const noexcept -> std::size_t { return vertices.empty() ? 0 : vertices.size() - 1; }
    [[nodiscard]] auto last_color() const noexcept -> Color
    {
        return edge_count() % 2 == 1 ? first_color : (first_color == alpha ? beta : alpha);
    }
};

/// Witness that `beta` cannot go on edge from-to: an (alpha, beta) maximal path
/// leaving `from` on alpha and entering `to` on alpha.
struct CriticalPathWitness {
    Color alpha = 0;
    Color beta = 0;
    Vertex from = 0;
    Vertex to = 0;
    BichromaticPath path;
};

/// The unique maximal (alpha, beta) path through v, or nullopt when v has
/// neither color. A lone edge of one color is not bichromatic and also yields
/// nullopt. Throws BichromaticCycleDetected when v lies on an (alpha, beta)
/// cycle.
[[nodiscard]] auto trace_maximal(const PartialColoring & coloring, Vertex v, Color alpha, Color beta)
    -> std::optional<BichromaticPath>;

/// gamma differs from c(e) and appears on no edge adjacent to e.
[[nodiscard]] auto is_candidate(const PartialColoring & coloring, Edge e, Color gamma) -> bool;

[[nodiscard]] auto exists_critical(const PartialColoring & coloring, Vertex a, Vertex b, Color alpha, Color beta)
    -> std::optional<CriticalPathWitness>;

/// gamma is a candidate for e and putting it on e closes no bichromatic cycle.
/// e may already be colored, in which case this decides whether recoloring it
/// to gamma is safe.
[[nodiscard]] auto is_valid(const PartialColoring & coloring, Edge e, Color gamma) -> bool;

/// Swaps the colors of u-i and u-j. Throws ImproperExchange when the swap
/// would break properness. Acyclicity of the result is not checked.
[[nodiscard]] auto color_exchange(const PartialColoring & coloring, Vertex u, Vertex i, Vertex j) -> PartialColoring;

}
