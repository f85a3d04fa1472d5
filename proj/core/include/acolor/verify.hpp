#pragma once

#include <acolor/graph.hpp>
#include <acolor/palette.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace acolor {

enum class FailureKind {
    None,
    ForeignEdge,
    ColorOutOfRange,
    Improper,
    Incomplete,
    BichromaticCycle,
};

[[nodiscard]] auto to_string(FailureKind kind) -> std::string_view;

struct ColoredEdge {
    Vertex u = 0;
    Vertex v = 0;
    Color color = 0;
};

struct Verdict {
    bool ok = true;
    FailureKind failure_kind = FailureKind::None;
    std::optional<std::pair<Color, Color>> color_pair;
    /// For BichromaticCycle: the cycle, first vertex not repeated. For other
    /// failures: the endpoints involved, if any.
    std::vector<Vertex> cycle_vertices;
    std::string detail;
};

/// Checks a list of colored edges against `graph` without going through
/// PartialColoring, so it stays independent of everything it is used to
/// check. Order of checks: foreign edges, palette range, properness,
/// totality, then bichromatic cycles over every color pair that meets at
/// some vertex.
[[nodiscard]] auto verify_acyclic(const Graph & graph, std::span<const ColoredEdge> edges, bool require_total,
    std::optional<int> palette = std::nullopt) -> Verdict;

[[nodiscard]] auto verify_acyclic(const Graph & graph, const PartialColoring & coloring, bool require_total)
    -> Verdict;

}
