#pragma once

#include <acolor/driver.hpp>
#include <acolor/extend.hpp>
#include <acolor/palette.hpp>
#include <acolor/verify.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace acolor {

/// Raw form of a coloring file, before it is checked against a graph.
struct ColoringDocument {
    int palette = 0;
    /// color 0 marks an uncolored edge.
    std::vector<ColoredEdge> edges;
};

/// {"palette": K, "edges": [{"u": .., "v": .., "color": ..}, ...]} listing
/// every host edge in sorted order, one edge per line. Stable byte for byte.
[[nodiscard]] auto emit_coloring(const PartialColoring & coloring) -> std::string;

[[nodiscard]] auto parse_coloring_document(std::string_view text) -> ColoringDocument;

/// Builds a PartialColoring on `host`. Throws EdgeAbsent, ColorOutOfRange or
/// ImproperAssignment when the document does not fit the graph.
[[nodiscard]] auto parse_coloring(std::string_view text, const Graph & host) -> PartialColoring;

/// Colored edges only (color 0 entries dropped), for feeding the verifier.
[[nodiscard]] auto colored_edges(const ColoringDocument & doc) -> std::vector<ColoredEdge>;

[[nodiscard]] auto verdict_to_json(const Verdict & verdict) -> std::string;
[[nodiscard]] auto trace_to_json(const MoveTrace & trace) -> std::string;
[[nodiscard]] auto traces_to_json(const std::vector<StepTrace> & traces) -> std::string;

}
