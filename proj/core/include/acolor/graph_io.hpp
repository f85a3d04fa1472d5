#pragma once

#include <acolor/graph.hpp>
#include <acolor/palette.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace acolor {

enum class GraphFormat { EdgeList, Graph6 };

/// One "u v" pair per line, '#' starts a comment. Vertex count is one more
/// than the largest id seen.
[[nodiscard]] auto parse_edgelist(std::string_view text) -> Graph;
[[nodiscard]] auto emit_edgelist(const Graph & graph) -> std::string;

/// Standard graph6 with the optional ">>graph6<<" header; only the first
/// graph of the input is read.
[[nodiscard]] auto parse_graph6(std::string_view text) -> Graph;
[[nodiscard]] auto emit_graph6(const Graph & graph) -> std::string;

[[nodiscard]] auto detect_format(std::string_view text) -> GraphFormat;
[[nodiscard]] auto parse_graph(std::string_view text, std::optional<GraphFormat> format = std::nullopt) -> Graph;

/// Picks the format from the extension (.g6, .graph6) and falls back to
/// sniffing the content.
[[nodiscard]] auto load_graph(const std::filesystem::path & path) -> Graph;
[[nodiscard]] auto read_file(const std::filesystem::path & path) -> std::string;

/// Graphviz source. Colored edges carry their color as label and as a
/// set312 scheme color; uncolored edges are dashed.
[[nodiscard]] auto emit_dot(const Graph & graph, const PartialColoring * coloring = nullptr) -> std::string;

}
