#pragma once

#include <acolor/configuration.hpp>
#include <acolor/extend.hpp>
#include <acolor/graph.hpp>
#include <acolor/palette.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace acolor {

/// Edge with an endpoint of degree 1; any color free at the other endpoint works.
struct PendantBranch {
    friend auto operator==(const PendantBranch &, const PendantBranch &) -> bool = default;
};

/// Edge of a component that is a plain cycle. Position i of a cycle of length
/// L gets color 1 or 2 alternately, and the closing edge (i = L - 1) gets 3.
struct CycleBranch {
    int position = 0;
    int length = 0;

    friend auto operator==(const CycleBranch &, const CycleBranch &) -> bool = default;
};

using StepBranch = std::variant<PendantBranch, CycleBranch, Configuration, A1Witness>;

struct ReductionStep {
    Edge edge;
    StepBranch branch;
};

[[nodiscard]] auto branch_name(const StepBranch & branch) -> std::string;

/// Deletes edges one at a time until the graph is empty, recomputing the
/// rule on the current graph each time: pendant edge, then whole cycle
/// components, then an A2-A4 configuration (delete v v1), then the degree-2
/// witness (delete u u'). Throws NotReducible when no rule applies.
[[nodiscard]] auto plan_reduction(const Graph & graph) -> std::vector<ReductionStep>;

struct ColorOptions {
    /// Palette size; defaults to max(Delta + 12, 13).
    std::optional<int> palette;
    /// Re-verify after every replay step and every engine move.
    bool debug_verify = false;
    bool keep_traces = false;
};

struct StepTrace {
    std::size_t step = 0;
    Edge edge;
    std::string branch;
    MoveTrace trace;
    bool fallback = false;
};

struct ColoringResult {
    PartialColoring coloring;
    int palette = 0;
    int colors_used = 0;
    int fallback_count = 0;
    std::vector<StepTrace> traces;
    std::vector<std::string> anomalies;
    /// Largest number of candidates rejected by a single degree-2 branch sweep.
    int max_a1_rejections = 0;
};

[[nodiscard]] auto default_palette(const Graph & graph) -> int;

/// Acyclic edge coloring with at most `palette` colors. Throws NotReducible,
/// or PaletteExhausted when a step cannot be colored (only possible with a
/// palette below Delta + 12).
[[nodiscard]] auto color_graph(const Graph & graph, const ColorOptions & options = {}) -> ColoringResult;

}
