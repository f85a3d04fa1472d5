#pragma once

#include <acolor/configuration.hpp>
#include <acolor/graph.hpp>
#include <acolor/palette.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace acolor {

/// One recorded step of an extension.
struct Move {
    enum class Kind { Assign, Recolor, Exchange };

    Kind kind = Kind::Assign;
    Edge edge;
    /// New color for Assign / Recolor; unused for Exchange.
    Color color = 0;
    /// Second edge of an Exchange; it shares exactly one endpoint with `edge`.
    Edge partner;
    /// Which extension rule produced the move.
    std::string label;

    friend auto operator==(const Move &, const Move &) -> bool = default;
};

struct MoveTrace {
    std::vector<Move> moves;

    friend auto operator==(const MoveTrace &, const MoveTrace &) -> bool = default;
};

/// Applies `trace` to `input`; throws if a move is improper.
[[nodiscard]] auto replay(const PartialColoring & input, const MoveTrace & trace) -> PartialColoring;

using ExtensionBranch = std::variant<Configuration, A1Witness>;

/// A valid coloring of G - e that must be extended to G.
///
/// coloring.host() is G itself; `edge` is its only uncolored edge. For a
/// Configuration branch, edge = v v1 with v = configuration.vertex and
/// v1 = configuration.neighbors.front(); for an A1Witness branch,
/// edge = center relay.
struct ExtensionProblem {
    PartialColoring coloring;
    Edge edge;
    /// Maximum degree of the original input; fixes the palette budget.
    int max_degree = 0;
    ExtensionBranch branch;

    [[nodiscard]] auto graph() const -> const Graph & { return coloring.host(); }
    [[nodiscard]] auto palette() const -> int { return coloring.palette(); }
};

struct ExtensionResult {
    PartialColoring coloring;
    MoveTrace trace;
    /// Invalid candidates skipped by the sweep that finally colored the edge.
    int rejected_candidates = 0;
    /// Runtime checks of counting bounds that did not hold.
    std::vector<std::string> anomalies;
};

struct EngineOptions {
    /// Re-verify properness and acyclicity with the independent verifier
    /// after every move; a failure throws std::logic_error.
    bool verify_each_move = false;
};

/// Smallest valid candidate for e under `coloring`.
[[nodiscard]] auto smallest_valid_color(const PartialColoring & coloring, Edge e) -> std::optional<Color>;

/// Smallest valid candidate for the problem's edge.
[[nodiscard]] auto try_candidates(const ExtensionProblem & problem) -> std::optional<Color>;

/// Colors the problem's edge, recoloring around it when no candidate is valid.
/// Throws EngineExhausted when every scripted move fails.
[[nodiscard]] auto extend(const ExtensionProblem & problem, const EngineOptions & options = {}) -> ExtensionResult;

struct Reduction {
    ExtensionProblem problem;
    MoveTrace trace;
    /// The edge itself got colored (a multiplicity-zero candidate was valid).
    bool resolved = false;
};

/// For |F_v & F_v1| in {3, 4}: recolors one edge at v so that the
/// intersection shrinks by one. First tries every shared-color edge at v with
/// every color outside F_v + F_v1; failing that, picks a color alpha of
/// multiplicity at most one in S_v minus (F_v + F_v1) and moves a shared edge
/// other than alpha's owner onto alpha. Throws EngineExhausted.
[[nodiscard]] auto reduce_intersection(const ExtensionProblem & problem, const EngineOptions & options = {})
    -> Reduction;

/// |F_v & F_v1| = 2. Throws EngineExhausted.
[[nodiscard]] auto resolve_case1(const ExtensionProblem & problem, const EngineOptions & options = {})
    -> ExtensionResult;

/// Degree-2 branch: edge center-relay where relay has degree 2.
[[nodiscard]] auto extend_a1(const ExtensionProblem & problem, const EngineOptions & options = {})
    -> ExtensionResult;

}
