#pragma once

#include <acolor/graph.hpp>
#include <acolor/palette.hpp>

#include <cstdint>
#include <optional>

namespace acolor {

struct SearchBudget {
    int max_colors = 12;
    std::uint64_t node_limit = 50'000'000;
    double time_limit_seconds = 60.0;
};

struct OracleOptions {
    /// A new color may only be the smallest unused one.
    bool symmetry_breaking = true;
};

/// Outcome of an exact search. `index` is empty when the budget ran out
/// (nodes, time, or no coloring within max_colors); the search never guesses.
struct ExactIndex {
    std::optional<int> index;
    std::uint64_t nodes = 0;
};

/// Smallest k admitting an acyclic edge coloring with k colors.
///
/// Backtracks over edges in descending endpoint-degree order with
/// incremental properness and bichromatic-cycle pruning. Intended for graphs
/// with at most ~20 edges.
[[nodiscard]] auto exact_acyclic_index(const Graph & graph, const SearchBudget & budget,
    const OracleOptions & options = {}) -> ExactIndex;

/// Colors e on top of `coloring` (valid on G - e, host G) with colors 1..palette.
///
/// Tries, in order: every color for e; every single recoloring of an edge at
/// e's endpoints combined with every color for e; full backtracking over all
/// edges at e's endpoints. nullopt only if no extension exists within that
/// neighborhood.
[[nodiscard]] auto exhaustive_extend(const Graph & graph, Edge e, const PartialColoring & coloring, int palette)
    -> std::optional<PartialColoring>;

}
