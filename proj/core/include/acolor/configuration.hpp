#pragma once

#include <acolor/graph.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace acolor {

/// Low-degree neighborhood patterns; every simple planar graph with minimum
/// degree at least 2 contains one of them.
///
///   A1: d(v) = 2
///   A2: d(v) = 3, d(v1) <= 11
///   A3: d(v) = 4, d(v1) <= 7, d(v2) <= 11
///   A4: d(v) = 5, d(v1) <= 6, d(v2) <= 7, d(v3) <= 11
///
/// with v1, v2, ... the neighbors of v in ascending degree order.
enum class ConfigKind { A1 = 1, A2 = 2, A3 = 3, A4 = 4 };

[[nodiscard]] auto to_string(ConfigKind kind) -> std::string_view;

struct Configuration {
    ConfigKind kind = ConfigKind::A1;
    Vertex vertex = 0;
    /// Sorted by (degree, id) ascending; neighbors.front() is v1.
    std::vector<Vertex> neighbors;
};

/// True when `vertex` with its degree-sorted neighborhood matches `kind`.
[[nodiscard]] auto realizes(const Graph & graph, Vertex vertex, ConfigKind kind) -> bool;

/// Scans kinds from `min_kind` up to A4 and, within a kind, vertices in
/// ascending order. nullopt means no vertex qualifies, which on a graph with
/// minimum degree 2 means the graph is not planar.
[[nodiscard]] auto find_configuration(const Graph & graph, ConfigKind min_kind = ConfigKind::A1)
    -> std::optional<Configuration>;

/// Reduction witness for graphs where only A1 vertices remain.
///
/// `center` (u) has at least one degree-2 neighbor and at most 11 neighbors of
/// any other degree. `relay` (u') is a degree-2 neighbor of u and `far` (u'')
/// is the other neighbor of u'. The edge to delete is u-u'.
struct A1Witness {
    Vertex center = 0;
    Vertex relay = 0;
    Vertex far = 0;
    /// N'(u): neighbors of u with degree 2 in G.
    std::vector<Vertex> relay_neighbors;
    /// N''(u): the remaining neighbors, i.e. N_H(u) after stripping.
    std::vector<Vertex> core_neighbors;
};

/// Strips every degree-2 vertex once, finds a configuration vertex of the
/// remainder H, and picks u as the lowest-H-degree vertex of that
/// configuration that lost neighbors. H-vertices of degree <= 1 that lost
/// neighbors qualify directly.
///
/// Throws CycleComponent when no surviving vertex touches a degree-2 vertex
/// (every degree-2 vertex sits on a pure cycle component), NoWitness when no
/// qualifying u with d_H(u) <= 11 exists.
[[nodiscard]] auto find_a1_reduction(const Graph & graph) -> A1Witness;

}
