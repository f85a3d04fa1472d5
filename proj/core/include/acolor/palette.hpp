#pragma once

#include <acolor/graph.hpp>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace acolor {

/// Colors are 1-based: a palette of size K is {1, ..., K}.
using Color = int;

/// Small ordered set of colors. Sizes here are bounded by the maximum degree,
/// so a sorted vector beats any node-based container.
class ColorSet {
public:
    ColorSet() = default;
    ColorSet(std::initializer_list<Color> colors);

    [[nodiscard]] auto contains(Color c) const -> bool;
    [[nodiscard]] auto size() const noexcept -> std::size_t { return colors_.size(); }
    [[nodiscard]] auto empty() const noexcept -> bool { return colors_.empty(); }
    [[nodiscard]] auto begin() const noexcept { return colors_.begin(); }
    [[nodiscard]] auto end() const noexcept { return colors_.end(); }
    [[nodiscard]] auto values() const noexcept -> std::span<const Color> { return colors_; }

    void insert(Color c);
    void erase(Color c);

    [[nodiscard]] auto united(const ColorSet & other) const -> ColorSet;
    [[nodiscard]] auto intersected(const ColorSet & other) const -> ColorSet;
    [[nodiscard]] auto minus(const ColorSet & other) const -> ColorSet;

    /// {1..palette} minus this set.
    [[nodiscard]] auto complement(int palette) const -> ColorSet;

    friend auto operator==(const ColorSet &, const ColorSet &) -> bool = default;

private:
    std::vector<Color> colors_;
};

/// Multiset of colors with explicit multiplicities. Only positive
/// multiplicities are stored.
class ColorMultiset {
public:
    ColorMultiset() = default;

    void add(Color c, int times = 1);
    void add_all(const ColorSet & colors);

    [[nodiscard]] auto multiplicity(Color c) const -> int;
    /// Sum of multiplicities.
    [[nodiscard]] auto cardinality() const noexcept -> int { return cardinality_; }
    [[nodiscard]] auto support() const -> ColorSet;
    [[nodiscard]] auto entries() const noexcept -> const std::map<Color, int> & { return mult_; }

    /// Multiplicities add.
    [[nodiscard]] auto join(const ColorMultiset & other) const -> ColorMultiset;
    /// Drops every color present in `colors`; survivors keep their multiplicity.
    [[nodiscard]] auto without(const ColorSet & colors) const -> ColorMultiset;

    friend auto operator==(const ColorMultiset &, const ColorMultiset &) -> bool = default;

private:
    std::map<Color, int> mult_;
    int cardinality_ = 0;
};

[[nodiscard]] auto multiset_diff(const ColorMultiset & s, const ColorSet & t) -> ColorMultiset;

/// Partial proper edge coloring of a host graph with palette {1..K}.
///
/// Properness is a class invariant: assign() rejects any color already present
/// on an adjacent edge, so no instance can ever be improper. The host is shared
/// between copies, which keeps cloning at O(n + m) slot copies.
class PartialColoring {
public:
    PartialColoring(std::shared_ptr<const Graph> host, int palette);
    PartialColoring(const Graph & host, int palette);

    [[nodiscard]] auto host() const noexcept -> const Graph & { return *host_; }
    [[nodiscard]] auto shared_host() const noexcept -> const std::shared_ptr<const Graph> & { return host_; }
    [[nodiscard]] auto palette() const noexcept -> int { return palette_; }

    /// Throws EdgeAbsent when x-y is not a host edge.
    [[nodiscard]] auto color(Vertex x, Vertex y) const -> std::optional<Color>;
    [[nodiscard]] auto color(Edge e) const -> std::optional<Color> { return color(e.a, e.b); }
    [[nodiscard]] auto is_assigned(Edge e) const -> bool { return color(e).has_value(); }

    /// The neighbor w of x with c(x, w) == c, if any.
    [[nodiscard]] auto neighbor_with(Vertex x, Color c) const -> std::optional<Vertex>;
    [[nodiscard]] auto assigned_degree(Vertex x) const -> int;
    [[nodiscard]] auto assigned_count() const noexcept -> std::size_t { return assigned_; }

    /// Assigns or recolors e. Throws EdgeAbsent, ColorOutOfRange, or
    /// ImproperAssignment if an adjacent edge already carries c.
    void assign(Edge e, Color c);
    void unassign(Edge e);

    /// Assigned edges in ascending canonical order.
    [[nodiscard]] auto assigned_edges() const -> std::vector<std::pair<Edge, Color>>;
    [[nodiscard]] auto distinct_colors() const -> int;

    /// Same assignment over another host that contains every assigned edge.
    [[nodiscard]] auto with_host(std::shared_ptr<const Graph> host) const -> PartialColoring;

    /// Full scan of the properness invariant; used by debug checks.
    [[nodiscard]] auto is_proper() const -> bool;

    friend auto operator==(const PartialColoring & lhs, const PartialColoring & rhs) -> bool;

private:
    std::shared_ptr<const Graph> host_;
    int palette_;
    // slots_[x][i] colors the edge x-neighbors(x)[i].
    std::vector<std::vector<std::optional<Color>>> slots_;
    std::size_t assigned_ = 0;
};

/// F_u: colors of assigned edges at u.
[[nodiscard]] auto colors_at(const PartialColoring & coloring, Vertex u) -> ColorSet;

/// S_ab = F_b minus c(a, b). Asymmetric in a and b. Throws EdgeAbsent.
[[nodiscard]] auto seen_from(const PartialColoring & coloring, Vertex a, Vertex b) -> ColorSet;

/// Join of S_{v,w} over host neighbors w of v not in `exclude`.
[[nodiscard]] auto neighbor_multiset(const PartialColoring & coloring, Vertex v, std::span<const Vertex> exclude)
    -> ColorMultiset;

}
