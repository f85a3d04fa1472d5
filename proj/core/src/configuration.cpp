#include <acolor/configuration.hpp>
#include <acolor/error.hpp>

#include <algorithm>
#include <array>

namespace acolor {

auto to_string(ConfigKind kind) -> std::string_view
{
    switch (kind) {
        case ConfigKind::A1: return "A1";
        case ConfigKind::A2: return "A2";
        case ConfigKind::A3: return "A3";
        case ConfigKind::A4: return "A4";
    }
    return "?";
}

namespace {
    auto sorted_neighbors(const Graph & graph, Vertex v) -> std::vector<Vertex>
    {
        auto nbrs = graph.neighbors(v);
        std::vector<Vertex> result(nbrs.begin(), nbrs.end());
        std::ranges::stable_sort(result, {}, [&](Vertex w) { return graph.degree(w); });
        return result;
    }

    // Degree caps for v1, v2, v3 per kind; 0 marks "no cap".
    constexpr auto caps(ConfigKind kind) -> std::array<int, 3>
    {
        switch (kind) {
            case ConfigKind::A1: return {0, 0, 0};
            case ConfigKind::A2: return {11, 0, 0};
            case ConfigKind::A3: return {7, 11, 0};
            case ConfigKind::A4: return {6, 7, 11};
        }
        return {0, 0, 0};
    }

    auto matches(const Graph & graph, std::span<const Vertex> sorted, ConfigKind kind) -> bool
    {
        if (static_cast<int>(sorted.size()) != static_cast<int>(kind) + 1)
            return false;
        auto bounds = caps(kind);
        for (std::size_t i = 0; i < bounds.size(); ++i)
            if (bounds[i] != 0 && graph.degree(sorted[i]) > bounds[i])
                return false;
        return true;
    }

    constexpr int max_core_degree = 11;
}

auto realizes(const Graph & graph, Vertex vertex, ConfigKind kind) -> bool
{
    return matches(graph, sorted_neighbors(graph, vertex), kind);
}

auto find_configuration(const Graph & graph, ConfigKind min_kind) -> std::optional<Configuration>
{
    for (int k = static_cast<int>(min_kind); k <= static_cast<int>(ConfigKind::A4); ++k) {
        auto kind = static_cast<ConfigKind>(k);
        for (Vertex v = 0; v < graph.vertex_count(); ++v) {
            if (graph.degree(v) != k + 1)
                continue;
            auto nbrs = sorted_neighbors(graph, v);
            if (matches(graph, nbrs, kind))
                return Configuration{kind, v, std::move(nbrs)};
        }
    }
    return std::nullopt;
}

auto find_a1_reduction(const Graph & graph) -> A1Witness
{
    auto [h, removed] = strip_degree2(graph);
    auto lost = [&](Vertex x) { return graph.degree(x) == 2 ? false : h.degree(x) < graph.degree(x); };

    bool any_lost = false;
    for (Vertex x = 0; x < graph.vertex_count(); ++x)
        any_lost = any_lost || lost(x);
    if (! any_lost)
        throw Error(ErrorKind::CycleComponent, "every degree-2 vertex lies on a cycle component");

    auto pick = [&](std::span<const Vertex> pool) -> std::optional<Vertex> {
        std::optional<Vertex> best;
        for (Vertex x : pool)
            if (lost(x) && (! best || h.degree(x) < h.degree(*best) || (h.degree(x) == h.degree(*best) && x < *best)))
                best = x;
        if (best && h.degree(*best) <= max_core_degree)
            return best;
        return std::nullopt;
    };

    std::optional<Vertex> center;
    {
        std::vector<Vertex> shallow;
        for (Vertex x = 0; x < h.vertex_count(); ++x)
            if (h.degree(x) <= 1)
                shallow.push_back(x);
        center = pick(shallow);
    }
    for (int k = static_cast<int>(ConfigKind::A1); ! center && k <= static_cast<int>(ConfigKind::A4); ++k)
        for (Vertex v = 0; ! center && v < h.vertex_count(); ++v) {
            if (h.degree(v) != k + 1)
                continue;
            auto nbrs = sorted_neighbors(h, v);
            if (! matches(h, nbrs, static_cast<ConfigKind>(k)))
                continue;
            nbrs.push_back(v);
            center = pick(nbrs);
        }
    if (! center)
        throw Error(ErrorKind::NoWitness, "no configuration vertex of the degree-2-stripped graph lost neighbors");

    A1Witness witness;
    witness.center = *center;
    for (Vertex w : graph.neighbors(*center))
        (graph.degree(w) == 2 ? witness.relay_neighbors : witness.core_neighbors).push_back(w);
    if (witness.relay_neighbors.empty() || witness.core_neighbors.size() > max_core_degree)
        throw Error(ErrorKind::NoWitness, "witness invariants violated at vertex " + std::to_string(*center));
    witness.relay = witness.relay_neighbors.front();
    auto relay_nbrs = graph.neighbors(witness.relay);
    witness.far = relay_nbrs[0] == *center ? relay_nbrs[1] : relay_nbrs[0];
    return witness;
}

}
