#include <acolor/error.hpp>
#include <acolor/paths.hpp>

#include <algorithm>
#include <string>

namespace acolor {

namespace {
    // Follows alternating colors from `start`, leaving on `first`. Returns the
    // visited vertices after start; sets `closed` if the walk returns to start.
    auto walk(const PartialColoring & coloring, Vertex start, Color first, Color second, bool & closed)
        -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        closed = false;
        Vertex at = start;
        Color want = first;
        const auto limit = coloring.host().edge_count() + 1;
        while (out.size() <= limit) {
            auto next = coloring.neighbor_with(at, want);
            if (! next)
                break;
            if (*next == start) {
                closed = true;
                break;
            }
            out.push_back(*next);
            at = *next;
            want = want == first ? second : first;
        }
        return out;
    }
}

auto trace_maximal(const PartialColoring & coloring, Vertex v, Color alpha, Color beta)
    -> std::optional<BichromaticPath>
{
    if (alpha == beta)
        throw Error(ErrorKind::BadParams, "trace_maximal needs two distinct colors");

    auto has_alpha = coloring.neighbor_with(v, alpha).has_value();
    auto has_beta = coloring.neighbor_with(v, beta).has_value();
    if (! has_alpha && ! has_beta)
        return std::nullopt;

    bool closed = false;
    auto alpha_side = has_alpha ? walk(coloring, v, alpha, beta, closed) : std::vector<Vertex>{};
    if (closed)
        throw Error(ErrorKind::BichromaticCycleDetected,
            "(" + std::to_string(alpha) + "," + std::to_string(beta) + ") cycle through " + std::to_string(v));
    auto beta_side = has_beta ? walk(coloring, v, beta, alpha, closed) : std::vector<Vertex>{};

    BichromaticPath path{{}, alpha, beta, 0};
    if (! has_alpha) {
        path.vertices.push_back(v);
        path.vertices.insert(path.vertices.end(), beta_side.begin(), beta_side.end());
        path.first_color = beta;
    }
    else {
        // Far end of the alpha side first, so that a traced endpoint comes first.
        path.vertices.assign(alpha_side.rbegin(), alpha_side.rend());
        path.vertices.push_back(v);
        path.vertices.insert(path.vertices.end(), beta_side.begin(), beta_side.end());
        if (beta_side.empty()) {
            std::ranges::reverse(path.vertices);
            path.first_color = alpha;
        }
        else {
            // The edge entering v from the alpha side is alpha, so the first
            // edge's color depends on the parity of the alpha side length.
            path.first_color = alpha_side.size() % 2 == 1 ? alpha : beta;
        }
    }
    if (path.edge_count() < 2)
        return std::nullopt;
    return path;
}

auto is_candidate(const PartialColoring & coloring, Edge e, Color gamma) -> bool
{
    if (gamma < 1 || gamma > coloring.palette())
        return false;
    auto own = coloring.color(e);
    if (own == gamma)
        return false;
    for (Vertex end : {e.a, e.b}) {
        auto w = coloring.neighbor_with(end, gamma);
        if (w && *w != e.other(end))
            return false;
    }
    return true;
}

auto exists_critical(const PartialColoring & coloring, Vertex a, Vertex b, Color alpha, Color beta)
    -> std::optional<CriticalPathWitness>
{
    if (alpha == beta)
        return std::nullopt;
    auto path = trace_maximal(coloring, a, alpha, beta);
    if (! path || path->vertices.front() != a || path->first_color != alpha)
        return std::nullopt;
    if (path->vertices.back() != b || path->last_color() != alpha || path->edge_count() < 3)
        return std::nullopt;
    return CriticalPathWitness{alpha, beta, a, b, std::move(*path)};
}

auto is_valid(const PartialColoring & coloring, Edge e, Color gamma) -> bool
{
    if (! is_candidate(coloring, e, gamma))
        return false;
    auto shared = seen_from(coloring, e.a, e.b).intersected(seen_from(coloring, e.b, e.a));
    for (Color alpha : shared)
        if (exists_critical(coloring, e.a, e.b, alpha, gamma))
            return false;
    return true;
}

auto color_exchange(const PartialColoring & coloring, Vertex u, Vertex i, Vertex j) -> PartialColoring
{
    auto ci = coloring.color(u, i);
    auto cj = coloring.color(u, j);
    if (! ci || ! cj)
        throw Error(ErrorKind::ImproperExchange, "both exchanged edges must be colored");
    if (seen_from(coloring, u, j).contains(*ci) || seen_from(coloring, u, i).contains(*cj))
        throw Error(ErrorKind::ImproperExchange,
            "exchange at " + std::to_string(u) + " of edges to " + std::to_string(i) + " and " + std::to_string(j));
    PartialColoring result = coloring;
    result.unassign(Edge::of(u, i));
    result.assign(Edge::of(u, j), *ci);
    result.assign(Edge::of(u, i), *cj);
    return result;
}

}
