#include <acolor/error.hpp>
#include <acolor/oracle.hpp>
#include <acolor/paths.hpp>

#include <algorithm>
#include <chrono>
#include <memory>
#include <vector>

namespace acolor {

namespace {
    class ExactSearch {
    public:
        ExactSearch(const Graph & graph, const SearchBudget & budget, const OracleOptions & options) :
            graph_(graph),
            budget_(budget),
            options_(options),
            edges_(graph.edges()),
            started_(std::chrono::steady_clock::now())
        {
            std::ranges::stable_sort(edges_, std::greater<>{},
                [&](Edge e) { return graph.degree(e.a) + graph.degree(e.b); });
        }

        [[nodiscard]] auto nodes() const noexcept -> std::uint64_t { return nodes_; }
        [[nodiscard]] auto exhausted() const noexcept -> bool { return out_of_budget_; }

        /// true: colorable with k colors; false: not colorable or out of budget.
        auto colorable(int k) -> bool
        {
            colors_ = k;
            stride_ = static_cast<std::size_t>(k) + 1;
            at_.assign(static_cast<std::size_t>(graph_.vertex_count()) * stride_, -1);
            return descend(0, 0);
        }

    private:
        auto at(Vertex v, Color c) -> Vertex & { return at_[static_cast<std::size_t>(v) * stride_ + c]; }

        auto closes_cycle(Vertex a, Vertex b, Color gamma) -> bool
        {
            for (Color alpha = 1; alpha <= colors_; ++alpha) {
                if (alpha == gamma || at(a, alpha) < 0 || at(b, alpha) < 0)
                    continue;
                Vertex x = a;
                Color want = alpha;
                for (std::size_t steps = 0; steps <= edges_.size(); ++steps) {
                    Vertex y = at(x, want);
                    if (y < 0)
                        break;
                    if (y == b && want == alpha)
                        return true;
                    x = y;
                    want = want == alpha ? gamma : alpha;
                }
            }
            return false;
        }

        auto over_budget() -> bool
        {
            if (nodes_ >= budget_.node_limit)
                out_of_budget_ = true;
            else if ((nodes_ & 0xfff) == 0) {
                std::chrono::duration<double> spent = std::chrono::steady_clock::now() - started_;
                if (spent.count() > budget_.time_limit_seconds)
                    out_of_budget_ = true;
            }
            return out_of_budget_;
        }

        auto descend(std::size_t depth, int used) -> bool
        {
            if (depth == edges_.size())
                return true;
            ++nodes_;
            if (over_budget())
                return false;
            auto [a, b] = edges_[depth];
            int limit = options_.symmetry_breaking ? std::min(colors_, used + 1) : colors_;
            for (Color gamma = 1; gamma <= limit; ++gamma) {
                if (at(a, gamma) >= 0 || at(b, gamma) >= 0 || closes_cycle(a, b, gamma))
                    continue;
                at(a, gamma) = b;
                at(b, gamma) = a;
                if (descend(depth + 1, std::max(used, gamma)))
                    return true;
                at(a, gamma) = -1;
                at(b, gamma) = -1;
                if (out_of_budget_)
                    return false;
            }
            return false;
        }

        const Graph & graph_;
        const SearchBudget & budget_;
        const OracleOptions & options_;
        std::vector<Edge> edges_;
        std::chrono::steady_clock::time_point started_;
        std::vector<Vertex> at_;
        std::size_t stride_ = 1;
        int colors_ = 0;
        std::uint64_t nodes_ = 0;
        bool out_of_budget_ = false;
    };

    // With Delta colors a Delta-regular component sees every color at every
    // vertex, so any two color classes form a 2-regular subgraph there.
    auto lower_bound(const Graph & graph) -> int
    {
        int delta = graph.max_degree();
        if (delta < 2)
            return delta;
        for (const auto & component : edge_components(graph))
            if (std::ranges::all_of(component, [&](Vertex x) { return graph.degree(x) == delta; }))
                return delta + 1;
        return delta;
    }
}

auto exact_acyclic_index(const Graph & graph, const SearchBudget & budget, const OracleOptions & options)
    -> ExactIndex
{
    if (budget.max_colors < 0 || budget.time_limit_seconds <= 0)
        throw Error(ErrorKind::BadParams, "search budget must be positive");
    if (graph.edge_count() == 0)
        return ExactIndex{0, 0};

    ExactSearch search(graph, budget, options);
    for (int k = lower_bound(graph); k <= budget.max_colors; ++k) {
        if (search.colorable(k))
            return ExactIndex{k, search.nodes()};
        if (search.exhausted())
            break;
    }
    return ExactIndex{std::nullopt, search.nodes()};
}

namespace {
    auto backtrack(PartialColoring & coloring, const std::vector<Edge> & order, std::size_t depth) -> bool
    {
        if (depth == order.size())
            return true;
        Edge f = order[depth];
        for (Color gamma = 1; gamma <= coloring.palette(); ++gamma) {
            if (! is_valid(coloring, f, gamma))
                continue;
            coloring.assign(f, gamma);
            if (backtrack(coloring, order, depth + 1))
                return true;
            coloring.unassign(f);
        }
        return false;
    }
}

auto exhaustive_extend(const Graph & graph, Edge e, const PartialColoring & coloring, int palette)
    -> std::optional<PartialColoring>
{
    if (! graph.has_edge(e))
        throw Error(ErrorKind::EdgeAbsent, "exhaustive_extend edge is not in the graph");
    PartialColoring base(std::make_shared<const Graph>(graph), palette);
    for (const auto & [f, c] : coloring.assigned_edges())
        if (f != e)
            base.assign(f, c);

    for (Color gamma = 1; gamma <= palette; ++gamma)
        if (is_valid(base, e, gamma)) {
            base.assign(e, gamma);
            return base;
        }

    std::vector<Edge> incident;
    for (Vertex end : {e.a, e.b})
        for (Vertex w : graph.neighbors(end)) {
            auto f = Edge::of(end, w);
            if (f != e && base.is_assigned(f))
                incident.push_back(f);
        }

    for (Edge f : incident)
        for (Color delta = 1; delta <= palette; ++delta) {
            if (! is_valid(base, f, delta))
                continue;
            PartialColoring trial = base;
            trial.assign(f, delta);
            for (Color gamma = 1; gamma <= palette; ++gamma)
                if (is_valid(trial, e, gamma)) {
                    trial.assign(e, gamma);
                    return trial;
                }
        }

    PartialColoring trial = base;
    for (Edge f : incident)
        trial.unassign(f);
    std::vector<Edge> order{e};
    order.insert(order.end(), incident.begin(), incident.end());
    if (backtrack(trial, order, 0))
        return trial;
    return std::nullopt;
}

}
