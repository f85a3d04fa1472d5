#include <acolor/driver.hpp>
#include <acolor/error.hpp>
#include <acolor/oracle.hpp>
#include <acolor/paths.hpp>
#include <acolor/verify.hpp>

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace acolor {

auto branch_name(const StepBranch & branch) -> std::string
{
    struct Visitor {
        auto operator()(const PendantBranch &) const -> std::string { return "pendant"; }
        auto operator()(const CycleBranch &) const -> std::string { return "cycle"; }
        auto operator()(const Configuration & c) const -> std::string { return std::string{to_string(c.kind)}; }
        auto operator()(const A1Witness &) const -> std::string { return "A1-reduction"; }
    };
    return std::visit(Visitor{}, branch);
}

namespace {
    auto find_pendant(const Graph & graph) -> std::optional<Edge>
    {
        for (Vertex v = 0; v < graph.vertex_count(); ++v)
            if (graph.degree(v) == 1)
                return Edge::of(v, graph.neighbors(v)[0]);
        return std::nullopt;
    }

    // Vertices of a component whose every vertex has degree 2, in walk order
    // starting at its smallest vertex towards the smaller neighbor.
    auto find_cycle_component(const Graph & graph) -> std::optional<std::vector<Vertex>>
    {
        for (const auto & component : edge_components(graph)) {
            if (! std::ranges::all_of(component, [&](Vertex x) { return graph.degree(x) == 2; }))
                continue;
            std::vector<Vertex> order{component.front()};
            Vertex prev = component.front();
            Vertex at = graph.neighbors(prev)[0];
            while (at != component.front()) {
                order.push_back(at);
                auto nbrs = graph.neighbors(at);
                Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
                prev = at;
                at = next;
            }
            return order;
        }
        return std::nullopt;
    }

    auto cycle_color(const CycleBranch & cycle) -> Color
    {
        if (cycle.position == cycle.length - 1)
            return 3;
        return cycle.position % 2 == 0 ? 1 : 2;
    }
}

auto plan_reduction(const Graph & graph) -> std::vector<ReductionStep>
{
    std::vector<ReductionStep> steps;
    steps.reserve(graph.edge_count());
    Graph current = graph;
    while (current.edge_count() > 0) {
        if (auto e = find_pendant(current)) {
            steps.push_back({*e, PendantBranch{}});
            current.erase_edge(*e);
            continue;
        }
        if (auto cycle = find_cycle_component(current)) {
            int length = static_cast<int>(cycle->size());
            for (int i = 0; i < length; ++i) {
                auto e = Edge::of((*cycle)[i], (*cycle)[(i + 1) % length]);
                steps.push_back({e, CycleBranch{i, length}});
                current.erase_edge(e);
            }
            continue;
        }
        if (auto config = find_configuration(current, ConfigKind::A2)) {
            auto e = Edge::of(config->vertex, config->neighbors.front());
            steps.push_back({e, std::move(*config)});
            current.erase_edge(e);
            continue;
        }
        try {
            auto witness = find_a1_reduction(current);
            auto e = Edge::of(witness.center, witness.relay);
            steps.push_back({e, std::move(witness)});
            current.erase_edge(e);
        }
        catch (const Error & err) {
            if (err.kind() == ErrorKind::NoWitness || err.kind() == ErrorKind::CycleComponent)
                throw Error(ErrorKind::NotReducible,
                    "no reduction rule applies with " + std::to_string(current.edge_count())
                        + " edges left; the input is not planar");
            throw;
        }
    }
    return steps;
}

auto default_palette(const Graph & graph) -> int
{
    return std::max(graph.max_degree() + 12, 13);
}

auto color_graph(const Graph & graph, const ColorOptions & options) -> ColoringResult
{
    const int palette = options.palette.value_or(default_palette(graph));
    if (palette < 0)
        throw Error(ErrorKind::BadParams, "negative palette");
    const int max_degree = graph.max_degree();
    auto steps = plan_reduction(graph);

    ColoringResult result{PartialColoring(graph, palette), palette, 0, 0, {}, {}, 0};
    auto current = std::make_shared<Graph>(graph.vertex_count());
    PartialColoring coloring(current, palette);
    EngineOptions engine{options.debug_verify};

    for (std::size_t k = steps.size(); k-- > 0;) {
        const auto & step = steps[k];
        auto grown = std::make_shared<Graph>(current->with_edge(step.edge));
        coloring = coloring.with_host(grown);
        current = grown;

        StepTrace record{steps.size() - 1 - k, step.edge, branch_name(step.branch), {}, false};
        if (std::holds_alternative<PendantBranch>(step.branch)) {
            auto gamma = smallest_valid_color(coloring, step.edge);
            if (! gamma)
                throw Error(ErrorKind::PaletteExhausted, "no free color for a pendant edge");
            coloring.assign(step.edge, *gamma);
            record.trace.moves.push_back(Move{Move::Kind::Assign, step.edge, *gamma, {}, "pendant edge"});
        }
        else if (const auto * cycle = std::get_if<CycleBranch>(&step.branch)) {
            Color c = cycle_color(*cycle);
            if (c > palette)
                throw Error(ErrorKind::PaletteExhausted, "cycle components need 3 colors");
            coloring.assign(step.edge, c);
            record.trace.moves.push_back(Move{Move::Kind::Assign, step.edge, c, {}, "cycle component"});
        }
        else {
            ExtensionBranch branch = std::holds_alternative<Configuration>(step.branch)
                ? ExtensionBranch{std::get<Configuration>(step.branch)}
                : ExtensionBranch{std::get<A1Witness>(step.branch)};
            ExtensionProblem problem{coloring, step.edge, max_degree, std::move(branch)};
            try {
                auto extended = extend(problem, engine);
                if (std::holds_alternative<A1Witness>(problem.branch))
                    result.max_a1_rejections = std::max(result.max_a1_rejections, extended.rejected_candidates);
                for (auto & note : extended.anomalies)
                    result.anomalies.push_back(std::move(note));
                coloring = std::move(extended.coloring);
                record.trace = std::move(extended.trace);
            }
            catch (const Error & err) {
                if (err.kind() != ErrorKind::EngineExhausted)
                    throw;
                result.anomalies.push_back(std::string{"step "} + std::to_string(record.step) + ": " + err.what());
                auto rescued = exhaustive_extend(problem.graph(), step.edge, problem.coloring, palette);
                if (! rescued)
                    throw Error(ErrorKind::PaletteExhausted,
                        "no extension within the neighborhood of edge " + std::to_string(step.edge.a) + "-"
                            + std::to_string(step.edge.b));
                ++result.fallback_count;
                record.fallback = true;
                coloring = std::move(*rescued);
            }
        }

        if (options.debug_verify) {
            auto verdict = verify_acyclic(*current, coloring, true);
            if (! verdict.ok)
                throw std::logic_error("replay step " + std::to_string(record.step) + " broke the coloring: " + verdict.detail);
        }
        if (options.keep_traces)
            result.traces.push_back(std::move(record));
    }

    result.coloring = coloring.with_host(std::make_shared<const Graph>(graph));
    result.colors_used = result.coloring.distinct_colors();
    return result;
}

}
