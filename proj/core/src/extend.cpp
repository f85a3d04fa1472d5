#include <acolor/error.hpp>
#include <acolor/extend.hpp>
#include <acolor/paths.hpp>
#include <acolor/verify.hpp>

#include <algorithm>
#include <array>
#include <iterator>
#include <stdexcept>
#include <string>

namespace acolor {

auto replay(const PartialColoring & input, const MoveTrace & trace) -> PartialColoring
{
    PartialColoring coloring = input;
    for (const auto & move : trace.moves) {
        switch (move.kind) {
            case Move::Kind::Assign:
            case Move::Kind::Recolor:
                coloring.assign(move.edge, move.color);
                break;
            case Move::Kind::Exchange: {
                Vertex u = move.partner.touches(move.edge.a) ? move.edge.a : move.edge.b;
                coloring = color_exchange(coloring, u, move.edge.other(u), move.partner.other(u));
                break;
            }
        }
    }
    return coloring;
}

namespace {
    auto sweep(const PartialColoring & coloring, Edge e, int & rejected) -> std::optional<Color>
    {
        rejected = 0;
        for (Color gamma = 1; gamma <= coloring.palette(); ++gamma) {
            if (! is_candidate(coloring, e, gamma))
                continue;
            if (is_valid(coloring, e, gamma))
                return gamma;
            ++rejected;
        }
        return std::nullopt;
    }

    auto edge_closes_cycle(const PartialColoring & coloring, Edge f) -> bool
    {
        auto own = coloring.color(f);
        if (! own)
            return false;
        PartialColoring without = coloring;
        without.unassign(f);
        return ! is_valid(without, f, *own);
    }

    /// Mutable state of one extension: the working coloring plus the moves
    /// applied so far. Every move is validated before it is recorded.
    class Session {
    public:
        Session(const ExtensionProblem & problem, const EngineOptions & options) :
            problem_(problem),
            options_(options),
            coloring_(problem.coloring)
        {
            if (options_.verify_each_move)
                check("input");
        }

        [[nodiscard]] auto graph() const -> const Graph & { return problem_.graph(); }
        [[nodiscard]] auto palette() const -> int { return problem_.palette(); }
        [[nodiscard]] auto coloring() const -> const PartialColoring & { return coloring_; }
        [[nodiscard]] auto edge() const -> Edge { return problem_.edge; }

        auto finish() -> ExtensionResult
        {
            return ExtensionResult{std::move(coloring_), std::move(trace_), rejected_, std::move(anomalies_)};
        }

        auto take_trace() -> MoveTrace { return std::move(trace_); }
        auto take_coloring() -> PartialColoring { return std::move(coloring_); }

        void note(std::string anomaly) { anomalies_.push_back(std::move(anomaly)); }

        /// Colors the edge with the smallest valid candidate, if any.
        auto try_assign(const std::string & label) -> bool
        {
            int rejected = 0;
            auto gamma = sweep(coloring_, edge(), rejected);
            if (! gamma)
                return false;
            rejected_ = rejected;
            coloring_.assign(edge(), *gamma);
            trace_.moves.push_back(Move{Move::Kind::Assign, edge(), *gamma, {}, label});
            check(label);
            return true;
        }

        auto try_recolor(Edge f, Color gamma, const std::string & label) -> bool
        {
            if (! is_valid(coloring_, f, gamma))
                return false;
            coloring_.assign(f, gamma);
            trace_.moves.push_back(Move{Move::Kind::Recolor, f, gamma, {}, label});
            check(label);
            return true;
        }

        auto try_exchange(Vertex u, Vertex i, Vertex j, const std::string & label) -> bool
        {
            std::optional<PartialColoring> swapped;
            try {
                swapped = color_exchange(coloring_, u, i, j);
            }
            catch (const Error & e) {
                if (e.kind() != ErrorKind::ImproperExchange)
                    throw;
                return false;
            }
            if (edge_closes_cycle(*swapped, Edge::of(u, i)) || edge_closes_cycle(*swapped, Edge::of(u, j)))
                return false;
            coloring_ = std::move(*swapped);
            trace_.moves.push_back(Move{Move::Kind::Exchange, Edge::of(u, i), 0, Edge::of(u, j), label});
            check(label);
            return true;
        }

    private:
        void check(const std::string & label) const
        {
            if (! options_.verify_each_move)
                return;
            auto verdict = verify_acyclic(graph(), coloring_, false);
            if (! verdict.ok)
                throw std::logic_error("coloring invalid after '" + label + "': " + verdict.detail);
        }

        const ExtensionProblem & problem_;
        const EngineOptions & options_;
        PartialColoring coloring_;
        MoveTrace trace_;
        int rejected_ = 0;
        std::vector<std::string> anomalies_;
    };

    struct Endpoints {
        Vertex v;
        Vertex v1;
    };

    auto configuration_endpoints(const ExtensionProblem & problem) -> Endpoints
    {
        const auto * config = std::get_if<Configuration>(&problem.branch);
        if (! config || config->neighbors.empty())
            throw Error(ErrorKind::BadParams, "extension problem has no A2-A4 configuration");
        Endpoints ends{config->vertex, config->neighbors.front()};
        if (Edge::of(ends.v, ends.v1) != problem.edge)
            throw Error(ErrorKind::BadParams, "configuration does not match the uncolored edge");
        return ends;
    }

    void check_well_formed(const ExtensionProblem & problem, const EngineOptions & options)
    {
        if (! problem.graph().has_edge(problem.edge))
            throw Error(ErrorKind::EdgeAbsent, "extension edge is not in the graph");
        if (problem.coloring.is_assigned(problem.edge))
            throw Error(ErrorKind::BadParams, "extension edge is already colored");
        if (options.verify_each_move && problem.coloring.assigned_count() + 1 != problem.graph().edge_count())
            throw std::logic_error("extension problem leaves edges other than e uncolored");
    }

    /// The two or more edges at v whose colors also appear at v1.
    struct Overlap {
        ColorSet at_v;
        ColorSet at_v1;
        ColorSet shared;
        std::vector<Vertex> shared_neighbors;
    };

    auto overlap(const PartialColoring & coloring, Endpoints ends) -> Overlap
    {
        Overlap o{colors_at(coloring, ends.v), colors_at(coloring, ends.v1), {}, {}};
        o.shared = o.at_v.intersected(o.at_v1);
        for (Color c : o.shared)
            o.shared_neighbors.push_back(*coloring.neighbor_with(ends.v, c));
        std::ranges::sort(o.shared_neighbors);
        return o;
    }

    auto owners_of(const PartialColoring & coloring, Endpoints ends, Color alpha) -> std::vector<Vertex>
    {
        std::vector<Vertex> owners;
        for (Vertex w : coloring.host().neighbors(ends.v))
            if (w != ends.v1 && seen_from(coloring, ends.v, w).contains(alpha))
                owners.push_back(w);
        return owners;
    }

    auto shrink_intersection(Session & session, Endpoints ends) -> bool
    {
        const auto & c = session.coloring();
        auto o = overlap(c, ends);
        auto label = "|F_v & F_v1|=" + std::to_string(o.shared.size());
        auto free = o.at_v.united(o.at_v1).complement(session.palette());

        for (Vertex w : o.shared_neighbors)
            for (Color gamma : free)
                if (session.try_recolor(Edge::of(ends.v, w), gamma, label + ": recolor shared edge at v"))
                    return true;

        const std::array<Vertex, 1> excluded{ends.v1};
        auto reduced = neighbor_multiset(c, ends.v, excluded).without(o.at_v.united(o.at_v1));
        for (Color alpha : free) {
            int mult = reduced.multiplicity(alpha);
            if (mult > 1)
                continue;
            if (mult == 0) {
                if (is_valid(c, session.edge(), alpha))
                    return false;
                continue;
            }
            auto owners = owners_of(c, ends, alpha);
            for (Vertex x : o.shared_neighbors) {
                if (std::ranges::find(owners, x) != owners.end())
                    continue;
                if (session.try_recolor(Edge::of(ends.v, x), alpha, label + ": move shared edge to multiplicity-one color"))
                    return true;
            }
        }
        return false;
    }

    auto low_multiplicity(const ColorMultiset & sv, const ColorSet & at_v1, int palette) -> std::vector<Color>
    {
        std::vector<Color> low;
        for (Color x : at_v1.complement(palette))
            if (sv.multiplicity(x) <= 1)
                low.push_back(x);
        return low;
    }

    void resolve_two_shared(Session & session, const ExtensionProblem & problem, Endpoints ends)
    {
        const std::array<Vertex, 1> excluded{ends.v1};
        const int palette = session.palette();

        // Two colors of F_v1 missing from S_v go onto the two shared edges.
        {
            const auto & c = session.coloring();
            auto o = overlap(c, ends);
            auto sv = neighbor_multiset(c, ends.v, excluded);
            auto missing = o.at_v1.minus(o.shared).minus(sv.support());
            if (o.shared.size() == 2 && missing.size() >= 2) {
                Vertex vp = *c.neighbor_with(ends.v, *o.shared.begin());
                Vertex vpp = *c.neighbor_with(ends.v, *std::next(o.shared.begin()));
                Color nu = missing.values()[0];
                Color mu = missing.values()[1];
                if (session.try_recolor(Edge::of(ends.v, vp), nu, "shrink: recolor v v' with a color of F_v1 outside S_v")
                    && session.try_recolor(Edge::of(ends.v, vpp), mu, "shrink: recolor v v'' with a color of F_v1 outside S_v")) {
                    if (session.try_assign("shrink: candidate sweep after recoloring"))
                        return;
                    if (session.try_exchange(ends.v, vp, vpp, "shrink: exchange v v' and v v''")
                        && session.try_assign("shrink: candidate sweep after exchange"))
                        return;
                    session.note("shrink: recolor/exchange of F_v1 colors did not free a candidate");
                }
            }
        }

        // A color outside F_v1 with multiplicity <= 1 in S_v that is also
        // outside F_v pushes the intersection down to one.
        {
            const auto & c = session.coloring();
            auto o = overlap(c, ends);
            if (o.shared.size() != 2)
                throw Error(ErrorKind::EngineExhausted, "intersection left size 2 unexpectedly");
            auto sv = neighbor_multiset(c, ends.v, excluded);
            auto low = low_multiplicity(sv, o.at_v1, palette);
            int budget = sv.cardinality() + static_cast<int>(o.at_v1.size());
            if (budget <= 2 * problem.max_degree + 20 && low.size() < 2)
                session.note("shrink: budget ||S_v|| + |F_v1| = " + std::to_string(budget)
                    + " holds but fewer than two low-multiplicity colors exist");

            for (Color alpha : low) {
                if (o.at_v.contains(alpha))
                    continue;
                auto owners = owners_of(c, ends, alpha);
                std::vector<Vertex> targets;
                for (Vertex x : o.shared_neighbors)
                    if (std::ranges::find(owners, x) == owners.end())
                        targets.push_back(x);
                for (Vertex x : targets) {
                    if (! session.try_recolor(Edge::of(ends.v, x), alpha, "shrink: recolor shared edge to a low-multiplicity color"))
                        continue;
                    if (session.try_assign("shrink: candidate sweep with one shared color"))
                        return;
                    throw Error(ErrorKind::EngineExhausted, "no valid candidate with |F_v & F_v1| = 1");
                }
            }
        }

        // Both low-multiplicity colors sit on v: v has degree 5.
        const auto & c = session.coloring();
        auto o = overlap(c, ends);
        auto sv = neighbor_multiset(c, ends.v, excluded);
        std::vector<Color> low_at_v;
        for (Color x : low_multiplicity(sv, o.at_v1, palette))
            if (o.at_v.contains(x))
                low_at_v.push_back(x);
        const auto & config = std::get<Configuration>(problem.branch);
        if (low_at_v.size() < 2 || config.neighbors.size() < 2 || o.shared_neighbors.size() != 2)
            throw Error(ErrorKind::EngineExhausted, "no pair of low-multiplicity colors at v");

        Vertex vp = o.shared_neighbors[0];
        Vertex vpp = o.shared_neighbors[1];
        Vertex v2 = config.neighbors[1];
        if (v2 == vp || v2 == vpp) {
            if (session.try_exchange(ends.v, vp, vpp, "shrink: exchange shared edges (v2 is shared)")
                && session.try_assign("shrink: candidate sweep after exchange"))
                return;
        }

        const auto & cur = session.coloring();
        auto o2 = overlap(cur, ends);
        if (o2.shared.size() != 2)
            throw Error(ErrorKind::EngineExhausted, "exchange changed the shared colors");
        Color beta = cur.color(ends.v, v2) == low_at_v[1] ? low_at_v[0] : low_at_v[1];
        std::vector<Vertex> order = o2.shared_neighbors;
        std::ranges::stable_sort(order, {}, [&](Vertex x) { return seen_from(cur, ends.v, x).contains(beta) ? 1 : 0; });
        auto s_v2 = seen_from(cur, ends.v, v2);

        for (Vertex x : order) {
            auto base = seen_from(cur, ends.v, x).united(o2.at_v).united(o2.at_v1);
            auto open = base.complement(palette);
            if (open.empty())
                continue;
            std::vector<Color> tries{*open.begin()};
            for (Color g : open.minus(s_v2))
                tries.push_back(g);
            for (Color g : open)
                tries.push_back(g);
            ColorSet tried;
            for (Color gamma : tries) {
                if (tried.contains(gamma))
                    continue;
                tried.insert(gamma);
                if (! session.try_recolor(Edge::of(ends.v, x), gamma, "shrink: recolor shared edge outside S_vx + F_v + F_v1"))
                    continue;
                if (session.try_assign("shrink: candidate sweep with one shared color"))
                    return;
                throw Error(ErrorKind::EngineExhausted, "no valid candidate with |F_v & F_v1| = 1");
            }
        }
        throw Error(ErrorKind::EngineExhausted, "shrink script found no move");
    }
}

auto smallest_valid_color(const PartialColoring & coloring, Edge e) -> std::optional<Color>
{
    int rejected = 0;
    return sweep(coloring, e, rejected);
}

auto try_candidates(const ExtensionProblem & problem) -> std::optional<Color>
{
    return smallest_valid_color(problem.coloring, problem.edge);
}

auto reduce_intersection(const ExtensionProblem & problem, const EngineOptions & options) -> Reduction
{
    check_well_formed(problem, options);
    auto ends = configuration_endpoints(problem);
    auto before = overlap(problem.coloring, ends).shared.size();
    if (before < 3)
        throw Error(ErrorKind::BadParams, "reduce_intersection needs |F_v & F_v1| >= 3");

    Session session(problem, options);
    bool shrunk = shrink_intersection(session, ends);
    if (! shrunk) {
        if (session.try_assign("multiplicity-zero candidate"))
            return Reduction{ExtensionProblem{session.take_coloring(), problem.edge, problem.max_degree, problem.branch},
                session.take_trace(), true};
        throw Error(ErrorKind::EngineExhausted,
            "no recoloring at v shrinks |F_v & F_v1| = " + std::to_string(before));
    }
    auto trace = session.take_trace();
    return Reduction{ExtensionProblem{session.take_coloring(), problem.edge, problem.max_degree, problem.branch},
        std::move(trace), false};
}

auto resolve_case1(const ExtensionProblem & problem, const EngineOptions & options) -> ExtensionResult
{
    check_well_formed(problem, options);
    auto ends = configuration_endpoints(problem);
    Session session(problem, options);
    if (session.try_assign("candidate sweep"))
        return session.finish();
    if (overlap(session.coloring(), ends).shared.size() != 2)
        throw Error(ErrorKind::BadParams, "resolve_case1 needs |F_v & F_v1| = 2");
    resolve_two_shared(session, problem, ends);
    return session.finish();
}

auto extend_a1(const ExtensionProblem & problem, const EngineOptions & options) -> ExtensionResult
{
    check_well_formed(problem, options);
    const auto * witness = std::get_if<A1Witness>(&problem.branch);
    if (! witness || Edge::of(witness->center, witness->relay) != problem.edge)
        throw Error(ErrorKind::BadParams, "extension problem has no matching A1 witness");

    Session session(problem, options);
    const auto & c = session.coloring();
    auto pendant_color = c.color(witness->relay, witness->far);
    if (! pendant_color)
        throw Error(ErrorKind::BadParams, "relay edge u'u'' is uncolored");

    ColorSet core_colors;
    for (Vertex w : witness->core_neighbors)
        if (auto col = c.color(witness->center, w))
            core_colors.insert(*col);

    if (core_colors.contains(*pendant_color)) {
        auto blocked = seen_from(c, witness->relay, witness->far).united(core_colors);
        bool moved = false;
        for (Color gamma : blocked.complement(session.palette())) {
            if (gamma == *pendant_color)
                continue;
            if (session.try_recolor(Edge::of(witness->relay, witness->far), gamma, "A1: recolor u'u'' away from F''_u")) {
                moved = true;
                break;
            }
        }
        if (! moved)
            session.note("A1: no color outside S_u'u'' + F''_u for u'u''");
    }
    if (session.try_assign("A1: candidate sweep"))
        return session.finish();
    throw Error(ErrorKind::EngineExhausted, "A1 branch found no valid candidate");
}

auto extend(const ExtensionProblem & problem, const EngineOptions & options) -> ExtensionResult
{
    check_well_formed(problem, options);
    if (std::holds_alternative<A1Witness>(problem.branch))
        return extend_a1(problem, options);

    auto ends = configuration_endpoints(problem);
    Session session(problem, options);
    // |F_v & F_v1| <= 4 and every reduction removes one shared color, so
    // this terminates after at most three reductions.
    for (int round = 0; round < 4; ++round) {
        if (session.try_assign(round == 0 ? "candidate sweep" : "candidate sweep after reduction"))
            return session.finish();
        auto shared = overlap(session.coloring(), ends).shared.size();
        if (shared <= 1)
            throw Error(ErrorKind::EngineExhausted,
                "no valid candidate although |F_v & F_v1| = " + std::to_string(shared));
        if (shared == 2) {
            resolve_two_shared(session, problem, ends);
            return session.finish();
        }
        if (! shrink_intersection(session, ends))
            throw Error(ErrorKind::EngineExhausted,
                "no recoloring at v shrinks |F_v & F_v1| = " + std::to_string(shared));
    }
    throw Error(ErrorKind::EngineExhausted, "intersection did not shrink to 2");
}

}
