#include <acolor/coloring_io.hpp>
#include <acolor/error.hpp>

#include <json.hpp>

namespace acolor {

namespace {
    using json = nlohmann::ordered_json;

    auto edge_json(Edge e) -> json
    {
        return json::array({e.a, e.b});
    }

    auto kind_name(Move::Kind kind) -> std::string_view
    {
        switch (kind) {
            case Move::Kind::Assign: return "assign";
            case Move::Kind::Recolor: return "recolor";
            case Move::Kind::Exchange: return "exchange";
        }
        return "unknown";
    }

    auto moves_json(const MoveTrace & trace) -> json
    {
        auto moves = json::array();
        for (const auto & m : trace.moves) {
            json entry;
            entry["kind"] = kind_name(m.kind);
            entry["edge"] = edge_json(m.edge);
            if (m.kind == Move::Kind::Exchange)
                entry["partner"] = edge_json(m.partner);
            else
                entry["color"] = m.color;
            entry["label"] = m.label;
            moves.push_back(std::move(entry));
        }
        return moves;
    }

    auto integer_field(const json & obj, const char * key) -> int
    {
        auto it = obj.find(key);
        if (it == obj.end())
            throw Error(ErrorKind::ParseError, std::string{"missing field '"} + key + "'");
        if (! it->is_number_integer())
            throw Error(ErrorKind::ParseError, std::string{"field '"} + key + "' is not an integer");
        return it->get<int>();
    }
}

auto emit_coloring(const PartialColoring & coloring) -> std::string
{
    std::string out = "{\n  \"palette\": " + std::to_string(coloring.palette()) + ",\n  \"edges\": [";
    auto edges = coloring.host().edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto & e = edges[i];
        out += i == 0 ? "\n" : ",\n";
        out += "    {\"u\": " + std::to_string(e.a) + ", \"v\": " + std::to_string(e.b)
            + ", \"color\": " + std::to_string(coloring.color(e).value_or(0)) + "}";
    }
    out += edges.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

auto parse_coloring_document(std::string_view text) -> ColoringDocument
{
    json root;
    try {
        root = json::parse(text);
    }
    catch (const json::parse_error & err) {
        throw Error(ErrorKind::ParseError, err.what());
    }
    if (! root.is_object())
        throw Error(ErrorKind::ParseError, "coloring must be a JSON object");
    ColoringDocument doc;
    doc.palette = integer_field(root, "palette");
    auto it = root.find("edges");
    if (it == root.end() || ! it->is_array())
        throw Error(ErrorKind::ParseError, "missing array 'edges'");
    for (const auto & entry : *it) {
        if (! entry.is_object())
            throw Error(ErrorKind::ParseError, "edge entries must be objects");
        doc.edges.push_back({integer_field(entry, "u"), integer_field(entry, "v"), integer_field(entry, "color")});
    }
    return doc;
}

auto colored_edges(const ColoringDocument & doc) -> std::vector<ColoredEdge>
{
    std::vector<ColoredEdge> result;
    for (const auto & e : doc.edges)
        if (e.color != 0)
            result.push_back(e);
    return result;
}

auto parse_coloring(std::string_view text, const Graph & host) -> PartialColoring
{
    auto doc = parse_coloring_document(text);
    PartialColoring coloring(host, doc.palette);
    for (const auto & e : doc.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= host.vertex_count() || e.v >= host.vertex_count() || ! host.has_edge(e.u, e.v))
            throw Error(ErrorKind::EdgeAbsent, std::to_string(e.u) + "-" + std::to_string(e.v));
        if (e.color != 0)
            coloring.assign(Edge::of(e.u, e.v), e.color);
    }
    return coloring;
}

auto verdict_to_json(const Verdict & verdict) -> std::string
{
    json out;
    out["ok"] = verdict.ok;
    out["failure_kind"] = to_string(verdict.failure_kind);
    if (verdict.color_pair)
        out["color_pair"] = json::array({verdict.color_pair->first, verdict.color_pair->second});
    else
        out["color_pair"] = nullptr;
    out["cycle_vertices"] = verdict.cycle_vertices;
    out["detail"] = verdict.detail;
    return out.dump();
}

auto trace_to_json(const MoveTrace & trace) -> std::string
{
    return moves_json(trace).dump();
}

auto traces_to_json(const std::vector<StepTrace> & traces) -> std::string
{
    auto steps = json::array();
    for (const auto & t : traces) {
        json entry;
        entry["step"] = t.step;
        entry["edge"] = edge_json(t.edge);
        entry["branch"] = t.branch;
        entry["fallback"] = t.fallback;
        entry["moves"] = moves_json(t.trace);
        steps.push_back(std::move(entry));
    }
    return steps.dump();
}

}
