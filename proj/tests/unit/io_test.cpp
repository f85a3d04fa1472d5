#include <acolor/coloring_io.hpp>
#include <acolor/driver.hpp>
#include <acolor/error.hpp>
#include <acolor/generators.hpp>
#include <acolor/graph_io.hpp>

#include <gtest/gtest.h>

#include <json.hpp>

#include <cctype>
#include <map>

#include "test_support.hpp"

using namespace acolor;

namespace {

auto error_of(auto && fn) -> std::string
{
    try {
        fn();
    }
    catch (const Error & e) {
        return e.what();
    }
    return "no error";
}

// Just enough of the DOT grammar to read back what emit_dot writes:
// statements "a;" and "a -- b [k=\"v\", ...];" inside "graph id { }".
struct DotEdge {
    int a = 0;
    int b = 0;
    std::map<std::string, std::string> attrs;
};

struct DotGraph {
    std::vector<int> nodes;
    std::vector<DotEdge> edges;
};

class DotReader {
public:
    explicit DotReader(std::string_view text) : s_(text) {}

    auto read() -> DotGraph
    {
        DotGraph g;
        expect_word("graph");
        (void) ident();
        expect('{');
        while (peek() != '}') {
            int a = number();
            if (peek() == '-') {
                expect('-');
                expect('-');
                DotEdge e{a, number(), {}};
                if (peek() == '[')
                    e.attrs = attributes();
                g.edges.push_back(std::move(e));
            } else {
                g.nodes.push_back(a);
            }
            expect(';');
        }
        expect('}');
        if (peek() != '\0')
            throw std::runtime_error("trailing input");
        return g;
    }

private:
    auto peek() -> char
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void expect(char c)
    {
        if (peek() != c)
            throw std::runtime_error(std::string("expected '") + c + "' at " + std::to_string(pos_));
        ++pos_;
    }

    auto ident() -> std::string
    {
        peek();
        std::string out;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            out += s_[pos_++];
        if (out.empty())
            throw std::runtime_error("expected identifier at " + std::to_string(pos_));
        return out;
    }

    void expect_word(std::string_view w)
    {
        if (ident() != w)
            throw std::runtime_error("expected keyword");
    }

    auto number() -> int { return std::stoi(ident()); }

    auto quoted() -> std::string
    {
        expect('"');
        std::string out;
        while (pos_ < s_.size() && s_[pos_] != '"')
            out += s_[pos_++];
        expect('"');
        return out;
    }

    auto attributes() -> std::map<std::string, std::string>
    {
        std::map<std::string, std::string> out;
        expect('[');
        while (peek() != ']') {
            auto key = ident();
            expect('=');
            out[key] = peek() == '"' ? quoted() : ident();
            if (peek() == ',')
                ++pos_;
        }
        expect(']');
        return out;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}

TEST(EdgeList, ParsesPath)
{
    auto g = parse_edgelist("0 1\n1 2\n");
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edge_count(), 2u);
}

TEST(EdgeList, CommentsAndBlankLines)
{
    auto g = parse_edgelist("# a triangle\n\n0 1  # first\n1 2\n2 0\n");
    EXPECT_EQ(g.edge_count(), 3u);
}

TEST(EdgeList, Errors)
{
    EXPECT_NE(error_of([] { (void) parse_edgelist("0 0\n"); }).find("SelfLoop"), std::string::npos);
    auto bad = error_of([] { (void) parse_edgelist("0 1\n1 x\n"); });
    EXPECT_NE(bad.find("ParseError"), std::string::npos);
    EXPECT_NE(bad.find("line 2"), std::string::npos);
    EXPECT_NE(error_of([] { (void) parse_edgelist("0 1 2\n"); }).find("line 1"), std::string::npos);
    EXPECT_NE(error_of([] { (void) parse_edgelist("0 -1\n"); }).find("ParseError"), std::string::npos);
}

TEST(EdgeList, RoundTrip)
{
    auto g = random_triangulation(20, 3);
    auto text = emit_edgelist(g);
    EXPECT_EQ(parse_edgelist(text), g);
    EXPECT_EQ(emit_edgelist(parse_edgelist(text)), text);
}

// Reference strings produced by networkx.to_graph6_bytes (header stripped).
TEST(Graph6, KnownEncodings)
{
    EXPECT_EQ(emit_graph6(cycle_graph(5)), "Dhc");
    EXPECT_EQ(emit_graph6(fixtures::complete_graph(4)), "C~");
    EXPECT_EQ(emit_graph6(fixtures::path_graph(3)), "Bg");
    EXPECT_EQ(emit_graph6(fixtures::complete_bipartite(3, 3)), "EFz_");
    EXPECT_EQ(emit_graph6(Graph(0)), "?");
    EXPECT_EQ(emit_graph6(Graph(1)), "@");
    EXPECT_EQ(emit_graph6(fixtures::complete_graph(7)), "F~~~w");
    EXPECT_EQ(emit_graph6(platonic_graph(Solid::Icosahedron)), "KhFJ{B`KWqph");
    EXPECT_TRUE(emit_graph6(cycle_graph(63)).starts_with("~??~hCGGC@?G?_@?@"));
}

TEST(Graph6, DecodesPetersen)
{
    auto g = parse_graph6("IheA@GUAo");
    EXPECT_EQ(g.vertex_count(), 10);
    EXPECT_EQ(g.edge_count(), 15u);
    for (Vertex v = 0; v < 10; ++v)
        EXPECT_EQ(g.degree(v), 3);
}

TEST(Graph6, HeaderAndDetection)
{
    EXPECT_EQ(parse_graph(">>graph6<<Dhc\n"), cycle_graph(5));
    EXPECT_EQ(detect_format("Dhc\n"), GraphFormat::Graph6);
    EXPECT_EQ(detect_format("# c\n0 1\n"), GraphFormat::EdgeList);
}

TEST(Graph6, RoundTripLargeN)
{
    for (int n : {0, 1, 2})
        EXPECT_EQ(parse_graph6(emit_graph6(Graph(n))), Graph(n));
    for (int n : {3, 62, 63, 100})
        EXPECT_EQ(parse_graph6(emit_graph6(cycle_graph(n))), cycle_graph(n));
    auto g = random_triangulation(120, 9);
    EXPECT_EQ(parse_graph6(emit_graph6(g)), g);
}

TEST(Graph6, Errors)
{
    EXPECT_NE(error_of([] { (void) parse_graph6("D h"); }).find("byte 1"), std::string::npos);
    EXPECT_NE(error_of([] { (void) parse_graph6("Dh"); }).find("expected"), std::string::npos);
}

TEST(ColoringDocument, ByteIdenticalRoundTrip)
{
    auto g = random_triangulation(25, 2);
    auto r = color_graph(g);
    auto text = emit_coloring(r.coloring);
    auto back = parse_coloring(text, g);
    EXPECT_EQ(back, r.coloring);
    EXPECT_EQ(emit_coloring(back), text);
}

TEST(ColoringDocument, ShapeAndOrder)
{
    auto g = build_graph(3, {{2, 1}, {0, 1}});
    PartialColoring c(g, 13);
    c.assign(Edge::of(1, 2), 2);
    auto text = emit_coloring(c);
    EXPECT_EQ(text,
        "{\n  \"palette\": 13,\n  \"edges\": [\n    {\"u\": 0, \"v\": 1, \"color\": 0},\n"
        "    {\"u\": 1, \"v\": 2, \"color\": 2}\n  ]\n}\n");
    auto doc = parse_coloring_document(text);
    EXPECT_EQ(colored_edges(doc).size(), 1u);
    EXPECT_EQ(emit_coloring(PartialColoring(Graph(2), 13)), "{\n  \"palette\": 13,\n  \"edges\": []\n}\n");
}

TEST(ColoringDocument, Errors)
{
    auto g = build_graph(3, {{0, 1}, {1, 2}});
    auto kind = [&](std::string_view text) {
        try {
            (void) parse_coloring(text, g);
        }
        catch (const Error & e) {
            return e.kind();
        }
        return ErrorKind::BadParams;
    };
    EXPECT_EQ(kind("{"), ErrorKind::ParseError);
    EXPECT_EQ(kind(R"({"palette": 3})"), ErrorKind::ParseError);
    EXPECT_EQ(kind(R"({"palette": 3, "edges": [{"u": 0, "v": 2, "color": 1}]})"), ErrorKind::EdgeAbsent);
    EXPECT_EQ(kind(R"({"palette": 3, "edges": [{"u": 0, "v": 1, "color": 1}, {"u": 1, "v": 2, "color": 1}]})"),
        ErrorKind::ImproperAssignment);
    EXPECT_EQ(kind(R"({"palette": 3, "edges": [{"u": 0, "v": 1, "color": 4}]})"), ErrorKind::ColorOutOfRange);
}

TEST(VerdictJson, Fields)
{
    Verdict v;
    v.ok = false;
    v.failure_kind = FailureKind::BichromaticCycle;
    v.color_pair = std::pair{1, 2};
    v.cycle_vertices = {0, 1, 2, 3};
    auto j = nlohmann::json::parse(verdict_to_json(v));
    EXPECT_EQ(j["ok"], false);
    EXPECT_EQ(j["failure_kind"], "bichromatic_cycle");
    EXPECT_EQ(j["color_pair"], nlohmann::json::array({1, 2}));
    EXPECT_EQ(j["cycle_vertices"].size(), 4u);
    auto ok = nlohmann::json::parse(verdict_to_json(Verdict{}));
    EXPECT_TRUE(ok["color_pair"].is_null());
}

TEST(TraceJson, MovesSerialize)
{
    MoveTrace t;
    t.moves.push_back(Move{Move::Kind::Recolor, Edge::of(0, 2), 3, {}, "recolor"});
    t.moves.push_back(Move{Move::Kind::Exchange, Edge::of(0, 2), 0, Edge::of(0, 3), "swap"});
    auto j = nlohmann::json::parse(trace_to_json(t));
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["kind"], "recolor");
    EXPECT_EQ(j[0]["color"], 3);
    EXPECT_EQ(j[1]["partner"], nlohmann::json::array({0, 3}));
}

TEST(Dot, EmptySkeleton)
{
    EXPECT_EQ(emit_dot(Graph(0)), "graph g {\n}\n");
}

TEST(Dot, SingleColoredEdge)
{
    auto g = build_graph(2, {{0, 1}});
    PartialColoring c(g, 13);
    c.assign(Edge::of(0, 1), 1);
    auto dot = emit_dot(g, &c);
    auto parsed = DotReader(dot).read();
    ASSERT_EQ(parsed.edges.size(), 1u);
    EXPECT_EQ(parsed.edges[0].attrs["label"], "1");
}

TEST(Dot, CorpusGraphParsesBack)
{
    auto g = random_triangulation(40, 5);
    auto r = color_graph(g);
    auto parsed = DotReader(emit_dot(g, &r.coloring)).read();
    ASSERT_EQ(parsed.edges.size(), g.edge_count());
    for (const auto & e : parsed.edges) {
        ASSERT_TRUE(g.has_edge(e.a, e.b));
        ASSERT_EQ(std::stoi(e.attrs.at("label")), *r.coloring.color(e.a, e.b));
    }
    auto uncolored = DotReader(emit_dot(grid_graph(2, 2), nullptr)).read();
    EXPECT_EQ(uncolored.edges.size(), 4u);
}

TEST(Generators, Counts)
{
    auto grid = grid_graph(3, 3);
    EXPECT_EQ(grid.vertex_count(), 9);
    EXPECT_EQ(grid.edge_count(), 12u);
    EXPECT_EQ(grid.max_degree(), 4);
    auto ico = platonic_graph(Solid::Icosahedron);
    EXPECT_EQ(ico.vertex_count(), 12);
    EXPECT_EQ(ico.edge_count(), 30u);
    for (Vertex v = 0; v < 12; ++v)
        EXPECT_EQ(ico.degree(v), 5);
    for (auto [solid, n, m, d] : {std::tuple{Solid::Tetrahedron, 4, 6, 3}, {Solid::Cube, 8, 12, 3},
             {Solid::Octahedron, 6, 12, 4}, {Solid::Dodecahedron, 20, 30, 3}}) {
        auto g = platonic_graph(solid);
        EXPECT_EQ(g.vertex_count(), n);
        EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(m));
        for (Vertex v = 0; v < n; ++v)
            EXPECT_EQ(g.degree(v), d);
    }
    auto w = wheel_graph(7);
    EXPECT_EQ(w.degree(7), 7);
    EXPECT_EQ(w.edge_count(), 14u);
}

TEST(Generators, TriangulationsAreMaximalAndDeterministic)
{
    for (int n : {3, 4, 10, 57, 200})
        for (std::uint64_t seed : {1u, 2u, 99u}) {
            auto g = random_triangulation(n, seed);
            ASSERT_EQ(g.edge_count(), static_cast<std::size_t>(3 * n - 6));
            ASSERT_EQ(g, random_triangulation(n, seed));
        }
    EXPECT_NE(random_triangulation(30, 1), random_triangulation(30, 2));
}

TEST(Generators, BadParams)
{
    auto kind = [](auto && fn) {
        try {
            fn();
        }
        catch (const Error & e) {
            return e.kind();
        }
        return ErrorKind::ParseError;
    };
    EXPECT_EQ(kind([] { (void) grid_graph(0, 3); }), ErrorKind::BadParams);
    EXPECT_EQ(kind([] { (void) wheel_graph(2); }), ErrorKind::BadParams);
    EXPECT_EQ(kind([] { (void) parse_solid("tesseract"); }), ErrorKind::BadParams);
    std::vector<std::string> params{"3"};
    EXPECT_EQ(kind([&] { (void) gen_planar("grid", params, 1); }), ErrorKind::BadParams);
    EXPECT_EQ(kind([&] { (void) gen_planar("moebius", params, 1); }), ErrorKind::BadParams);
    EXPECT_EQ(gen_planar("cycle", params, 1), cycle_graph(3));
}
