#include <acolor/error.hpp>
#include <acolor/graph_io.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace acolor {

namespace {
    constexpr std::string_view graph6_header = ">>graph6<<";

    auto trim(std::string_view s) -> std::string_view
    {
        auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n'; };
        while (! s.empty() && is_space(s.front()))
            s.remove_prefix(1);
        while (! s.empty() && is_space(s.back()))
            s.remove_suffix(1);
        return s;
    }

    auto parse_error(std::size_t line, const std::string & what) -> Error
    {
        return Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
    }

    auto next_token(std::string_view & rest) -> std::string_view
    {
        rest = trim(rest);
        auto end = rest.find_first_of(" \t");
        auto token = rest.substr(0, end);
        rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
        return token;
    }

    auto first_content_line(std::string_view text) -> std::string_view
    {
        while (! text.empty()) {
            auto end = text.find('\n');
            auto line = trim(text.substr(0, end));
            if (! line.empty())
                return line;
            if (end == std::string_view::npos)
                break;
            text.remove_prefix(end + 1);
        }
        return {};
    }
}

auto parse_edgelist(std::string_view text) -> Graph
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    Vertex largest = -1;
    std::size_t line_no = 0;
    while (! text.empty() || line_no == 0) {
        ++line_no;
        auto end = text.find('\n');
        auto line = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        std::array<Vertex, 2> ends{};
        for (auto & x : ends) {
            auto token = next_token(line);
            if (token.empty())
                throw parse_error(line_no, "expected two vertex ids");
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw parse_error(line_no, "bad vertex id '" + std::string{token} + "'");
            if (x < 0)
                throw parse_error(line_no, "negative vertex id");
        }
        if (! trim(line).empty())
            throw parse_error(line_no, "trailing content '" + std::string{trim(line)} + "'");
        if (ends[0] == ends[1])
            throw parse_error(line_no, std::string{to_string(ErrorKind::SelfLoop)} + " at vertex " + std::to_string(ends[0]));
        largest = std::max({largest, ends[0], ends[1]});
        pairs.emplace_back(ends[0], ends[1]);
    }
    Graph graph(largest + 1);
    for (auto [x, y] : pairs)
        graph.add_edge(x, y);
    return graph;
}

auto emit_edgelist(const Graph & graph) -> std::string
{
    std::string out;
    for (const auto & e : graph.edges())
        out += std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
    return out;
}

auto parse_graph6(std::string_view text) -> Graph
{
    text = trim(text);
    if (text.starts_with(graph6_header))
        text.remove_prefix(graph6_header.size());
    if (auto nl = text.find('\n'); nl != std::string_view::npos)
        text = trim(text.substr(0, nl));
    for (std::size_t i = 0; i < text.size(); ++i)
        if (text[i] < 63 || text[i] > 126)
            throw Error(ErrorKind::ParseError, "graph6 byte " + std::to_string(i) + " out of range");
    if (text.empty())
        throw Error(ErrorKind::ParseError, "empty graph6 input");

    std::size_t pos = 0;
    auto take = [&](std::size_t count) -> long long {
        if (pos + count > text.size())
            throw Error(ErrorKind::ParseError, "truncated graph6 size field");
        long long value = 0;
        for (std::size_t i = 0; i < count; ++i)
            value = (value << 6) | (text[pos + i] - 63);
        pos += count;
        return value;
    };
    long long n = 0;
    if (text[0] != 126) {
        n = take(1);
    } else if (text.size() > 1 && text[1] != 126) {
        pos = 1;
        n = take(3);
    } else {
        pos = 2;
        n = take(6);
    }
    if (n > 1'000'000)
        throw Error(ErrorKind::ParseError, "graph6 vertex count too large");

    auto bits = static_cast<std::size_t>(n * (n - 1) / 2);
    auto expected = (bits + 5) / 6;
    if (text.size() - pos != expected)
        throw Error(ErrorKind::ParseError, "graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected "
            + std::to_string(expected));

    Graph graph(static_cast<int>(n));
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[pos + k / 6] - 63;
            if (byte & (1 << (5 - k % 6)))
                graph.add_edge(i, j);
        }
    return graph;
}

auto emit_graph6(const Graph & graph) -> std::string
{
    std::string out;
    auto n = static_cast<long long>(graph.vertex_count());
    auto put = [&](long long value, int chunks) {
        for (int i = chunks - 1; i >= 0; --i)
            out += static_cast<char>(63 + ((value >> (6 * i)) & 63));
    };
    if (n <= 62) {
        put(n, 1);
    } else if (n <= 258047) {
        out += '~';
        put(n, 3);
    } else {
        out += "~~";
        put(n, 6);
    }
    int byte = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            byte = (byte << 1) | (graph.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(63 + byte);
                byte = filled = 0;
            }
        }
    if (filled > 0)
        out += static_cast<char>(63 + (byte << (6 - filled)));
    return out;
}

auto detect_format(std::string_view text) -> GraphFormat
{
    auto line = first_content_line(text);
    if (line.starts_with(graph6_header))
        return GraphFormat::Graph6;
    if (line.empty() || line.front() == '#' || line.find_first_of(" \t") != std::string_view::npos)
        return GraphFormat::EdgeList;
    return GraphFormat::Graph6;
}

auto parse_graph(std::string_view text, std::optional<GraphFormat> format) -> Graph
{
    switch (format.value_or(detect_format(text))) {
        case GraphFormat::Graph6: return parse_graph6(text);
        case GraphFormat::EdgeList: return parse_edgelist(text);
    }
    throw Error(ErrorKind::ParseError, "unknown format");
}

auto read_file(const std::filesystem::path & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw Error(ErrorKind::ParseError, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

auto load_graph(const std::filesystem::path & path) -> Graph
{
    auto text = read_file(path);
    auto ext = path.extension().string();
    std::optional<GraphFormat> format;
    if (ext == ".g6" || ext == ".graph6")
        format = GraphFormat::Graph6;
    else if (ext == ".txt" || ext == ".edges" || ext == ".el")
        format = GraphFormat::EdgeList;
    try {
        return parse_graph(text, format);
    }
    catch (const Error & err) {
        throw Error(err.kind(), path.string() + ": " + err.detail());
    }
}

auto emit_dot(const Graph & graph, const PartialColoring * coloring) -> std::string
{
    std::string out = "graph g {\n";
    for (Vertex v = 0; v < graph.vertex_count(); ++v)
        if (graph.degree(v) == 0)
            out += "  " + std::to_string(v) + ";\n";
    for (const auto & e : graph.edges()) {
        out += "  " + std::to_string(e.a) + " -- " + std::to_string(e.b);
        std::optional<Color> c;
        if (coloring && coloring->host().has_edge(e.a, e.b))
            c = coloring->color(e);
        if (c)
            out += " [label=\"" + std::to_string(*c) + "\", color=\"/set312/" + std::to_string((*c - 1) % 12 + 1) + "\"]";
        else if (coloring)
            out += " [style=dashed]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

}
