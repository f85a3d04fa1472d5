// acolor: acyclic edge coloring of planar graphs from the command line.
//
// Exit codes: 0 success, 1 verification failure or exhausted palette,
// 2 unreadable input, 3 graph not reducible, 4 exact search ran out of budget.

#include <acolor/coloring_io.hpp>
#include <acolor/driver.hpp>
#include <acolor/error.hpp>
#include <acolor/generators.hpp>
#include <acolor/graph_io.hpp>
#include <acolor/oracle.hpp>
#include <acolor/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>
#include <vector>

namespace fs = std::filesystem;
using namespace acolor;

namespace {

enum Exit { Ok = 0, Failed = 1, BadInput = 2, Irreducible = 3, Unknown = 4 };

auto exit_code(ErrorKind kind) -> int
{
    switch (kind) {
        case ErrorKind::ParseError:
        case ErrorKind::SelfLoop:
        case ErrorKind::VertexOutOfRange:
        case ErrorKind::EdgeAbsent:
        case ErrorKind::BadParams:
            return BadInput;
        case ErrorKind::NotReducible: return Irreducible;
        default: return Failed;
    }
}

void write_output(const std::string & text, const std::string & path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw Error(ErrorKind::ParseError, "cannot write " + path);
    out << text;
}

struct ColorArgs {
    std::string input;
    std::optional<int> palette;
    bool trace = false;
    bool debug = false;
    std::string output;
    std::string dot;
};

auto run_color(const ColorArgs & args) -> int
{
    auto graph = load_graph(args.input);
    ColorOptions options;
    options.palette = args.palette;
    options.debug_verify = args.debug;
    options.keep_traces = args.trace;
    auto result = color_graph(graph, options);
    auto verdict = verify_acyclic(graph, result.coloring, true);
    write_output(emit_coloring(result.coloring), args.output);
    if (! args.dot.empty())
        write_output(emit_dot(graph, &result.coloring), args.dot);
    if (args.trace)
        std::cerr << traces_to_json(result.traces) << "\n";
    for (const auto & note : result.anomalies)
        std::cerr << "anomaly: " << note << "\n";
    std::cerr << "colors_used=" << result.colors_used << " palette=" << result.palette
              << " fallback_count=" << result.fallback_count << "\n";
    if (! verdict.ok) {
        std::cerr << verdict_to_json(verdict) << "\n";
        return Failed;
    }
    return Ok;
}

auto run_verify(const std::string & graph_path, const std::string & coloring_path, bool partial) -> int
{
    auto graph = load_graph(graph_path);
    auto doc = parse_coloring_document(read_file(coloring_path));
    auto edges = colored_edges(doc);
    auto verdict = verify_acyclic(graph, edges, ! partial, doc.palette);
    std::cout << verdict_to_json(verdict) << "\n";
    return verdict.ok ? Ok : Failed;
}

auto run_exact(const std::string & path, int max_colors, std::uint64_t nodes, double seconds) -> int
{
    auto graph = load_graph(path);
    SearchBudget budget;
    budget.max_colors = max_colors;
    budget.node_limit = nodes;
    budget.time_limit_seconds = seconds;
    auto result = exact_acyclic_index(graph, budget);
    if (! result.index) {
        std::cout << "unknown(budget)\n";
        return Unknown;
    }
    std::cout << *result.index << "\n";
    return Ok;
}

auto run_gen(const std::string & kind, const std::vector<std::string> & params, std::uint64_t seed,
    const std::string & format, const std::string & output) -> int
{
    auto graph = gen_planar(kind, params, seed);
    write_output(format == "graph6" ? emit_graph6(graph) + "\n" : emit_edgelist(graph), output);
    return Ok;
}

struct BenchRow {
    std::string name;
    int n = 0;
    std::size_t m = 0;
    int delta = 0;
    int palette = 0;
    int colors_used = 0;
    int fallback_count = 0;
    double millis = 0;
    std::string error;
};

auto bench_one(const fs::path & path) -> BenchRow
{
    BenchRow row;
    row.name = path.filename().string();
    try {
        auto graph = load_graph(path);
        row.n = graph.vertex_count();
        row.m = graph.edge_count();
        row.delta = graph.max_degree();
        auto start = std::chrono::steady_clock::now();
        auto result = color_graph(graph);
        row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        row.palette = result.palette;
        row.colors_used = result.colors_used;
        row.fallback_count = result.fallback_count;
        if (! verify_acyclic(graph, result.coloring, true).ok)
            row.error = "verification failed";
    }
    catch (const Error & err) {
        row.error = err.what();
    }
    return row;
}

auto run_bench(const std::string & dir, int jobs, const std::string & csv) -> int
{
    std::vector<fs::path> files;
    for (const auto & entry : fs::directory_iterator(dir))
        if (entry.is_regular_file())
            files.push_back(entry.path());
    std::ranges::sort(files);

    std::vector<BenchRow> rows(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (auto i = next++; i < files.size(); i = next++)
            rows[i] = bench_one(files[i]);
    };
    {
        std::vector<std::jthread> pool;
        for (int j = 0; j < std::max(1, jobs); ++j)
            pool.emplace_back(worker);
    }

    std::string out = "name,n,m,delta,K,colors_used,fallback_count,millis\n";
    int status = Ok;
    for (const auto & row : rows) {
        if (! row.error.empty()) {
            std::cerr << row.name << ": " << row.error << "\n";
            status = Failed;
            continue;
        }
        char millis[32];
        std::snprintf(millis, sizeof millis, "%.3f", row.millis);
        out += row.name + "," + std::to_string(row.n) + "," + std::to_string(row.m) + "," + std::to_string(row.delta)
            + "," + std::to_string(row.palette) + "," + std::to_string(row.colors_used) + ","
            + std::to_string(row.fallback_count) + "," + millis + "\n";
    }
    write_output(out, csv);
    return status;
}

}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Acyclic edge coloring of planar graphs"};
    app.require_subcommand(1);

    ColorArgs color_args;
    auto * color = app.add_subcommand("color", "Color a graph and print the coloring as JSON");
    color->add_option("graph", color_args.input, "Edge list or graph6 file")->required()->check(CLI::ExistingFile);
    color->add_option("--k", color_args.palette, "Palette size (default max(Delta+12, 13))");
    color->add_flag("--trace", color_args.trace, "Print the move trace as JSON on stderr");
    color->add_flag("--debug", color_args.debug, "Re-verify after every step");
    color->add_option("-o,--output", color_args.output, "Coloring output file");
    color->add_option("--dot", color_args.dot, "Also write Graphviz source here");

    std::string verify_graph;
    std::string verify_coloring;
    bool partial = false;
    auto * verify = app.add_subcommand("verify", "Check a coloring file against a graph");
    verify->add_option("graph", verify_graph)->required()->check(CLI::ExistingFile);
    verify->add_option("coloring", verify_coloring)->required()->check(CLI::ExistingFile);
    verify->add_flag("--partial", partial, "Accept uncolored edges");

    std::string exact_graph;
    int max_colors = 12;
    std::uint64_t node_limit = 50'000'000;
    double time_limit = 60.0;
    auto * exact = app.add_subcommand("exact", "Exact acyclic chromatic index of a small graph");
    exact->add_option("graph", exact_graph)->required()->check(CLI::ExistingFile);
    exact->add_option("--max-colors", max_colors);
    exact->add_option("--nodes", node_limit);
    exact->add_option("--seconds", time_limit);

    std::string gen_kind;
    std::vector<std::string> gen_params;
    std::uint64_t seed = 1;
    std::string gen_format = "edgelist";
    std::string gen_output;
    auto * gen = app.add_subcommand("gen", "Generate a planar graph");
    gen->add_option("kind", gen_kind, "grid | wheel | cycle | platonic | random_triangulation")->required();
    gen->add_option("params", gen_params, "Generator parameters");
    gen->add_option("--seed", seed);
    gen->add_option("--format", gen_format)->check(CLI::IsMember({"edgelist", "graph6"}));
    gen->add_option("-o,--output", gen_output);

    std::string bench_dir;
    int jobs = 1;
    std::string csv;
    auto * bench = app.add_subcommand("bench", "Color every graph in a directory and report CSV");
    bench->add_option("dir", bench_dir)->required()->check(CLI::ExistingDirectory);
    bench->add_option("--jobs", jobs);
    bench->add_option("--csv", csv);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & err) {
        auto code = app.exit(err);
        return code == 0 ? Ok : BadInput;
    }

    try {
        if (*color)
            return run_color(color_args);
        if (*verify)
            return run_verify(verify_graph, verify_coloring, partial);
        if (*exact)
            return run_exact(exact_graph, max_colors, node_limit, time_limit);
        if (*gen)
            return run_gen(gen_kind, gen_params, seed, gen_format, gen_output);
        if (*bench)
            return run_bench(bench_dir, jobs, csv);
    }
    catch (const Error & err) {
        std::cerr << "acolor: " << err.what() << "\n";
        return exit_code(err.kind());
    }
    return Ok;
}
