#include "securepath/error.hpp"
#include "securepath/instance.hpp"
#include "securepath/pipeline.hpp"
#include "securepath/render.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace securepath;

namespace {

struct Globals {
    std::uint64_t seed = 1;
    double perturb = RobustnessConfig{}.perturbationMagnitude;
    double radiusFactor = RobustnessConfig{}.radiusFactor;
    double shrink = InstanceOptions{}.shrink;
    std::size_t thin = 1;
    std::string out;
    std::string format = "text";
    bool timing = false;

    InstanceOptions instanceOptions() const
    {
        InstanceOptions o;
        o.shrink = shrink;
        o.cfg.perturbationMagnitude = perturb;
        o.cfg.radiusFactor = radiusFactor;
        o.cfg.rngSeed = seed;
        return o;
    }
};

std::size_t parseCount(const std::string& text, const std::string& descriptor)
{
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw Error(ErrorCode::InvalidArgument, "bad number '" + text + "' in instance '" + descriptor + "'");
    return value;
}

// "hex:<side>", "random:<count>[:<seed>]" or a point file.
Instance loadInstance(const std::string& descriptor, const Globals& g)
{
    const InstanceOptions options = g.instanceOptions();
    std::vector<std::string> parts;
    std::stringstream ss(descriptor);
    for (std::string part; std::getline(ss, part, ':');)
        parts.push_back(part);
    if (parts.size() == 2 && parts[0] == "hex")
        return genHex(static_cast<int>(parseCount(parts[1], descriptor)), options);
    if ((parts.size() == 2 || parts.size() == 3) && parts[0] == "random") {
        const std::uint64_t seed = parts.size() == 3 ? parseCount(parts[2], descriptor) : g.seed;
        return genRandom(parseCount(parts[1], descriptor), seed, options);
    }
    return loadCsv(descriptor, options, g.thin);
}

void writePoints(const Instance& inst, const std::string& out)
{
    std::ostringstream text;
    text << "# " << inst.name << '\n';
    char buf[64];
    for (Point p : inst.points) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", p.x, p.y);
        text << buf;
    }
    if (out.empty()) {
        std::cout << text.str();
        return;
    }
    std::ofstream file(out, std::ios::binary);
    if (!(file << text.str()))
        throw Error(ErrorCode::IoError, "cannot write " + out);
}

void writeText(const std::string& text, const fs::path& path)
{
    std::ofstream file(path, std::ios::binary);
    if (!(file << text))
        throw Error(ErrorCode::IoError, "cannot write " + path.string());
}

TableFormat tableFormat(const Globals& g)
{
    return g.format == "csv" ? TableFormat::Csv : TableFormat::Text;
}

void printSolve(const Instance& inst, const RunOutput& run)
{
    const Point s = inst.points[inst.sourceIndex];
    const Point t = inst.points[inst.targetIndex];
    std::printf("instance %s: %zu points\n", inst.name.c_str(), inst.points.size());
    std::printf("source #%zu (%.6g, %.6g) -> target #%zu (%.6g, %.6g)\n", inst.sourceIndex, s.x, s.y,
                inst.targetIndex, t.x, t.y);
    std::printf("bfs intermediates: %d\n", run.bfs.intermediates);
    std::printf("secure path cost:  %d (rounds %d, disks inserted %zu)\n", run.wavefront.path.cost,
                run.wavefront.trace.rounds, run.wavefront.trace.insertedCount());
    if (run.chain)
        std::printf("chain check:       %s\n", run.chain->valid ? "valid" : "INVALID");
    std::printf("insertions:\n");
    for (Point q : run.wavefront.path.insertions)
        std::printf("  %.9f %.9f\n", q.x, q.y);
}

enum class Panel { Input, Bfs, Alg, Trace };

void renderPanel(const Instance& inst, const RunOutput& run, Panel panel, const fs::path& path)
{
    RenderOverlays o;
    o.source = siteId(inst.sourceIndex);
    o.target = siteId(inst.targetIndex);
    switch (panel) {
    case Panel::Input:
        o.title = inst.name + ": input";
        writeSvg(run.initial, o, path);
        return;
    case Panel::Bfs:
        o.title = inst.name + ": BFS shortest path";
        o.baseline = &run.bfs;
        writeSvg(run.initial, o, path);
        return;
    case Panel::Alg:
        o.title = inst.name + ": secure path";
        o.path = &run.wavefront.path;
        writeSvg(run.initial, o, path);
        return;
    case Panel::Trace:
        o.title = inst.name + ": inserted sites";
        o.trace = &run.wavefront.trace;
        o.path = &run.wavefront.path;
        writeSvg(run.grown, o, path);
        return;
    }
}

int runBench(const Globals& g, const std::vector<std::size_t>& sizes, int repeats)
{
    struct Sample {
        std::size_t n;
        double wavefront;
        double build;
    };
    std::vector<Sample> medians;
    std::vector<ResultRow> rows;
    for (std::size_t n : sizes) {
        std::vector<double> wf, build;
        for (int r = 0; r < repeats; ++r) {
            const Instance inst = genRandom(n, g.seed + static_cast<std::uint64_t>(r), g.instanceOptions());
            RunOptions opts;
            opts.verify = false;
            const RunOutput run = runInstance(inst, opts);
            wf.push_back(run.row.wavefrontTime.count());
            build.push_back(run.row.buildTime.count());
            rows.push_back(run.row);
        }
        std::sort(wf.begin(), wf.end());
        std::sort(build.begin(), build.end());
        medians.push_back({n, wf[wf.size() / 2], build[build.size() / 2]});
    }
    std::string text = formatTable(rows, tableFormat(g), true);
    text += "\nmedian over seeds\n";
    char buf[160];
    for (std::size_t i = 0; i < medians.size(); ++i) {
        std::snprintf(buf, sizeof buf, "n=%zu  build %.1f ms  wavefront %.1f ms", medians[i].n, medians[i].build * 1e3,
                      medians[i].wavefront * 1e3);
        text += buf;
        if (i > 0) {
            std::snprintf(buf, sizeof buf, "  wavefront ratio %.2f", medians[i].wavefront / medians[i - 1].wavefront);
            text += buf;
        }
        text += '\n';
    }
    if (g.out.empty())
        std::cout << text;
    else
        writeText(text, g.out);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Minimum-insertion secure paths in Voronoi diagrams"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "Perturbation seed; also the default seed of random instances")
        ->capture_default_str();
    app.add_option("--perturb", g.perturb, "Perturbation magnitude, relative to the bbox diagonal")
        ->capture_default_str();
    app.add_option("--radius-factor", g.radiusFactor, "Shrink factor applied to inserted disk radii")
        ->capture_default_str();
    app.add_option("--shrink", g.shrink, "Endpoint rectangle as a fraction of the bbox")->capture_default_str();
    app.add_option("--thin", g.thin, "Keep every k-th point of a point file")->capture_default_str();
    app.add_option("--out", g.out, "Output file (directory for compare)");
    app.add_option("--format", g.format, "Table format")->check(CLI::IsMember({"text", "csv"}))->capture_default_str();
    app.add_flag("--timing", g.timing, "Add elapsed-time columns to tables");

    const std::string instanceHelp = "hex:<side>, random:<count>[:<seed>] or a point file";

    int side = 10;
    auto* genHexCmd = app.add_subcommand("gen-hex", "Write a hexagonal-lattice instance as a point file");
    genHexCmd->add_option("side", side, "Lattice side")->required();

    std::size_t count = 2000;
    auto* genRandomCmd = app.add_subcommand("gen-random", "Write uniform random points as a point file");
    genRandomCmd->add_option("count", count, "Number of points")->required();

    std::string input;
    auto* solveCmd = app.add_subcommand("solve", "Find a minimum-insertion secure path");
    solveCmd->add_option("instance", input, instanceHelp)->required();

    auto* bfsCmd = app.add_subcommand("bfs", "BFS baseline path through the Delaunay graph");
    bfsCmd->add_option("instance", input, instanceHelp)->required();

    std::vector<std::string> inputs;
    auto* compareCmd = app.add_subcommand("compare", "Results table (and figures with --out DIR) for instances");
    compareCmd->add_option("instances", inputs, instanceHelp)->required();

    std::vector<std::size_t> sizes{8000, 16000, 32000};
    int repeats = 5;
    auto* benchCmd = app.add_subcommand("bench", "Wavefront timing on random instances of growing size");
    benchCmd->add_option("--sizes", sizes, "Instance sizes")->delimiter(',')->capture_default_str();
    benchCmd->add_option("--repeats", repeats, "Seeds per size (median reported)")->capture_default_str();

    std::string panelName = "trace";
    auto* renderCmd = app.add_subcommand("render", "Draw one figure panel as SVG");
    renderCmd->add_option("instance", input, instanceHelp)->required();
    renderCmd->add_option("--panel", panelName, "Panel to draw")
        ->check(CLI::IsMember({"input", "bfs", "alg", "trace"}))
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*genHexCmd) {
            writePoints(genHex(side, g.instanceOptions()), g.out);
        } else if (*genRandomCmd) {
            writePoints(genRandom(count, g.seed, g.instanceOptions()), g.out);
        } else if (*solveCmd) {
            const Instance inst = loadInstance(input, g);
            const RunOutput run = runInstance(inst);
            printSolve(inst, run);
            if (!g.out.empty())
                renderPanel(inst, run, Panel::Alg, g.out);
            if (run.chain && !run.chain->valid)
                return 2;
        } else if (*bfsCmd) {
            const Instance inst = loadInstance(input, g);
            const Diagram d = Diagram::build(inst.points, inst.frame, inst.cfg);
            const BfsResult bfs = bfsBaseline(d, siteId(inst.sourceIndex), siteId(inst.targetIndex));
            std::printf("instance %s: bfs intermediates %d\npath:", inst.name.c_str(), bfs.intermediates);
            for (SiteId s : bfs.path)
                std::printf(" %zu", index(s));
            std::printf("\n");
            if (!g.out.empty()) {
                RenderOverlays o;
                o.source = siteId(inst.sourceIndex);
                o.target = siteId(inst.targetIndex);
                o.baseline = &bfs;
                o.title = inst.name + ": BFS shortest path";
                writeSvg(d, o, g.out);
            }
        } else if (*compareCmd) {
            std::vector<ResultRow> rows;
            bool allValid = true;
            for (const std::string& descriptor : inputs) {
                const Instance inst = loadInstance(descriptor, g);
                const RunOutput run = runInstance(inst);
                rows.push_back(run.row);
                allValid = allValid && run.chain && run.chain->valid;
                if (!g.out.empty()) {
                    const fs::path dir(g.out);
                    fs::create_directories(dir);
                    renderPanel(inst, run, Panel::Input, dir / (inst.name + "_input.svg"));
                    renderPanel(inst, run, Panel::Bfs, dir / (inst.name + "_bfs.svg"));
                    renderPanel(inst, run, Panel::Alg, dir / (inst.name + "_alg.svg"));
                    renderPanel(inst, run, Panel::Trace, dir / (inst.name + "_trace.svg"));
                }
            }
            const std::string table = formatTable(rows, tableFormat(g), g.timing);
            std::cout << table;
            if (!g.out.empty())
                writeText(table, fs::path(g.out) / (g.format == "csv" ? "results.csv" : "results.txt"));
            if (!allValid) {
                std::cerr << "error: at least one secure path failed the chain check\n";
                return 2;
            }
        } else if (*benchCmd) {
            if (sizes.empty() || repeats < 1)
                throw Error(ErrorCode::InvalidArgument, "bench needs sizes and repeats >= 1");
            return runBench(g, sizes, repeats);
        } else if (*renderCmd) {
            if (g.out.empty())
                throw Error(ErrorCode::InvalidArgument, "render needs --out");
            const Instance inst = loadInstance(input, g);
            const RunOutput run = runInstance(inst);
            const Panel panel = panelName == "input" ? Panel::Input
                              : panelName == "bfs"   ? Panel::Bfs
                              : panelName == "alg"   ? Panel::Alg
                                                     : Panel::Trace;
            renderPanel(inst, run, panel, g.out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
