#include "securepath/pipeline.hpp"

#include <algorithm>
#include <cstdio>

namespace securepath {

RunOutput runInstance(const Instance& inst, const RunOptions& options)
{
    using Clock = std::chrono::steady_clock;
    const SiteId source = siteId(inst.sourceIndex);
    const SiteId target = siteId(inst.targetIndex);

    const auto t0 = Clock::now();
    Diagram initial = Diagram::build(inst.points, inst.frame, inst.cfg);
    const auto t1 = Clock::now();
    Diagram grown = initial;
    const auto t2 = Clock::now();
    WavefrontResult wf = solve(grown, source, target, options.wavefront);
    const auto t3 = Clock::now();
    BfsResult bfs = bfsBaseline(initial, source, target);

    ResultRow row;
    row.name = inst.name;
    row.pointCount = inst.points.size();
    row.bfsLength = bfs.intermediates;
    row.algLength = wf.path.cost;
    row.rounds = wf.trace.rounds;
    row.insertedCount = wf.trace.insertedCount();
    row.buildTime = t1 - t0;
    row.wavefrontTime = t3 - t2;

    std::optional<ChainReport> chain;
    if (options.verify)
        chain = verifyChain(inst.points, inst.points[inst.sourceIndex], inst.points[inst.targetIndex],
                            wf.path.insertions, inst.cfg);
    return {std::move(row), std::move(initial), std::move(grown), std::move(bfs), std::move(wf), std::move(chain)};
}

namespace {

std::string milliseconds(Seconds s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", s.count() * 1e3);
    return buf;
}

std::vector<std::string> cells(const ResultRow& r, bool withTiming)
{
    std::vector<std::string> out{r.name,
                                 std::to_string(r.pointCount),
                                 std::to_string(r.bfsLength),
                                 std::to_string(r.algLength),
                                 std::to_string(r.rounds),
                                 std::to_string(r.insertedCount)};
    if (withTiming) {
        out.push_back(milliseconds(r.buildTime));
        out.push_back(milliseconds(r.wavefrontTime));
    }
    return out;
}

} // namespace

std::string formatTable(const std::vector<ResultRow>& rows, TableFormat format, bool withTiming)
{
    std::vector<std::string> header{"name", "points", "bfs", "alg", "rounds", "inserted"};
    if (withTiming) {
        header.push_back("build_ms");
        header.push_back("wavefront_ms");
    }
    std::vector<std::vector<std::string>> table{header};
    for (const ResultRow& r : rows)
        table.push_back(cells(r, withTiming));

    std::string out;
    if (format == TableFormat::Csv) {
        for (const auto& line : table) {
            for (std::size_t i = 0; i < line.size(); ++i) {
                out += line[i];
                out += i + 1 < line.size() ? ',' : '\n';
            }
        }
        return out;
    }

    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& line : table)
        for (std::size_t i = 0; i < line.size(); ++i)
            width[i] = std::max(width[i], line[i].size());
    for (const auto& line : table) {
        std::string text;
        for (std::size_t i = 0; i < line.size(); ++i) {
            // Name left-aligned, numbers right-aligned.
            const std::string pad(width[i] - line[i].size(), ' ');
            text += i == 0 ? line[i] + pad : pad + line[i];
            if (i + 1 < line.size())
                text += "  ";
        }
        out += text + '\n';
    }
    return out;
}

} // namespace securepath
