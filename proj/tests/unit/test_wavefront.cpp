#include "securepath/baseline_bfs.hpp"
#include "securepath/error.hpp"
#include "securepath/instance.hpp"
#include "securepath/validate.hpp"
#include "securepath/wavefront.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace securepath;

namespace {

struct Solved {
    Instance inst;
    Diagram grown;
    WavefrontResult result;
};

Solved solveInstance(const Instance& inst)
{
    Diagram d = Diagram::build(inst.points, inst.frame, inst.cfg);
    WavefrontResult r = solve(d, siteId(inst.sourceIndex), siteId(inst.targetIndex));
    return {inst, std::move(d), std::move(r)};
}

double gap(const Disk& a, const Disk& b)
{
    return distance(a.center, b.center) - a.radius - b.radius;
}

} // namespace

TEST(Solve, AdjacentEndpointsCostNothing)
{
    const Instance inst = genRandom(200, 4);
    Diagram d = Diagram::build(inst.points, inst.frame, inst.cfg);
    const SiteId s = siteId(inst.sourceIndex);
    const SiteId t = d.neighbors(s).front();
    ASSERT_EQ(d.site(t).kind(), SiteKind::Input);
    const WavefrontResult r = solve(d, s, t);
    EXPECT_EQ(r.path.cost, 0);
    EXPECT_TRUE(r.path.chain.empty());
    EXPECT_TRUE(r.path.insertions.empty());
    EXPECT_EQ(r.trace.rounds, 0);
}

TEST(Solve, Hex10MatchesBfs)
{
    const Solved s = solveInstance(genHex(10));
    EXPECT_EQ(s.result.path.cost, 5);
    EXPECT_EQ(s.result.path.chain.size(), 5u);
    EXPECT_EQ(s.result.path.insertions.size(), 5u);
    const Diagram d = Diagram::build(s.inst.points, s.inst.frame, s.inst.cfg);
    EXPECT_EQ(bfsBaseline(d, siteId(s.inst.sourceIndex), siteId(s.inst.targetIndex)).intermediates, 5);
}

TEST(Solve, SeparatingMiddlePointCostsOne)
{
    // No circle through s = (0,0) and t = (2,0) avoids m = (1,0), so m always
    // separates them; the surrounding ring keeps the frame out of the way.
    const std::vector<Point> pts{{0, 0},  {1, 0},   {2, 0},  {1, 1.2}, {1, -1.2}, {-1, 1},
                                 {-1, -1}, {3, 1},  {3, -1}, {-1.5, 0}, {3.5, 0}};
    const std::vector<Point> frame = buildFrame(pts, 8, 0.2);
    Diagram d = Diagram::build(pts, frame, {});
    ASSERT_FALSE(d.adjacent(siteId(0), siteId(2)));
    const WavefrontResult r = solve(d, siteId(0), siteId(2));
    EXPECT_EQ(r.path.cost, 1);
    ASSERT_EQ(r.path.chain.size(), 1u);
    EXPECT_NEAR(weightedDistance(pts[0], r.path.chain[0]), 0.0, 1e-5);
    EXPECT_TRUE(verifyChain(pts, pts[0], pts[2], r.path.insertions).valid);
    EXPECT_TRUE(oneHopOracle(pts, pts[0], pts[2], 50, frame));
}

TEST(Solve, RejectsBadEndpoints)
{
    const Instance inst = genRandom(100, 2);
    Diagram d = Diagram::build(inst.points, inst.frame, inst.cfg);
    const SiteId s = siteId(inst.sourceIndex);
    EXPECT_THROW(solve(d, s, s), Error);
    const SiteId frameSite = siteId(inst.points.size());
    ASSERT_EQ(d.site(frameSite).kind(), SiteKind::Frame);
    EXPECT_THROW(solve(d, s, frameSite), Error);
    WavefrontOptions bad;
    bad.backwardGap = 0;
    EXPECT_THROW(solve(d, s, siteId(inst.targetIndex), bad), Error);
}

TEST(RunRound, HexFirstRoundInsertsSixTangentDisks)
{
    const Instance inst = genHex(10);
    Diagram d = Diagram::build(inst.points, inst.frame, inst.cfg);
    const SiteId s = siteId(inst.sourceIndex);
    const auto queue = initialCandidates(d, s);
    EXPECT_EQ(queue.size(), 6u);
    const RoundResult r = runRound(d, queue, 1, s, std::nullopt);
    ASSERT_EQ(r.inserted.size(), 6u);
    EXPECT_EQ(r.skipped, 0u);
    for (SiteId id : r.inserted) {
        const Disk& disk = d.site(id).disk;
        EXPECT_NEAR(weightedDistance(d.site(s).disk.center, disk), 0.0, 1e-5);
        int inputTouching = 0;
        for (std::size_t i = 0; i < inst.points.size(); ++i)
            if (siteId(i) != s && std::abs(weightedDistance(d.site(siteId(i)).disk.center, disk)) < 1e-5)
                ++inputTouching;
        EXPECT_EQ(inputTouching, 2);
        EXPECT_NEAR(disk.radius, 1.0 / std::sqrt(3.0), 1e-5);
    }
    for (const CandidateVertex& c : r.next)
        EXPECT_EQ(c.generation, 2);
}

TEST(RunRound, GenerationMismatchThrows)
{
    const Instance inst = genHex(10);
    Diagram d = Diagram::build(inst.points, inst.frame, inst.cfg);
    const SiteId s = siteId(inst.sourceIndex);
    EXPECT_THROW(runRound(d, initialCandidates(d, s), 2, s, std::nullopt), Error);
}

TEST(Admissible, BackwardBlockingRule)
{
    const Instance inst = genHex(10);
    Diagram d = Diagram::build(inst.points, inst.frame, inst.cfg);
    const SiteId s = siteId(inst.sourceIndex);
    const RoundResult r1 = runRound(d, initialCandidates(d, s), 1, s, std::nullopt);
    const RoundResult r2 = runRound(d, r1.next, 2, s, std::nullopt);
    ASSERT_GE(r2.inserted.size(), 3u);
    const SiteId g1 = r1.inserted[0];
    const SiteId a = r2.inserted[0], b = r2.inserted[1], c = r2.inserted[2];
    SiteId input = s;
    for (std::size_t i = 0; i < inst.points.size(); ++i)
        if (siteId(i) != s) {
            input = siteId(i);
            break;
        }
    auto vertex = [](SiteId x, SiteId y, SiteId z) { return DiagramVertex{{0, 0}, 0.5, {x, y, z}}; };

    EXPECT_TRUE(admissible(vertex(a, b, input), 2, d, s));
    EXPECT_FALSE(admissible(vertex(a, g1, input), 2, d, s));
    EXPECT_FALSE(admissible(vertex(a, b, c), 2, d, s));
    EXPECT_FALSE(admissible(vertex(a, s, input), 2, d, s));
    EXPECT_FALSE(admissible(vertex(a, b, siteId(inst.points.size())), 2, d, s));
    EXPECT_FALSE(admissible(DiagramVertex{{0, 0}, 0.0, {a, b, input}}, 2, d, s));

    WavefrontOptions relaxed;
    relaxed.backwardGap = 2;
    EXPECT_TRUE(admissible(vertex(a, g1, input), 2, d, s, relaxed));
}

TEST(Reconstruct, SourceAsFinalSiteNeedsAdjacency)
{
    const Instance inst = genHex(10);
    const Diagram d = Diagram::build(inst.points, inst.frame, inst.cfg);
    EXPECT_THROW(reconstruct(d, siteId(inst.sourceIndex), siteId(inst.targetIndex), siteId(inst.sourceIndex)), Error);
}

class WavefrontProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(WavefrontProperties, ChainTraceAndBaseline)
{
    const Instance inst = genRandom(300, GetParam());
    const Solved s = solveInstance(inst);
    const Diagram& d = s.grown;
    const SiteId source = siteId(inst.sourceIndex);
    const double rf = inst.cfg.radiusFactor;

    // Generation-1 disks touch the source; every later disk touches its parent.
    for (std::size_t g = 0; g < s.result.trace.generations.size(); ++g) {
        EXPECT_FALSE(s.result.trace.generations[g].empty()) << "round " << g + 1;
        for (SiteId id : s.result.trace.generations[g]) {
            const SiteRecord& rec = d.site(id);
            ASSERT_EQ(rec.origin.generation, static_cast<int>(g) + 1);
            ASSERT_TRUE(rec.origin.parent);
            const Disk& parent = d.site(*rec.origin.parent).disk;
            const double slack = (1.0 - rf) * (rec.disk.radius + parent.radius) / rf + d.absTolerance();
            if (g == 0)
                EXPECT_EQ(*rec.origin.parent, source);
            else
                EXPECT_EQ(d.site(*rec.origin.parent).origin.generation, static_cast<int>(g));
            EXPECT_LE(std::abs(gap(rec.disk, parent)), slack) << "site " << index(id);
        }
    }

    // Rounds are bounded by the number of input sites.
    EXPECT_LE(s.result.trace.rounds, static_cast<int>(inst.points.size()));

    // Cost equals chain length and never exceeds the BFS baseline.
    const Diagram initial = Diagram::build(inst.points, inst.frame, inst.cfg);
    const BfsResult bfs = bfsBaseline(initial, source, siteId(inst.targetIndex));
    EXPECT_EQ(s.result.path.cost, static_cast<int>(s.result.path.chain.size()));
    EXPECT_LE(s.result.path.cost, bfs.intermediates);

    // Frame sites never carry the path.
    for (SiteId id : s.result.path.chainSites)
        EXPECT_EQ(d.site(id).kind(), SiteKind::Inserted);

    const ChainReport report = verifyChain(inst.points, inst.points[inst.sourceIndex], inst.points[inst.targetIndex],
                                           s.result.path.insertions, inst.cfg);
    EXPECT_TRUE(report.valid);
}

TEST_P(WavefrontProperties, ReachGrowsWithGenerations)
{
    const Instance inst = genRandom(200, GetParam());
    Diagram d = Diagram::build(inst.points, inst.frame, inst.cfg);
    const SiteId s = siteId(inst.sourceIndex);
    std::set<SiteId> reached;
    std::vector<SiteId> all;
    auto queue = initialCandidates(d, s);
    for (int round = 1; round <= 4 && !queue.empty(); ++round) {
        RoundResult r = runRound(d, queue, round, s, std::nullopt);
        all.insert(all.end(), r.inserted.begin(), r.inserted.end());
        std::set<SiteId> now;
        for (SiteId id : all)
            if (d.isLive(id))
                for (SiteId n : d.neighbors(id))
                    if (d.site(n).kind() == SiteKind::Input)
                        now.insert(n);
        EXPECT_TRUE(std::includes(now.begin(), now.end(), reached.begin(), reached.end())) << "round " << round;
        reached = std::move(now);
        queue = std::move(r.next);
    }
}

TEST_P(WavefrontProperties, Deterministic)
{
    const Instance inst = genRandom(300, GetParam());
    const Solved a = solveInstance(inst);
    const Solved b = solveInstance(inst);
    EXPECT_EQ(a.result.path.chainSites, b.result.path.chainSites);
    ASSERT_EQ(a.result.path.insertions.size(), b.result.path.insertions.size());
    for (std::size_t i = 0; i < a.result.path.insertions.size(); ++i) {
        EXPECT_EQ(a.result.path.insertions[i].x, b.result.path.insertions[i].x);
        EXPECT_EQ(a.result.path.insertions[i].y, b.result.path.insertions[i].y);
    }
    EXPECT_EQ(a.result.trace.generations, b.result.trace.generations);
    EXPECT_EQ(a.result.trace.skipped, b.result.trace.skipped);
}

INSTANTIATE_TEST_SUITE_P(Seeds, WavefrontProperties, ::testing::Values(1u, 2u, 3u, 4u, 5u, 6u));
