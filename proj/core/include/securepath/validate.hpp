#pragma once

#include "securepath/apollonius.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace securepath {

struct ChainReport {
    bool valid = false;
    /// Index of the first broken link: 0 is source -> first insertion.
    std::optional<std::size_t> failedLink;
    /// One entry per consecutive pair of source, insertions..., target.
    std::vector<bool> links;
};

/// Rebuilds a point diagram over points, s, t and the insertions (s and t
/// may already be among points) with a perturbation seed unrelated to
/// cfg.rngSeed, then checks that every consecutive pair of the chain shares a
/// Voronoi edge.
ChainReport verifyChain(const std::vector<Point>& points, Point s, Point t, const std::vector<Point>& insertions,
                        const RobustnessConfig& cfg = {});

/// For each input point, whether a single new point q on the grid of
/// (gridResolution + 1)^2 nodes spanning the bounding box of points can be
/// adjacent to both it and points[source]. The diagram includes frame.
std::vector<bool> oneHopReachable(const std::vector<Point>& points, std::size_t source, int gridResolution,
                                  const std::vector<Point>& frame = {}, const RobustnessConfig& cfg = {});

/// Single-probe form of oneHopReachable. s and probe must be elements of points.
bool oneHopOracle(const std::vector<Point>& points, Point s, Point probe, int gridResolution,
                  const std::vector<Point>& frame = {}, const RobustnessConfig& cfg = {});

constexpr std::size_t kBruteDelaunayLimit = 50;

/// Delaunay edges (i < j, sorted) by exhaustive empty-circumcircle tests plus
/// convex hull pairs. Throws TooLarge above kBruteDelaunayLimit points.
std::vector<std::pair<std::size_t, std::size_t>> bruteDelaunayEdges(const std::vector<Point>& points);

} // namespace securepath
