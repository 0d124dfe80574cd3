#pragma once

#include "securepath/geom.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace securepath {

/// A problem: points, the two endpoints among them and the bounding frame.
struct Instance {
    std::string name;
    std::vector<Point> points;
    std::size_t sourceIndex = 0;
    std::size_t targetIndex = 1;
    std::vector<Point> frame;
    RobustnessConfig cfg;
};

struct InstanceOptions {
    double shrink = 0.48;
    int framePointsPerSide = 16;
    double frameMargin = 0.02;
    RobustnessConfig cfg;
};

/// side x side triangular lattice with unit spacing (hexagonal cells).
Instance genHex(int side, const InstanceOptions& options = {});

/// count points uniform in the unit square, reproducible from seed.
Instance genRandom(std::size_t count, std::uint64_t seed, const InstanceOptions& options = {});

/// Points from a text file of "x y" or "x,y" lines; '#' starts a comment
/// line. Keeps every thin-th data line, then drops repeated coordinates.
Instance loadCsv(const std::filesystem::path& path, const InstanceOptions& options = {}, std::size_t thin = 1);

/// Wraps raw points into an instance: endpoints and frame per options.
Instance makeInstance(std::string name, std::vector<Point> points, const InstanceOptions& options = {});

/// The farthest pair among points inside the bounding box scaled by
/// shrinkFactor about its center. Ties go to the lexicographically smallest
/// index pair. Throws TooFewInterior.
std::pair<std::size_t, std::size_t> selectEndpoints(const std::vector<Point>& points, double shrinkFactor);

/// pointsPerSide evenly spaced points on each side of the bounding box grown
/// by margin * diagonal on every side (corners shared).
std::vector<Point> buildFrame(const std::vector<Point>& points, int pointsPerSide, double margin);

} // namespace securepath
