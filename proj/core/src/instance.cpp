#include "securepath/instance.hpp"

#include "securepath/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <set>

namespace securepath {

namespace {

std::string padded(std::size_t value, int width)
{
    std::string s = std::to_string(value);
    if (static_cast<int>(s.size()) < width)
        s.insert(0, static_cast<std::size_t>(width) - s.size(), '0');
    return s;
}

bool parseDouble(std::string_view token, double& out)
{
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size() && std::isfinite(out);
}

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    auto isSep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\r'; };
    while (i < line.size()) {
        while (i < line.size() && isSep(line[i]))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && !isSep(line[i]))
            ++i;
        if (i > start)
            tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

} // namespace

Instance makeInstance(std::string name, std::vector<Point> points, const InstanceOptions& options)
{
    options.cfg.validate();
    Instance inst;
    inst.name = std::move(name);
    inst.points = std::move(points);
    std::tie(inst.sourceIndex, inst.targetIndex) = selectEndpoints(inst.points, options.shrink);
    inst.frame = buildFrame(inst.points, options.framePointsPerSide, options.frameMargin);
    inst.cfg = options.cfg;
    return inst;
}

Instance genHex(int side, const InstanceOptions& options)
{
    if (side < 3)
        throw Error(ErrorCode::InvalidArgument, "hex side must be >= 3");
    const double rowHeight = std::numbers::sqrt3 / 2.0;
    std::vector<Point> points;
    points.reserve(static_cast<std::size_t>(side) * static_cast<std::size_t>(side));
    for (int row = 0; row < side; ++row)
        for (int col = 0; col < side; ++col)
            points.push_back({col + 0.5 * (row % 2), row * rowHeight});
    return makeInstance("hex_" + padded(static_cast<std::size_t>(side), 3), std::move(points), options);
}

Instance genRandom(std::size_t count, std::uint64_t seed, const InstanceOptions& options)
{
    if (count < 10)
        throw Error(ErrorCode::InvalidArgument, "random instances need at least 10 points");
    // Explicit 53-bit mapping: uniform_real_distribution is not specified
    // bit-for-bit across standard libraries.
    std::mt19937_64 rng(seed);
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<Point> points(count);
    for (Point& p : points) {
        p.x = unit();
        p.y = unit();
    }
    return makeInstance("rand_" + padded(count, 5) + "_s" + std::to_string(seed), std::move(points), options);
}

Instance loadCsv(const std::filesystem::path& path, const InstanceOptions& options, std::size_t thin)
{
    if (thin == 0)
        throw Error(ErrorCode::InvalidArgument, "thin must be >= 1");
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + path.string());

    std::vector<Point> points;
    std::set<std::pair<double, double>> seen;
    std::string line;
    std::size_t lineNo = 0;
    std::size_t dataLines = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const auto tokens = split(line);
        if (tokens.empty() || tokens.front().front() == '#')
            continue;
        Point p;
        if (tokens.size() != 2 || !parseDouble(tokens[0], p.x) || !parseDouble(tokens[1], p.y))
            throw Error(ErrorCode::ParseError, path.string() + ":" + std::to_string(lineNo) + ": expected two numbers");
        if (dataLines++ % thin != 0)
            continue;
        if (seen.insert({p.x, p.y}).second)
            points.push_back(p);
    }
    if (points.size() < 10)
        throw Error(ErrorCode::TooFewPoints, path.string() + " has " + std::to_string(points.size()) +
                                                 " distinct points, need 10");
    return makeInstance(path.stem().string(), std::move(points), options);
}

std::pair<std::size_t, std::size_t> selectEndpoints(const std::vector<Point>& points, double shrinkFactor)
{
    if (!(shrinkFactor > 0.0 && shrinkFactor <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "shrink factor must lie in (0, 1]");
    const BoundingBox box = boundingBox(points);
    const Point c = box.center();
    const double hx = 0.5 * box.width() * shrinkFactor * (1.0 + 1e-12);
    const double hy = 0.5 * box.height() * shrinkFactor * (1.0 + 1e-12);
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (std::abs(points[i].x - c.x) <= hx && std::abs(points[i].y - c.y) <= hy)
            inside.push_back(i);
    if (inside.size() < 2)
        throw Error(ErrorCode::TooFewInterior, "fewer than two points inside the endpoint rectangle");

    std::pair<std::size_t, std::size_t> best{inside[0], inside[1]};
    double bestDist = -1.0;
    for (std::size_t a = 0; a < inside.size(); ++a) {
        for (std::size_t b = a + 1; b < inside.size(); ++b) {
            const double dist = distance(points[inside[a]], points[inside[b]]);
            // Relative slack so lattice ties are decided by index, not rounding.
            if (dist > bestDist * (1.0 + 1e-12)) {
                bestDist = dist;
                best = {inside[a], inside[b]};
            }
        }
    }
    return best;
}

std::vector<Point> buildFrame(const std::vector<Point>& points, int pointsPerSide, double margin)
{
    if (pointsPerSide < 2)
        throw Error(ErrorCode::InvalidArgument, "frame needs >= 2 points per side");
    if (!(margin > 0.0))
        throw Error(ErrorCode::InvalidArgument, "frame margin must be > 0");
    const BoundingBox box = boundingBox(points);
    const double pad = margin * box.diagonal();
    const Point lo{box.min.x - pad, box.min.y - pad};
    const Point hi{box.max.x + pad, box.max.y + pad};
    std::vector<Point> frame;
    const int steps = pointsPerSide - 1;
    auto lerp = [](double a, double b, int i, int n) { return a + (b - a) * i / n; };
    // Counter-clockwise from the lower-left corner.
    for (int i = 0; i < steps; ++i)
        frame.push_back({lerp(lo.x, hi.x, i, steps), lo.y});
    for (int i = 0; i < steps; ++i)
        frame.push_back({hi.x, lerp(lo.y, hi.y, i, steps)});
    for (int i = 0; i < steps; ++i)
        frame.push_back({lerp(hi.x, lo.x, i, steps), hi.y});
    for (int i = 0; i < steps; ++i)
        frame.push_back({lo.x, lerp(hi.y, lo.y, i, steps)});
    return frame;
}

} // namespace securepath
