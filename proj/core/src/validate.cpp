#include "securepath/validate.hpp"

#include "securepath/error.hpp"

#include <algorithm>

namespace securepath {

namespace {

constexpr std::uint64_t kVerifySeedOffset = 0x632be59bd9b4e019ULL;

std::size_t findOrAppend(std::vector<Point>& sites, Point p)
{
    const auto it = std::find(sites.begin(), sites.end(), p);
    if (it != sites.end())
        return static_cast<std::size_t>(it - sites.begin());
    sites.push_back(p);
    return sites.size() - 1;
}

std::size_t indexOfPoint(const std::vector<Point>& points, Point p, const char* what)
{
    const auto it = std::find(points.begin(), points.end(), p);
    if (it == points.end())
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " is not one of the points");
    return static_cast<std::size_t>(it - points.begin());
}

} // namespace

ChainReport verifyChain(const std::vector<Point>& points, Point s, Point t, const std::vector<Point>& insertions,
                        const RobustnessConfig& cfg)
{
    std::vector<Point> sites = points;
    std::vector<std::size_t> chain;
    chain.push_back(findOrAppend(sites, s));
    for (Point q : insertions) {
        sites.push_back(q);
        chain.push_back(sites.size() - 1);
    }
    chain.push_back(findOrAppend(sites, t));

    RobustnessConfig fresh = cfg;
    fresh.rngSeed = cfg.rngSeed + kVerifySeedOffset;
    const Diagram d = Diagram::build(sites, {}, fresh);

    ChainReport report;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const bool ok = d.adjacent(siteId(chain[i]), siteId(chain[i + 1]));
        report.links.push_back(ok);
        if (!ok && !report.failedLink)
            report.failedLink = i;
    }
    report.valid = !report.failedLink;
    return report;
}

std::vector<bool> oneHopReachable(const std::vector<Point>& points, std::size_t source, int gridResolution,
                                  const std::vector<Point>& frame, const RobustnessConfig& cfg)
{
    if (source >= points.size())
        throw Error(ErrorCode::InvalidArgument, "source index out of range");
    if (gridResolution < 1)
        throw Error(ErrorCode::InvalidArgument, "grid resolution must be positive");

    const Diagram base = Diagram::build(points, frame, cfg);
    const BoundingBox box = boundingBox(points);
    const double exclusion = cfg.perturbationMagnitude * base.scale();
    const SiteId s = siteId(source);

    std::vector<bool> reachable(points.size(), false);
    // Grid nodes at i / gridResolution of the box: i / r and 2i / 2r round to
    // the same double, so a finer grid keeps every coarser candidate.
    for (int i = 0; i <= gridResolution; ++i) {
        for (int j = 0; j <= gridResolution; ++j) {
            const Point q{box.min.x + static_cast<double>(i) / gridResolution * box.width(),
                          box.min.y + static_cast<double>(j) / gridResolution * box.height()};
            const bool tooClose = std::any_of(points.begin(), points.end(),
                                              [&](Point p) { return distance(p, q) <= exclusion; });
            if (tooClose)
                continue;
            Diagram d = base;
            const InsertResult ins = d.insert({q, 0.0}, SiteOrigin::input(), s);
            if (!ins.inserted() || !d.adjacent(ins.id, s))
                continue;
            for (SiteId n : d.neighbors(ins.id))
                if (index(n) < points.size())
                    reachable[index(n)] = true;
        }
    }
    reachable[source] = false;
    return reachable;
}

bool oneHopOracle(const std::vector<Point>& points, Point s, Point probe, int gridResolution,
                  const std::vector<Point>& frame, const RobustnessConfig& cfg)
{
    const std::size_t si = indexOfPoint(points, s, "source");
    const std::size_t pi = indexOfPoint(points, probe, "probe");
    if (si == pi)
        throw Error(ErrorCode::InvalidArgument, "probe must differ from source");
    return oneHopReachable(points, si, gridResolution, frame, cfg)[pi];
}

std::vector<std::pair<std::size_t, std::size_t>> bruteDelaunayEdges(const std::vector<Point>& points)
{
    const std::size_t n = points.size();
    if (n > kBruteDelaunayLimit)
        throw Error(ErrorCode::TooLarge, "brute-force Delaunay is limited to " +
                                             std::to_string(kBruteDelaunayLimit) + " points");
    std::vector<std::pair<std::size_t, std::size_t>> out;
    auto add = [&](std::size_t a, std::size_t b) { out.emplace_back(std::min(a, b), std::max(a, b)); };

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            for (std::size_t c = b + 1; c < n; ++c) {
                const Point pa = points[a], pb = points[b], pc = points[c];
                const double det = 2.0 * orientation(pa, pb, pc);
                if (det == 0.0)
                    continue;
                const Point u = pb - pa, v = pc - pa;
                const Point rel{(v.y * dot(u, u) - u.y * dot(v, v)) / det, (u.x * dot(v, v) - v.x * dot(u, u)) / det};
                const Point center = pa + rel;
                const double r2 = dot(rel, rel);
                bool empty = true;
                for (std::size_t k = 0; k < n && empty; ++k) {
                    if (k == a || k == b || k == c)
                        continue;
                    const Point w = points[k] - center;
                    empty = dot(w, w) >= r2;
                }
                if (empty) {
                    add(a, b);
                    add(b, c);
                    add(a, c);
                }
            }
        }
    }
    // Hull pairs: every other point strictly on one side.
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            int left = 0, right = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == a || k == b)
                    continue;
                const double o = orientation(points[a], points[b], points[k]);
                left += o > 0.0;
                right += o < 0.0;
            }
            if (left + right == static_cast<int>(n) - 2 && (left == 0 || right == 0))
                add(a, b);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace securepath
