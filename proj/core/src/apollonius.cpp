#include "securepath/apollonius.hpp"

#include "securepath/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace securepath {

namespace {

// Super sites sit this many bounding-box diagonals from the center.
constexpr double kSuperDistance = 1e4;
constexpr int kMaxRepairs = 64;
// Arc fraction trimmed at each end when choosing a contact disk, so the disk
// never touches the third site of an endpoint vertex.
constexpr double kContactTrim = 0.01;

constexpr int next3(int i) { return i == 2 ? 0 : i + 1; }
constexpr int prev3(int i) { return i == 0 ? 2 : i - 1; }

} // namespace

template <typename Fn>
void Diagram::forEachFaceAround(SiteId s, Fn&& fn) const
{
    const std::int32_t start = siteFace_[index(s)];
    if (start < 0)
        return;
    std::int32_t f = start;
    do {
        const int i = indexOf(f, s);
        fn(f, i);
        const std::int32_t next = faces_[f].n[next3(i)];
        if (next < 0) {
            // Hull reached (super sites only): sweep the other way from start.
            std::int32_t g = faces_[start].n[prev3(indexOf(start, s))];
            while (g >= 0) {
                const int j = indexOf(g, s);
                fn(g, j);
                g = faces_[g].n[prev3(j)];
            }
            return;
        }
        f = next;
    } while (f != start);
}

std::vector<std::int32_t> Diagram::facesAround(SiteId s) const
{
    std::vector<std::int32_t> out;
    forEachFaceAround(s, [&](std::int32_t f, int) { out.push_back(f); });
    return out;
}

int Diagram::indexOf(std::int32_t f, SiteId s) const
{
    const Face& face = faces_[f];
    for (int i = 0; i < 3; ++i)
        if (face.v[i] == s)
            return i;
    return -1;
}

int Diagram::mirrorIndex(std::int32_t f, int k) const
{
    const Face& face = faces_[f];
    const std::int32_t g = face.n[k];
    if (g < 0)
        return -1;
    const SiteId a = face.v[next3(k)];
    const SiteId b = face.v[prev3(k)];
    const Face& other = faces_[g];
    for (int j = 0; j < 3; ++j)
        if (other.n[j] == f && other.v[next3(j)] == b && other.v[prev3(j)] == a)
            return j;
    return -1;
}

SiteId Diagram::addSite(const Disk& disk, SiteOrigin origin)
{
    sites_.push_back({disk, origin, SiteStatus::Live});
    siteFace_.push_back(-1);
    return siteId(sites_.size() - 1);
}

std::int32_t Diagram::newFace(std::array<SiteId, 3> v, const Disk& circle)
{
    std::int32_t f;
    if (!freeFaces_.empty()) {
        f = freeFaces_.back();
        freeFaces_.pop_back();
    } else {
        f = static_cast<std::int32_t>(faces_.size());
        faces_.emplace_back();
        mark_.push_back(0);
    }
    Face& face = faces_[f];
    face.v = v;
    face.n = {-1, -1, -1};
    face.center = circle.center;
    face.clearance = circle.radius;
    face.alive = true;
    return f;
}

void Diagram::freeFace(std::int32_t f)
{
    faces_[f].alive = false;
    freeFaces_.push_back(f);
}

double Diagram::conflictMargin(std::int32_t f, const Disk& disk) const
{
    const Face& face = faces_[f];
    return weightedDistance(face.center, disk) - face.clearance;
}

bool Diagram::conflicts(std::int32_t f, const Disk& disk) const
{
    return conflictMargin(f, disk) < 0.0;
}

namespace {

// Signs of the conflict function on the pieces of the arc between two
// Voronoi vertices, split at the points where the new disk is equidistant
// from both sites.
template <typename Visit>
void visitArcPieces(const Disk& a, const Disk& b, Point from, Point to, const Disk& disk, Visit&& visit)
{
    const Bisector bis(a, b);
    double lo = bis.parameterOf(from);
    double hi = bis.parameterOf(to);
    if (lo > hi)
        std::swap(lo, hi);
    std::vector<double> cuts{lo};
    for (const Disk& c : tritangentCircles(a, b, disk)) {
        const double s = bis.parameterOf(c.center);
        if (s > lo && s < hi)
            cuts.push_back(s);
    }
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
        const double margin = weightedDistance(bis.pointAt(mid), disk) - bis.clearanceAt(mid);
        if (!visit(margin))
            return;
    }
}

} // namespace

bool Diagram::edgeInteriorSurvives(std::int32_t f, int k, const Disk& disk) const
{
    // Canonical side so both faces sharing the edge reach the same verdict.
    const std::int32_t g = faces_[f].n[k];
    if (g >= 0 && g < f) {
        const int j = mirrorIndex(f, k);
        if (j >= 0)
            return edgeInteriorSurvives(g, j, disk);
    }
    const Face& face = faces_[f];
    const Disk& a = sites_[index(face.v[next3(k)])].disk;
    const Disk& b = sites_[index(face.v[prev3(k)])].disk;
    // Among points the conflict region is always a topological disk.
    if (a.radius == 0.0 && b.radius == 0.0 && disk.radius == 0.0)
        return false;
    bool survives = false;
    visitArcPieces(a, b, face.center, faces_[g].center, disk, [&](double margin) {
        survives = margin >= 0.0;
        return !survives;
    });
    return survives;
}

bool Diagram::edgeInteriorConflicts(std::int32_t f, int k, const Disk& disk) const
{
    const Face& face = faces_[f];
    const std::int32_t g = face.n[k];
    if (g < 0)
        return false;
    const Disk& a = sites_[index(face.v[next3(k)])].disk;
    const Disk& b = sites_[index(face.v[prev3(k)])].disk;
    bool hit = false;
    visitArcPieces(a, b, face.center, faces_[g].center, disk, [&](double margin) {
        hit = margin < 0.0;
        return !hit;
    });
    return hit;
}

bool Diagram::isBoundaryEdge(std::int32_t f, int k, const Disk& disk) const
{
    const std::int32_t g = faces_[f].n[k];
    return g < 0 || mark_[g] != epoch_ || edgeInteriorSurvives(f, k, disk);
}

Diagram Diagram::build(const std::vector<Point>& points, const std::vector<Point>& frame,
                       const RobustnessConfig& cfg)
{
    cfg.validate();
    std::vector<Point> all = points;
    all.insert(all.end(), frame.begin(), frame.end());
    if (all.size() < 3)
        throw Error(ErrorCode::DegenerateInput, "need at least 3 sites, got " + std::to_string(all.size()));
    for (const Point& p : all)
        if (!isFinite(p))
            throw Error(ErrorCode::InvalidArgument, "non-finite coordinate");

    const double rawDiagonal = boundingBox(all).diagonal();
    if (!(rawDiagonal > 0.0))
        throw Error(ErrorCode::DegenerateInput, "all sites coincide");
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = perturb(all[i], cfg, rawDiagonal, i);

    {
        const Point a = all.front();
        Point b = a;
        for (const Point& p : all)
            if (distance(a, p) > distance(a, b))
                b = p;
        double widest = 0.0;
        for (const Point& p : all)
            widest = std::max(widest, std::abs(orientation(a, b, p)));
        if (!(widest > 1e-12 * rawDiagonal * rawDiagonal))
            throw Error(ErrorCode::DegenerateInput, "sites are collinear");
    }

    Diagram d;
    d.cfg_ = cfg;
    d.bbox_ = boundingBox(all);
    d.scale_ = d.bbox_.diagonal();
    d.inputCount_ = points.size();
    d.superBegin_ = all.size();
    d.sites_.reserve(all.size() + 3);
    for (std::size_t i = 0; i < all.size(); ++i)
        d.addSite({all[i], 0.0}, i < points.size() ? SiteOrigin::input() : SiteOrigin::frame());

    const Point c = d.bbox_.center();
    std::array<SiteId, 3> super{};
    for (int k = 0; k < 3; ++k) {
        const double angle = std::numbers::pi / 2.0 + k * 2.0 * std::numbers::pi / 3.0;
        const double r = kSuperDistance * d.scale_;
        super[k] = d.addSite({{c.x + r * std::cos(angle), c.y + r * std::sin(angle)}, 0.0}, SiteOrigin::frame());
    }
    const auto circle = tritangentCircle(d.site(super[0]).disk, d.site(super[1]).disk, d.site(super[2]).disk);
    if (!circle)
        throw Error(ErrorCode::Internal, "super triangle has no circumcircle");
    const std::int32_t root = d.newFace(super, *circle);
    for (SiteId s : super)
        d.siteFace_[index(s)] = root;

    std::vector<std::size_t> order(all.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::mt19937_64 rng(cfg.rngSeed);
    std::shuffle(order.begin(), order.end(), rng);

    SiteId last = super[0];
    for (std::size_t i : order) {
        const SiteId q = siteId(i);
        const Disk& disk = d.sites_[i].disk;
        const SiteId nearest = d.nearestSite(disk.center, last);
        if (weightedDistance(disk.center, d.site(nearest).disk) <= -disk.radius) {
            d.sites_[i].status = SiteStatus::Hidden;
            continue;
        }
        const std::int32_t seed = d.findSeedFace(nearest, disk);
        if (seed < 0)
            throw Error(ErrorCode::Internal, "no conflicting face for input point");
        d.insertAtSeed(q, seed);
        last = q;
    }
    return d;
}

SiteId Diagram::nearestSite(Point p, SiteId hint) const
{
    if (!isLive(hint) || siteFace_[index(hint)] < 0)
        throw Error(ErrorCode::InvalidHint, "hint site is not live");
    SiteId current = hint;
    double best = weightedDistance(p, sites_[index(current)].disk);
    for (;;) {
        SiteId next = current;
        forEachFaceAround(current, [&](std::int32_t f, int i) {
            const SiteId s = faces_[f].v[next3(i)];
            const double w = weightedDistance(p, sites_[index(s)].disk);
            if (w < best) {
                best = w;
                next = s;
            }
        });
        if (next == current)
            return current;
        current = next;
    }
}

std::int32_t Diagram::findSeedFace(SiteId nearest, const Disk& disk) const
{
    std::int32_t seed = -1;
    double best = 0.0;
    forEachFaceAround(nearest, [&](std::int32_t f, int) {
        const double m = conflictMargin(f, disk);
        if (m < best) {
            best = m;
            seed = f;
        }
    });
    return seed;
}

InsertResult Diagram::insert(const Disk& disk, SiteOrigin origin, SiteId hint)
{
    if (!isFinite(disk.center) || !(disk.radius >= 0.0) || !std::isfinite(disk.radius))
        throw Error(ErrorCode::InvalidArgument, "disk must have finite center and radius >= 0");
    if (!isLive(hint) || siteFace_[index(hint)] < 0)
        throw Error(ErrorCode::InvalidHint, "hint site is not live");

    const SiteId nearest = nearestSite(disk.center, hint);
    // Containment up to the tolerance counts as hidden: such a disk could own
    // at most a sliver too thin to resolve.
    if (weightedDistance(disk.center, sites_[index(nearest)].disk) <= -disk.radius + absTolerance())
        return {InsertResult::Status::Hidden, {}};

    const std::int32_t seed = findSeedFace(nearest, disk);
    if (seed >= 0) {
        const SiteId q = addSite(disk, origin);
        insertAtSeed(q, seed);
        return {InsertResult::Status::Inserted, q};
    }

    // No Voronoi vertex is closer to the disk: the new cell, if any, only
    // cuts through the interior of one edge and the site gets degree two.
    for (std::int32_t f : facesAround(nearest)) {
        for (int k = 0; k < 3; ++k) {
            if (!edgeInteriorConflicts(f, k, disk))
                continue;
            const Disk& a = sites_[index(faces_[f].v[next3(k)])].disk;
            const Disk& b = sites_[index(faces_[f].v[prev3(k)])].disk;
            const auto c1 = tritangentCircle(b, a, disk);
            const auto c2 = tritangentCircle(a, b, disk);
            if (!c1 || !c2 || mirrorIndex(f, k) < 0)
                continue;
            const SiteId q = addSite(disk, origin);
            insertOnEdge(q, f, k, *c1, *c2);
            return {InsertResult::Status::Inserted, q};
        }
    }
    // Whatever conflict exists is below what the predicates can resolve.
    return {InsertResult::Status::Hidden, {}};
}

void Diagram::insertAtSeed(SiteId q, std::int32_t seed)
{
    const Disk disk = sites_[index(q)].disk;
    const double tol = absTolerance();
    std::unordered_set<std::int32_t> forbidden;

    struct BoundaryEdge {
        std::int32_t face;
        int k;
        SiteId a;
        SiteId b;
        Disk circle;
        std::int32_t created = -1;
    };

    for (int attempt = 0; attempt < kMaxRepairs; ++attempt) {
        ++epoch_;
        std::vector<std::int32_t> cavity{seed};
        mark_[seed] = epoch_;
        for (std::size_t head = 0; head < cavity.size(); ++head) {
            const std::int32_t f = cavity[head];
            for (int k = 0; k < 3; ++k) {
                const std::int32_t g = faces_[f].n[k];
                if (g < 0 || mark_[g] == epoch_ || forbidden.contains(g) || !conflicts(g, disk))
                    continue;
                if (edgeInteriorSurvives(f, k, disk)) {
                    continue;
                }
                mark_[g] = epoch_;
                cavity.push_back(g);
            }
        }

        std::vector<BoundaryEdge> boundary;
        std::unordered_map<std::int64_t, std::size_t> boundaryIndex;
        for (std::int32_t f : cavity) {
            for (int k = 0; k < 3; ++k) {
                if (!isBoundaryEdge(f, k, disk))
                    continue;
                boundaryIndex.emplace(std::int64_t{f} * 3 + k, boundary.size());
                boundary.push_back({f, k, faces_[f].v[next3(k)], faces_[f].v[prev3(k)], {}, -1});
            }
        }

        // Boundary edge following (f, k) counter-clockwise around the cavity.
        auto successor = [&](std::size_t e) -> std::int64_t {
            std::int32_t cur = boundary[e].face;
            int j = next3(boundary[e].k);
            const SiteId pivot = boundary[e].b;
            for (std::size_t guard = 0; guard <= 3 * cavity.size(); ++guard) {
                const auto it = boundaryIndex.find(std::int64_t{cur} * 3 + j);
                if (it != boundaryIndex.end())
                    return static_cast<std::int64_t>(it->second);
                cur = faces_[cur].n[j];
                j = prev3(indexOf(cur, pivot));
            }
            return -1;
        };

        std::vector<std::int64_t> succ(boundary.size(), -1);
        for (std::size_t e = 0; e < boundary.size(); ++e)
            succ[e] = successor(e);

        bool retry = false;
        auto forbid = [&](std::int32_t f) {
            if (f != seed && forbidden.insert(f).second)
                retry = true;
        };

        // One closed cycle expected; faces bordering stray cycles are dropped.
        std::vector<char> onCycle(boundary.size(), 0);
        if (!boundary.empty()) {
            std::int64_t e = 0;
            for (std::size_t steps = 0; steps <= boundary.size() && e >= 0 && !onCycle[e]; ++steps) {
                onCycle[e] = 1;
                e = succ[e];
            }
            if (e != 0) {
                for (std::size_t i = 0; i < boundary.size(); ++i)
                    forbid(boundary[i].face);
            } else {
                for (std::size_t i = 0; i < boundary.size(); ++i)
                    if (!onCycle[i])
                        forbid(boundary[i].face);
            }
        }
        if (boundary.size() < 2)
            throw Error(ErrorCode::Internal, "degenerate cavity");
        if (retry)
            continue;

        for (BoundaryEdge& edge : boundary) {
            const auto circle = tritangentCircle(sites_[index(edge.a)].disk, sites_[index(edge.b)].disk, disk);
            if (!circle) {
                if (edge.face == seed)
                    throw Error(ErrorCode::Internal, "no vertex circle on a boundary edge of the seed face");
                forbid(edge.face);
                continue;
            }
            edge.circle = *circle;
        }
        if (retry)
            continue;

        // Sites enclosed by the cavity lose their cell; that is only right when
        // the new disk dominates them.
        std::unordered_set<std::int32_t> onBoundary;
        for (const BoundaryEdge& edge : boundary)
            onBoundary.insert(static_cast<std::int32_t>(edge.a));
        std::vector<SiteId> enclosed;
        for (std::int32_t f : cavity) {
            for (SiteId s : faces_[f].v) {
                if (onBoundary.contains(static_cast<std::int32_t>(s))
                    || std::find(enclosed.begin(), enclosed.end(), s) != enclosed.end())
                    continue;
                const Disk& sd = sites_[index(s)].disk;
                if (isSuper(s) || weightedDistance(sd.center, disk) > -sd.radius + tol) {
                    std::int32_t worst = -1;
                    double worstMargin = -std::numeric_limits<double>::infinity();
                    for (std::int32_t g : cavity) {
                        if (g != seed && indexOf(g, s) >= 0 && conflictMargin(g, disk) > worstMargin) {
                            worstMargin = conflictMargin(g, disk);
                            worst = g;
                        }
                    }
                    if (worst < 0)
                        throw Error(ErrorCode::Internal, "cannot repair cavity around enclosed site");
                    forbid(worst);
                } else {
                    enclosed.push_back(s);
                }
            }
        }
        if (retry)
            continue;

        // Commit: fan of new faces around q.
        std::vector<int> outerMirror(boundary.size(), -1);
        for (std::size_t e = 0; e < boundary.size(); ++e)
            outerMirror[e] = mirrorIndex(boundary[e].face, boundary[e].k);
        for (BoundaryEdge& edge : boundary)
            edge.created = newFace({edge.a, edge.b, q}, edge.circle);
        for (std::size_t e = 0; e < boundary.size(); ++e) {
            const BoundaryEdge& edge = boundary[e];
            Face& face = faces_[edge.created];
            const std::int32_t g = faces_[edge.face].n[edge.k];
            if (g < 0) {
                face.n[2] = -1;
            } else if (mark_[g] == epoch_) {
                // Surviving edge inside the cavity: pair with the new face on its other side.
                const auto it = boundaryIndex.find(std::int64_t{g} * 3 + outerMirror[e]);
                if (it == boundaryIndex.end())
                    throw Error(ErrorCode::Internal, "unpaired surviving edge");
                face.n[2] = boundary[it->second].created;
            } else {
                face.n[2] = g;
                faces_[g].n[outerMirror[e]] = edge.created;
            }
            const std::int32_t nextFace = boundary[static_cast<std::size_t>(succ[e])].created;
            faces_[edge.created].n[0] = nextFace;
            faces_[nextFace].n[1] = edge.created;
            siteFace_[index(edge.a)] = edge.created;
        }
        siteFace_[index(q)] = boundary.front().created;
        for (SiteId s : enclosed) {
            sites_[index(s)].status = SiteStatus::Hidden;
            siteFace_[index(s)] = -1;
        }
        for (std::int32_t f : cavity)
            freeFace(f);
        return;
    }
    throw Error(ErrorCode::Internal, "cavity repair did not converge");
}

void Diagram::insertOnEdge(SiteId q, std::int32_t f, int k, const Disk& c1, const Disk& c2)
{
    const std::int32_t g = faces_[f].n[k];
    const int mk = mirrorIndex(f, k);
    const SiteId a = faces_[f].v[next3(k)];
    const SiteId b = faces_[f].v[prev3(k)];
    const std::int32_t h1 = newFace({b, a, q}, c1);
    const std::int32_t h2 = newFace({a, b, q}, c2);
    faces_[h1].n = {h2, h2, f};
    faces_[h2].n = {h1, h1, g};
    faces_[f].n[k] = h1;
    faces_[g].n[mk] = h2;
    siteFace_[index(q)] = h1;
}

std::vector<SiteId> Diagram::neighbors(SiteId s) const
{
    if (!isLive(s))
        throw Error(ErrorCode::HiddenSite, "site " + std::to_string(index(s)) + " has no cell");
    std::vector<SiteId> out;
    forEachFaceAround(s, [&](std::int32_t f, int i) {
        const SiteId t = faces_[f].v[next3(i)];
        if (std::find(out.begin(), out.end(), t) == out.end())
            out.push_back(t);
    });
    return out;
}

bool Diagram::adjacent(SiteId a, SiteId b) const
{
    if (!isLive(a) || !isLive(b))
        return false;
    bool found = false;
    forEachFaceAround(a, [&](std::int32_t f, int i) {
        if (faces_[f].v[next3(i)] == b || faces_[f].v[prev3(i)] == b)
            found = true;
    });
    return found;
}

std::vector<DiagramVertex> Diagram::cellVertices(SiteId s) const
{
    if (!isLive(s))
        throw Error(ErrorCode::HiddenSite, "site " + std::to_string(index(s)) + " has no cell");
    std::vector<DiagramVertex> out;
    forEachFaceAround(s, [&](std::int32_t f, int) {
        const Face& face = faces_[f];
        out.push_back({face.center, face.clearance, face.v});
    });
    return out;
}

Disk Diagram::bisectorContactDisk(SiteId a, SiteId b) const
{
    if (!isLive(a) || !isLive(b))
        throw Error(ErrorCode::NotAdjacent, "both sites must be live");
    const Disk& da = sites_[index(a)].disk;
    const Disk& db = sites_[index(b)].disk;
    const Bisector bis(da, db);
    std::optional<double> bestParam;
    forEachFaceAround(a, [&](std::int32_t f, int i) {
        if (faces_[f].v[next3(i)] != b)
            return;
        // Edge a -> b of f is opposite v[i + 2].
        const std::int32_t g = faces_[f].n[prev3(i)];
        if (g < 0)
            return;
        double lo = bis.parameterOf(faces_[f].center);
        double hi = bis.parameterOf(faces_[g].center);
        if (lo > hi)
            std::swap(lo, hi);
        // Clearance grows with |s|, so the minimum over the trimmed arc is the
        // parameter closest to 0.
        const double trim = kContactTrim * (hi - lo);
        const double s = std::clamp(0.0, lo + trim, hi - trim);
        if (!bestParam || bis.clearanceAt(s) < bis.clearanceAt(*bestParam))
            bestParam = s;
    });
    if (!bestParam)
        throw Error(ErrorCode::NotAdjacent,
                    "sites " + std::to_string(index(a)) + " and " + std::to_string(index(b)) + " share no edge");
    return {bis.pointAt(*bestParam), bis.clearanceAt(*bestParam)};
}

std::vector<DiagramVertex> Diagram::vertices() const
{
    std::vector<DiagramVertex> out;
    for (const Face& face : faces_)
        if (face.alive)
            out.push_back({face.center, face.clearance, face.v});
    return out;
}

std::vector<std::pair<SiteId, SiteId>> Diagram::edges() const
{
    std::vector<std::pair<SiteId, SiteId>> out;
    for (const Face& face : faces_) {
        if (!face.alive)
            continue;
        for (int k = 0; k < 3; ++k) {
            SiteId a = face.v[next3(k)];
            SiteId b = face.v[prev3(k)];
            if (isSuper(a) || isSuper(b))
                continue;
            if (b < a)
                std::swap(a, b);
            out.emplace_back(a, b);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Diagram::Edge> Diagram::voronoiEdges() const
{
    std::vector<Edge> out;
    for (std::int32_t f = 0; f < static_cast<std::int32_t>(faces_.size()); ++f) {
        const Face& face = faces_[f];
        if (!face.alive)
            continue;
        for (int k = 0; k < 3; ++k) {
            const std::int32_t g = face.n[k];
            if (g < f)
                continue;
            const SiteId a = face.v[next3(k)];
            const SiteId b = face.v[prev3(k)];
            if (isSuper(a) || isSuper(b))
                continue;
            out.push_back({a, b, face.center, faces_[g].center});
        }
    }
    return out;
}

Diagram::Audit Diagram::audit(bool checkEmptiness) const
{
    std::ostringstream problems;
    std::size_t faceTotal = 0;
    std::size_t hullEdges = 0;
    const double tol = 1e3 * absTolerance();
    for (std::int32_t f = 0; f < static_cast<std::int32_t>(faces_.size()); ++f) {
        const Face& face = faces_[f];
        if (!face.alive)
            continue;
        ++faceTotal;
        for (int k = 0; k < 3; ++k) {
            const SiteId s = face.v[k];
            if (!isLive(s))
                problems << "face " << f << " uses dead site " << index(s) << "\n";
            const double residual = weightedDistance(face.center, sites_[index(s)].disk) - face.clearance;
            if (!isSuper(s) && std::abs(residual) > tol)
                problems << "face " << f << " residual " << residual << "\n";
            const std::int32_t g = face.n[k];
            if (g < 0) {
                ++hullEdges;
                continue;
            }
            if (!faces_[g].alive || mirrorIndex(f, k) < 0)
                problems << "face " << f << " edge " << k << " is not mirrored\n";
        }
    }
    std::size_t liveSites = 0;
    for (std::size_t i = 0; i < sites_.size(); ++i) {
        const SiteId s = siteId(i);
        if (!sites_[i].live())
            continue;
        ++liveSites;
        const std::int32_t f = siteFace_[i];
        if (f < 0 || !faces_[f].alive || indexOf(f, s) < 0)
            problems << "site " << i << " has no incident face\n";
    }
    const std::size_t edgeTotal = (3 * faceTotal + hullEdges) / 2;
    if (static_cast<long long>(liveSites) - static_cast<long long>(edgeTotal) + static_cast<long long>(faceTotal) != 1)
        problems << "Euler characteristic violated: V=" << liveSites << " E=" << edgeTotal << " F=" << faceTotal << "\n";

    if (checkEmptiness) {
        for (std::int32_t f = 0; f < static_cast<std::int32_t>(faces_.size()); ++f) {
            const Face& face = faces_[f];
            if (!face.alive)
                continue;
            for (std::size_t i = 0; i < sites_.size(); ++i) {
                if (!sites_[i].live() || isSuper(siteId(i)))
                    continue;
                const double w = weightedDistance(face.center, sites_[i].disk);
                if (w < face.clearance - tol)
                    problems << "face " << f << " circle contains site " << i << " by " << face.clearance - w << "\n";
            }
        }
        for (std::size_t i = 0; i < sites_.size(); ++i) {
            if (sites_[i].live())
                continue;
            bool dominated = false;
            for (std::size_t j = 0; j < sites_.size() && !dominated; ++j)
                dominated = j != i && sites_[j].live()
                    && weightedDistance(sites_[i].disk.center, sites_[j].disk) <= -sites_[i].disk.radius + tol;
            if (!dominated)
                problems << "hidden site " << i << " is not dominated\n";
        }
    }
    Audit result;
    result.message = problems.str();
    result.ok = result.message.empty();
    return result;
}

} // namespace securepath
