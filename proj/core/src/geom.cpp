#include "securepath/geom.hpp"

#include "securepath/error.hpp"

#include <array>
#include <limits>

namespace securepath {

std::string_view toString(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::InvalidHint: return "InvalidHint";
    case ErrorCode::HiddenSite: return "HiddenSite";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::NotTangent: return "NotTangent";
    case ErrorCode::NoPath: return "NoPath";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::TooFewInterior: return "TooFewInterior";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

void RobustnessConfig::validate() const
{
    if (!(perturbationMagnitude >= 0.0) || !std::isfinite(perturbationMagnitude))
        throw Error(ErrorCode::InvalidArgument, "perturbation magnitude must be >= 0");
    if (!(radiusFactor > 0.0 && radiusFactor <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "radius factor must lie in (0, 1]");
    if (!(tolerance > 0.0) || !std::isfinite(tolerance))
        throw Error(ErrorCode::InvalidArgument, "tolerance must be > 0");
}

BoundingBox boundingBox(const std::vector<Point>& points)
{
    if (points.empty())
        return {};
    BoundingBox box{points.front(), points.front()};
    for (const Point& p : points) {
        box.min.x = std::min(box.min.x, p.x);
        box.min.y = std::min(box.min.y, p.y);
        box.max.x = std::max(box.max.x, p.x);
        box.max.y = std::max(box.max.y, p.y);
    }
    return box;
}

double weightedDistance(Point p, const Disk& d)
{
    return distance(p, d.center) - d.radius;
}

namespace {

struct Solution {
    Disk circle;
    double orient = 0.0;
};

// Directions from the circle center towards the three disk centers; their
// angular order is the orientation of the Voronoi vertex.
double vertexOrientation(Point v, const Disk& a, const Disk& b, const Disk& c)
{
    auto dir = [v](const Disk& d) {
        const Point u = d.center - v;
        const double len = norm(u);
        return len > 0.0 ? (1.0 / len) * u : Point{};
    };
    return orientation(dir(a), dir(b), dir(c));
}

// Newton steps on |v - c_i| - r_i - r = 0. Keeps the iterate only while the
// residual shrinks.
// Newton refinement of the three tangency equations. Large circles of nearly
// collinear triples have a Jacobian close to singular, so the residual is
// evaluated in extended precision; in doubles its rounding alone moves the
// center by more than the target accuracy.
void polish(Disk& circle, const std::array<const Disk*, 3>& disks)
{
    using Real = long double;
    Real cx = circle.center.x, cy = circle.center.y, cr = circle.radius;
    auto residual = [&](Real x, Real y, Real r, Real f[3], Real jac[3][3]) {
        Real worst = 0;
        for (int i = 0; i < 3; ++i) {
            const Real ux = x - disks[i]->center.x;
            const Real uy = y - disks[i]->center.y;
            const Real len = std::sqrt(ux * ux + uy * uy);
            if (len == 0)
                return Real(-1);
            f[i] = len - disks[i]->radius - r;
            jac[i][0] = ux / len;
            jac[i][1] = uy / len;
            jac[i][2] = -1;
            worst = std::max(worst, std::abs(f[i]));
        }
        return worst;
    };
    auto det3 = [](const Real m[3][3]) {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
             + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    Real f[3], jac[3][3];
    Real best = residual(cx, cy, cr, f, jac);
    for (int iter = 0; iter < 4 && best > 0; ++iter) {
        const Real det = det3(jac);
        if (det == 0)
            break;
        Real delta[3];
        for (int k = 0; k < 3; ++k) {
            Real m[3][3];
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    m[i][j] = j == k ? f[i] : jac[i][j];
            delta[k] = det3(m) / det;
        }
        const Real nx = cx - delta[0], ny = cy - delta[1], nr = cr - delta[2];
        Real nf[3], njac[3][3];
        const Real r = residual(nx, ny, nr, nf, njac);
        if (!(r >= 0 && r < best))
            break;
        cx = nx;
        cy = ny;
        cr = nr;
        best = r;
        std::copy(&nf[0], &nf[0] + 3, &f[0]);
        std::copy(&njac[0][0], &njac[0][0] + 9, &jac[0][0]);
    }
    circle = {{static_cast<double>(cx), static_cast<double>(cy)}, static_cast<double>(cr)};
}

// Quadratic roots with the cancellation-free formula.
int quadraticRoots(double qa, double qb, double qc, double degenerateScale, std::array<double, 2>& roots)
{
    if (std::abs(qa) <= 1e-13 * degenerateScale) {
        if (qb == 0.0)
            return 0;
        roots[0] = -qc / qb;
        return 1;
    }
    double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) {
        if (disc < -1e-12 * (qb * qb + std::abs(4.0 * qa * qc)))
            return 0;
        disc = 0.0;
    }
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (qb + (qb >= 0.0 ? sq : -sq));
    if (q == 0.0) {
        roots[0] = 0.0;
        return 1;
    }
    roots[0] = q / qa;
    roots[1] = qc / q;
    return 2;
}

// Solves |v - c_i| = r + r_i relative to a reference disk o. With
// u = v - c_o and R = r + r_o the differences of the three equations are two
// linear equations d_i . u + w_i R = k_i in (u, R); their solutions form a
// line p + t n, and |u| = R closes the system with a quadratic in t.
// k uses (|d| - w)(|d| + w) so nearly tangent disks keep their precision, and
// working in (u, R) jointly stays well conditioned for collinear centers.
int solveTritangent(const Disk& a, const Disk& b, const Disk& c, std::array<Solution, 2>& out)
{
    const std::array<const Disk*, 3> disks{&a, &b, &c};
    // The reference closest to the other two keeps the system well conditioned
    // when one disk is far away (frame and super sites).
    int ref = 0;
    double best = INFINITY;
    for (int i = 0; i < 3; ++i) {
        const Point c = disks[i]->center;
        const double spread = distance(c, disks[(i + 1) % 3]->center) + distance(c, disks[(i + 2) % 3]->center);
        if (spread < best) {
            best = spread;
            ref = i;
        }
    }
    const Disk& o = *disks[ref];
    const Disk& p1 = *disks[(ref + 1) % 3];
    const Disk& p2 = *disks[(ref + 2) % 3];

    const Point d1 = p1.center - o.center;
    const Point d2 = p2.center - o.center;
    const double w1 = p1.radius - o.radius;
    const double w2 = p2.radius - o.radius;
    const double len1 = norm(d1);
    const double len2 = norm(d2);
    const double scale = std::max({len1, len2, w1, w2});
    if (!(scale > 0.0) || !std::isfinite(scale))
        return 0;
    const double k1 = 0.5 * (len1 - w1) * (len1 + w1);
    const double k2 = 0.5 * (len2 - w2) * (len2 + w2);

    const double inv = 1.0 / scale;
    const std::array<double, 3> r1{d1.x * inv, d1.y * inv, w1 * inv};
    const std::array<double, 3> r2{d2.x * inv, d2.y * inv, w2 * inv};
    const double s1 = k1 * inv * inv;
    const double s2 = k2 * inv * inv;
    const double g11 = r1[0] * r1[0] + r1[1] * r1[1] + r1[2] * r1[2];
    const double g12 = r1[0] * r2[0] + r1[1] * r2[1] + r1[2] * r2[2];
    const double g22 = r2[0] * r2[0] + r2[1] * r2[1] + r2[2] * r2[2];
    const double gdet = g11 * g22 - g12 * g12;
    if (!(gdet > 1e-24 * g11 * g22))
        return 0;
    // Minimum-norm particular solution and the null direction.
    const double y1 = (s1 * g22 - s2 * g12) / gdet;
    const double y2 = (s2 * g11 - s1 * g12) / gdet;
    const std::array<double, 3> p{y1 * r1[0] + y2 * r2[0], y1 * r1[1] + y2 * r2[1], y1 * r1[2] + y2 * r2[2]};
    const std::array<double, 3> n{r1[1] * r2[2] - r1[2] * r2[1],
                                  r1[2] * r2[0] - r1[0] * r2[2],
                                  r1[0] * r2[1] - r1[1] * r2[0]};
    const double qa = n[0] * n[0] + n[1] * n[1] - n[2] * n[2];
    const double qb = 2.0 * (p[0] * n[0] + p[1] * n[1] - p[2] * n[2]);
    const double qc = p[0] * p[0] + p[1] * p[1] - p[2] * p[2];
    std::array<double, 2> roots{};
    const int rootCount = quadraticRoots(qa, qb, qc, n[0] * n[0] + n[1] * n[1] + n[2] * n[2], roots);

    int count = 0;
    for (int i = 0; i < rootCount; ++i) {
        const double t = roots[i];
        const double bigR = (p[2] + t * n[2]) * scale;
        // Squaring admits circles at signed distance -(r + ri) from some disk.
        if (bigR < -1e-10 * scale || bigR + w1 < -1e-10 * scale || bigR + w2 < -1e-10 * scale)
            continue;
        Disk circle{o.center + scale * Point{p[0] + t * n[0], p[1] + t * n[1]}, std::max(bigR, 0.0) - o.radius};
        polish(circle, disks);
        if (!isFinite(circle.center) || !std::isfinite(circle.radius))
            continue;
        out[count++] = {circle, vertexOrientation(circle.center, a, b, c)};
    }
    return count;
}

} // namespace

std::optional<Disk> tritangentCircle(const Disk& a, const Disk& b, const Disk& c)
{
    std::array<Solution, 2> sols{};
    const int count = solveTritangent(a, b, c, sols);
    const Solution* best = nullptr;
    for (int i = 0; i < count; ++i) {
        if (sols[i].orient > 0.0 && (best == nullptr || sols[i].orient > best->orient))
            best = &sols[i];
    }
    if (best == nullptr)
        return std::nullopt;
    return best->circle;
}

std::vector<Disk> tritangentCircles(const Disk& a, const Disk& b, const Disk& c)
{
    std::array<Solution, 2> sols{};
    const int count = solveTritangent(a, b, c, sols);
    std::vector<Disk> result;
    for (int i = 0; i < count; ++i)
        result.push_back(sols[i].circle);
    return result;
}

Point tangencyPoint(const Disk& a, const Disk& b, double absTolerance)
{
    const double d = distance(a.center, b.center);
    const double gap = d - (a.radius + b.radius);
    if (!(std::abs(gap) <= absTolerance))
        throw Error(ErrorCode::NotTangent, "disks are " + std::to_string(gap) + " apart");
    if (d == 0.0 || a.radius == 0.0)
        return a.center;
    return a.center + (a.radius / d) * (b.center - a.center);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform in [-1, 1).
double symmetricUnit(std::uint64_t bits)
{
    return static_cast<double>(bits >> 11) * 0x1.0p-52 - 1.0;
}

} // namespace

Point perturb(Point p, const RobustnessConfig& cfg, double bboxDiagonal, std::uint64_t index)
{
    if (cfg.perturbationMagnitude == 0.0)
        return p;
    const double amplitude = cfg.perturbationMagnitude * bboxDiagonal;
    const std::uint64_t h = splitmix64(cfg.rngSeed ^ splitmix64(index));
    return {p.x + amplitude * symmetricUnit(h), p.y + amplitude * symmetricUnit(splitmix64(h))};
}

Bisector::Bisector(const Disk& a, const Disk& b) : a_(a), b_(b)
{
    const Point delta = b.center - a.center;
    length_ = norm(delta);
    axis_ = length_ > 0.0 ? (1.0 / length_) * delta : Point{1.0, 0.0};
    normal_ = {-axis_.y, axis_.x};
    minClearance_ = 0.5 * (length_ - a.radius - b.radius);
}

double Bisector::parameterOf(Point p) const
{
    const double t = 0.5 * (weightedDistance(p, a_) + weightedDistance(p, b_));
    const double above = std::max(0.0, t - minClearance_);
    return cross(axis_, p - a_.center) >= 0.0 ? above : -above;
}

Point Bisector::pointAt(double s) const
{
    const double t = minClearance_ + std::abs(s);
    const double ra = t + a_.radius;
    const double rb = t + b_.radius;
    const double along = (ra * ra - rb * rb + length_ * length_) / (2.0 * length_);
    // ra - along factors as (d + rb - ra) |s| / d, avoiding cancellation.
    const double gapA = (length_ + b_.radius - a_.radius) * std::abs(s) / length_;
    const double across = std::sqrt(std::max(0.0, gapA * (ra + along)));
    return a_.center + along * axis_ + (s >= 0.0 ? across : -across) * normal_;
}

} // namespace securepath
