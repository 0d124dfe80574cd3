#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

namespace securepath {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend constexpr Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Point a, Point b) = default;
};

constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline bool isFinite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Twice the signed area of (a, b, c); positive when counter-clockwise.
constexpr double orientation(Point a, Point b, Point c) { return cross(b - a, c - a); }

/// A weighted site. Zero radius is an ordinary point.
struct Disk {
    Point center;
    double radius = 0.0;

    friend constexpr bool operator==(const Disk&, const Disk&) = default;
};

/// Knobs of the degeneracy-avoidance scheme. Lengths are relative to the
/// bounding-box diagonal of the instance.
struct RobustnessConfig {
    double perturbationMagnitude = 1e-9;
    /// Inserted disks are shrunk by this factor so they stay strictly empty;
    /// the slack must dominate the perturbation of the points they touch.
    double radiusFactor = 1.0 - 1e-6;
    double tolerance = 1e-9;
    std::uint64_t rngSeed = 1;

    /// Throws Error(InvalidArgument) when a field is out of range.
    void validate() const;
};

struct BoundingBox {
    Point min;
    Point max;

    double diagonal() const { return distance(min, max); }
    Point center() const { return 0.5 * (min + max); }
    double width() const { return max.x - min.x; }
    double height() const { return max.y - min.y; }
    bool contains(Point p) const
    {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
    }
};

BoundingBox boundingBox(const std::vector<Point>& points);

/// Euclidean distance from p to the center of d minus the radius of d.
double weightedDistance(Point p, const Disk& d);

/// Empty circle tangent externally to a, b and c whose tangency points run
/// counter-clockwise in the order a, b, c. nullopt when no such circle exists.
std::optional<Disk> tritangentCircle(const Disk& a, const Disk& b, const Disk& c);

/// Every externally tangent circle of the triple, regardless of orientation
/// (at most two).
std::vector<Disk> tritangentCircles(const Disk& a, const Disk& b, const Disk& c);

/// Point where two externally tangent disks touch. Throws Error(NotTangent)
/// when the gap between them exceeds absTolerance.
Point tangencyPoint(const Disk& a, const Disk& b, double absTolerance);

/// Reproducible jitter of p, uniform in +-perturbationMagnitude * bboxDiagonal
/// per coordinate, keyed by (rngSeed, index).
Point perturb(Point p, const RobustnessConfig& cfg, double bboxDiagonal, std::uint64_t index);

/// Parameterisation of the additively weighted bisector of two disks.
///
/// A point on the bisector is described by a signed parameter s: |s| is the
/// clearance above the minimum (the point on the segment joining the centers)
/// and the sign tells on which side of the directed line a -> b it lies. The
/// parameter is monotone along the curve, so the arc between two points of the
/// bisector is the interval between their parameters.
class Bisector {
public:
    Bisector(const Disk& a, const Disk& b);

    double parameterOf(Point p) const;
    Point pointAt(double s) const;
    /// Weighted distance from pointAt(s) to either disk.
    double clearanceAt(double s) const { return minClearance_ + std::abs(s); }
    double minClearance() const { return minClearance_; }

private:
    Disk a_;
    Disk b_;
    Point axis_;
    Point normal_;
    double length_ = 0.0;
    double minClearance_ = 0.0;
};

} // namespace securepath
