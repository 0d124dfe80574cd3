#pragma once

// Independent reference computations used by the unit and acceptance tests.
// They share nothing with the library beyond the Point and Disk types.

#include "securepath/geom.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <deque>
#include <utility>
#include <vector>

namespace securepath::oracle {

struct TritangentRoot {
    double x;
    double y;
    double r;
};

/// Circles larger than this multiple of the instance size are not searched
/// for; their centers cannot be represented to 1e-9 of the size in doubles.
constexpr long double kMaxRadius = 1e6L;

namespace detail {

using Real = long double;
using Fine = boost::multiprecision::cpp_bin_float_50;

// Center of the circle of radius r tangent to a and b on the given side of
// the directed line a -> b: intersection of |p - a| = ra + r and
// |p - b| = rb + r.
struct Branch {
    Disk a;
    Disk b;
    int side;

    template <typename T>
    bool at(const T& r, T& x, T& y) const
    {
        using std::sqrt;
        const T dx = T(b.center.x) - a.center.x, dy = T(b.center.y) - a.center.y;
        const T d = sqrt(dx * dx + dy * dy);
        const T ra = a.radius + r, rb = b.radius + r;
        const T along = (d * d + ra * ra - rb * rb) / (2 * d);
        const T h2 = ra * ra - along * along;
        if (h2 < 0)
            return false;
        const T h = sqrt(h2);
        x = a.center.x + (along * dx - side * h * dy) / d;
        y = a.center.y + (along * dy + side * h * dx) / d;
        return true;
    }

    // Signed tangency defect of the third disk c at radius r.
    template <typename T>
    bool defect(const Disk& c, const T& r, T& value) const
    {
        using std::sqrt;
        T x, y;
        if (!at(r, x, y))
            return false;
        const T ux = x - c.center.x, uy = y - c.center.y;
        value = sqrt(ux * ux + uy * uy) - c.radius - r;
        return true;
    }
};

} // namespace detail

/// Every solution of |p - c_i| = r_i + r (i = 0..2) with -min r_i <= r <=
/// kMaxRadius * size. For each radius the first two equations give two
/// candidate centers (one per side of the line through c_0, c_1); the third
/// equation is scanned for sign changes along both branches on a dense
/// geometric grid of radii, and each bracket is bisected with 50 significant
/// digits. Large circles of nearly collinear triples are so ill conditioned
/// that long double bisection alone misses the root by more than 1e-9.
inline std::vector<TritangentRoot> tritangentRoots(const Disk& a, const Disk& b, const Disk& c, int samples = 8000)
{
    using detail::Real;
    Real minX = a.center.x, maxX = minX, minY = a.center.y, maxY = minY;
    for (const Disk& d : {a, b, c}) {
        minX = std::min<Real>(minX, d.center.x - d.radius);
        maxX = std::max<Real>(maxX, d.center.x + d.radius);
        minY = std::min<Real>(minY, d.center.y - d.radius);
        maxY = std::max<Real>(maxY, d.center.y + d.radius);
    }
    const Real size = std::hypot(maxX - minX, maxY - minY);
    const Real ab = std::hypot(Real(b.center.x) - a.center.x, Real(b.center.y) - a.center.y);
    const Real minR = std::min({a.radius, b.radius, c.radius});
    const Real lo = std::max(-minR, (ab - a.radius - b.radius) / 2);
    const Real hi = kMaxRadius * size;
    if (ab == 0 || !(lo < hi))
        return {};

    // Radii are sampled as lo + span * (e^{t} - 1) / (e^{T} - 1), dense near lo
    // and geometric further out.
    const Real span = hi - lo;
    const Real T = std::log(hi / (1e-9L * size));
    auto radiusAt = [&](int k) { return lo + span * std::expm1(T * k / samples) / std::expm1(T); };

    std::vector<TritangentRoot> roots;
    for (int side : {-1, 1}) {
        const detail::Branch br{a, b, side};
        Real rPrev = lo, fPrev = 0;
        bool okPrev = br.defect(c, rPrev, fPrev);
        for (int k = 1; k <= samples; ++k) {
            const Real r = radiusAt(k);
            Real fr = 0;
            const bool ok = br.defect(c, r, fr);
            if (ok && okPrev && (fPrev <= 0) != (fr <= 0)) {
                using detail::Fine;
                Fine l = rPrev, h = r, fl = fPrev;
                for (int it = 0; it < 180; ++it) {
                    const Fine m = (l + h) / 2;
                    Fine fm = 0;
                    br.defect(c, m, fm);
                    if ((fl <= 0) == (fm <= 0)) {
                        l = m;
                        fl = fm;
                    } else {
                        h = m;
                    }
                }
                const Fine root = (l + h) / 2;
                Fine x, y;
                br.at(root, x, y);
                roots.push_back({static_cast<double>(x), static_cast<double>(y), static_cast<double>(root)});
            }
            okPrev = ok;
            rPrev = r;
            fPrev = fr;
        }
    }
    return roots;
}

/// Hop count BFS by brute force over an explicit adjacency matrix: all-pairs
/// shortest paths with Floyd-Warshall.
inline std::vector<std::vector<int>> allPairsHops(const std::vector<std::vector<bool>>& adj)
{
    const std::size_t n = adj.size();
    constexpr int inf = 1 << 28;
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, inf));
    for (std::size_t i = 0; i < n; ++i) {
        dist[i][i] = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (adj[i][j])
                dist[i][j] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
    return dist;
}

} // namespace securepath::oracle
