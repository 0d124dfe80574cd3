#pragma once

#include "securepath/geom.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace securepath {

/// Stable handle of a site; never reused within one Diagram.
enum class SiteId : std::int32_t {};

constexpr std::size_t index(SiteId id) { return static_cast<std::size_t>(id); }
constexpr SiteId siteId(std::size_t i) { return static_cast<SiteId>(static_cast<std::int32_t>(i)); }

enum class SiteKind : std::uint8_t { Input, Inserted, Frame };
enum class SiteStatus : std::uint8_t { Live, Hidden };

/// How a site entered the diagram. Generation and parent are meaningful for
/// Inserted sites only.
struct SiteOrigin {
    SiteKind kind = SiteKind::Input;
    int generation = 0;
    std::optional<SiteId> parent;

    static SiteOrigin input() { return {}; }
    static SiteOrigin frame() { return {SiteKind::Frame, 0, std::nullopt}; }
    static SiteOrigin inserted(int generation, SiteId parent) { return {SiteKind::Inserted, generation, parent}; }
};

struct SiteRecord {
    Disk disk;
    SiteOrigin origin;
    SiteStatus status = SiteStatus::Live;

    bool live() const { return status == SiteStatus::Live; }
    SiteKind kind() const { return origin.kind; }
};

/// A vertex of the weighted Voronoi diagram: the center of an empty circle
/// tangent to its three defining sites, listed counter-clockwise.
struct DiagramVertex {
    Point position;
    double clearance = 0.0;
    std::array<SiteId, 3> definingSites{};
};

struct InsertResult {
    enum class Status { Inserted, Hidden };
    Status status = Status::Hidden;
    SiteId id{};

    bool inserted() const { return status == Status::Inserted; }
};

/// Incremental additively weighted Voronoi diagram, stored as its dual.
///
/// Faces are oriented site triples carrying their empty tritangent circle.
/// Adjacency is face based, so the structure tolerates what the weighted
/// dual needs and an ordinary triangulation does not: parallel edges between
/// two sites and sites of degree two. Sites dominated by another disk are
/// marked Hidden and drop out of the face structure.
///
/// The whole construction is wrapped in three far-away "super" sites (kind
/// Frame) so that every face is finite.
class Diagram {
public:
    /// Zero-radius diagram over points (kind Input, SiteId i == points[i]) and
    /// frame (kind Frame). Coordinates are perturbed per cfg before insertion,
    /// which happens in random order seeded by cfg.rngSeed.
    static Diagram build(const std::vector<Point>& points, const std::vector<Point>& frame,
                         const RobustnessConfig& cfg);

    /// Inserts a disk. The hint must be a live site; location walks from it to
    /// the nearest site, so a nearby hint keeps insertion local. Returns Hidden
    /// (and records nothing) when the disk would own no cell. Existing sites the
    /// disk dominates become Hidden.
    InsertResult insert(const Disk& disk, SiteOrigin origin, SiteId hint);

    /// Sites sharing a Voronoi edge with s, counter-clockwise, without repeats.
    std::vector<SiteId> neighbors(SiteId s) const;
    bool adjacent(SiteId a, SiteId b) const;

    /// Voronoi vertices of s's cell, counter-clockwise.
    std::vector<DiagramVertex> cellVertices(SiteId s) const;

    /// Disk centered on the (a, b) Voronoi edge, tangent to both sites, at the
    /// point of the shared arc with the smallest clearance. Throws NotAdjacent.
    Disk bisectorContactDisk(SiteId a, SiteId b) const;

    /// Site with the smallest weighted distance to p, found by a greedy walk.
    SiteId nearestSite(Point p, SiteId hint) const;

    const SiteRecord& site(SiteId id) const { return sites_.at(index(id)); }
    std::size_t siteCount() const { return sites_.size(); }
    std::size_t inputCount() const { return inputCount_; }
    bool isLive(SiteId id) const { return index(id) < sites_.size() && sites_[index(id)].live(); }
    bool isSuper(SiteId id) const { return index(id) >= superBegin_ && index(id) < superBegin_ + 3; }

    /// Bounding box of the (perturbed) input and frame points.
    const BoundingBox& bbox() const { return bbox_; }
    double scale() const { return scale_; }
    const RobustnessConfig& config() const { return cfg_; }
    double absTolerance() const { return cfg_.tolerance * scale_; }

    /// All Voronoi vertices (one per face).
    std::vector<DiagramVertex> vertices() const;
    /// Unordered adjacent site pairs (a < b), super sites excluded, no repeats.
    std::vector<std::pair<SiteId, SiteId>> edges() const;

    struct Edge {
        SiteId a;
        SiteId b;
        Point from;
        Point to;
    };
    /// Voronoi edges as (sites, endpoint) records, each reported once; edges
    /// touching the super sites are skipped.
    std::vector<Edge> voronoiEdges() const;

    std::size_t faceCount() const { return faces_.size() - freeFaces_.size(); }

    struct Audit {
        bool ok = true;
        std::string message;
    };
    /// Consistency check for tests: neighbor symmetry, Euler's formula,
    /// tritangent residuals and (optionally) the empty-circle property.
    Audit audit(bool checkEmptiness) const;

private:
    struct Face {
        std::array<SiteId, 3> v{};
        std::array<std::int32_t, 3> n{-1, -1, -1};
        Point center;
        double clearance = 0.0;
        bool alive = false;
    };

    Diagram() = default;

    SiteId addSite(const Disk& disk, SiteOrigin origin);
    std::int32_t newFace(std::array<SiteId, 3> v, const Disk& circle);
    void freeFace(std::int32_t f);
    bool conflicts(std::int32_t f, const Disk& disk) const;
    double conflictMargin(std::int32_t f, const Disk& disk) const;
    bool edgeInteriorSurvives(std::int32_t f, int k, const Disk& disk) const;
    bool edgeInteriorConflicts(std::int32_t f, int k, const Disk& disk) const;
    int indexOf(std::int32_t f, SiteId s) const;
    int mirrorIndex(std::int32_t f, int k) const;
    template <typename Fn>
    void forEachFaceAround(SiteId s, Fn&& fn) const;
    std::vector<std::int32_t> facesAround(SiteId s) const;
    bool isBoundaryEdge(std::int32_t f, int k, const Disk& disk) const;

    std::int32_t findSeedFace(SiteId nearest, const Disk& disk) const;
    void insertAtSeed(SiteId q, std::int32_t seed);
    void insertOnEdge(SiteId q, std::int32_t f, int k, const Disk& c1, const Disk& c2);

    std::vector<SiteRecord> sites_;
    std::vector<std::int32_t> siteFace_;
    std::vector<Face> faces_;
    std::vector<std::int32_t> freeFaces_;
    std::size_t inputCount_ = 0;
    std::size_t superBegin_ = 0;
    BoundingBox bbox_;
    double scale_ = 1.0;
    RobustnessConfig cfg_;
    // Scratch marks for cavity searches; epoch-stamped so they never need clearing.
    mutable std::vector<std::uint32_t> mark_;
    mutable std::uint32_t epoch_ = 0;
};

} // namespace securepath
