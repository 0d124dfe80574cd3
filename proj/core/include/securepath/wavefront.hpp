#pragma once

#include "securepath/apollonius.hpp"

#include <cstddef>
#include <vector>

namespace securepath {

/// A Voronoi vertex queued for insertion as a disk in round `generation`.
struct CandidateVertex {
    DiagramVertex vertex;
    int generation = 1;
    SiteId parent{};
};

/// Minimum-insertion secure path.
///
/// `chain` holds the wavefront disks D_1..D_k (D_1 touches the source, D_i
/// touches D_{i+1}), `contact` the disk on the boundary between D_k and the
/// target. `insertions` are the k points to add, the tangency of each
/// consecutive pair of D_1..D_k, contact. cost == k == insertions.size().
struct SecurePath {
    std::vector<SiteId> chainSites;
    std::vector<Disk> chain;
    std::optional<Disk> contact;
    std::vector<Point> insertions;
    int cost = 0;
};

struct WavefrontTrace {
    /// generations[g - 1] lists the sites inserted in round g.
    std::vector<std::vector<SiteId>> generations;
    /// Candidates dropped because an earlier disk of the same round
    /// contained them.
    std::vector<std::size_t> skipped;
    int rounds = 0;

    std::size_t insertedCount() const;
};

struct WavefrontOptions {
    /// Backward-blocking rule: a vertex is rejected when one of its defining
    /// sites is an inserted disk of generation <= round - backwardGap (the
    /// source counts as generation 0). 1 is the strict reading, 2 relaxes it
    /// by one generation.
    int backwardGap = 1;
};

struct WavefrontResult {
    SecurePath path;
    WavefrontTrace trace;
};

/// Grows the wavefront from source until a disk shares an edge with target,
/// then reconstructs the chain. Mutates d by inserting the wavefront disks.
/// Throws NoPath when the frontier dies out first.
WavefrontResult solve(Diagram& d, SiteId source, SiteId target, const WavefrontOptions& options = {});

/// Whether a vertex of a just-inserted site's cell should be queued for round + 1.
bool admissible(const DiagramVertex& v, int round, const Diagram& d, SiteId source,
                const WavefrontOptions& options = {});

struct RoundResult {
    std::vector<SiteId> inserted;
    std::vector<CandidateVertex> next;
    std::size_t skipped = 0;
    /// First inserted site found adjacent to the target, if any. The round
    /// stops there.
    std::optional<SiteId> reached;
};

/// Round-one queue: the usable vertices of the source cell.
std::vector<CandidateVertex> initialCandidates(const Diagram& d, SiteId source);

/// Inserts the queue as round `round`. Without a target the round always
/// runs to completion.
RoundResult runRound(Diagram& d, const std::vector<CandidateVertex>& queue, int round, SiteId source,
                     std::optional<SiteId> target, const WavefrontOptions& options = {});

/// Walks parent links back from finalSite and places the contact disk against
/// target. finalSite == source yields the empty zero-cost path.
SecurePath reconstruct(const Diagram& d, SiteId source, SiteId target, SiteId finalSite);

} // namespace securepath
