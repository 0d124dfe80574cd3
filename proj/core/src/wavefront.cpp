#include "securepath/wavefront.hpp"

#include "securepath/error.hpp"

#include <algorithm>
#include <set>

namespace securepath {

namespace {

using Triple = std::array<SiteId, 3>;

// Rotation of an oriented triple starting at its smallest id. The same three
// sites can define two vertices of opposite orientation, so the key keeps
// orientation.
Triple canonical(Triple t)
{
    const auto first = std::min_element(t.begin(), t.end());
    std::rotate(t.begin(), first, t.end());
    return t;
}

int generationOf(const Diagram& d, SiteId s, SiteId source)
{
    if (s == source)
        return 0;
    const SiteRecord& r = d.site(s);
    return r.kind() == SiteKind::Inserted ? r.origin.generation : -1;
}

void requireEndpoint(const Diagram& d, SiteId s, const char* what)
{
    if (index(s) >= d.siteCount() || d.site(s).kind() != SiteKind::Input)
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be an input site");
    if (!d.isLive(s))
        throw Error(ErrorCode::NoPath, std::string(what) + " site is hidden");
}

} // namespace

std::size_t WavefrontTrace::insertedCount() const
{
    std::size_t n = 0;
    for (const auto& g : generations)
        n += g.size();
    return n;
}

bool admissible(const DiagramVertex& v, int round, const Diagram& d, SiteId source, const WavefrontOptions& options)
{
    if (!(v.clearance > d.absTolerance()))
        return false;
    bool hasInput = false;
    for (SiteId s : v.definingSites) {
        const SiteKind kind = d.site(s).kind();
        if (kind == SiteKind::Frame)
            return false;
        const int g = generationOf(d, s, source);
        if (g >= 0 && g <= round - options.backwardGap)
            return false;
        if (kind == SiteKind::Input && s != source)
            hasInput = true;
    }
    return hasInput;
}

std::vector<CandidateVertex> initialCandidates(const Diagram& d, SiteId source)
{
    std::vector<CandidateVertex> out;
    for (const DiagramVertex& v : d.cellVertices(source)) {
        const bool frame = std::any_of(v.definingSites.begin(), v.definingSites.end(),
                                       [&](SiteId s) { return d.site(s).kind() == SiteKind::Frame; });
        if (!frame && v.clearance > d.absTolerance())
            out.push_back({v, 1, source});
    }
    return out;
}

RoundResult runRound(Diagram& d, const std::vector<CandidateVertex>& queue, int round, SiteId source,
                     std::optional<SiteId> target, const WavefrontOptions& options)
{
    RoundResult result;
    const double radiusFactor = d.config().radiusFactor;
    for (const CandidateVertex& c : queue) {
        if (c.generation != round)
            throw Error(ErrorCode::InvalidArgument, "candidate generation does not match the round");
        // Disks of one round may overlap; only those swallowed whole by an
        // earlier disk of the round come back hidden and are dropped.
        const SiteId hint = d.isLive(c.parent) ? c.parent : source;
        const InsertResult ins = d.insert({c.vertex.position, c.vertex.clearance * radiusFactor},
                                          SiteOrigin::inserted(round, c.parent), hint);
        if (!ins.inserted()) {
            ++result.skipped;
            continue;
        }
        result.inserted.push_back(ins.id);
        if (target && d.adjacent(ins.id, *target)) {
            result.reached = ins.id;
            return result;
        }
    }

    std::set<Triple> seen;
    for (SiteId s : result.inserted) {
        if (!d.isLive(s))
            continue;
        for (const DiagramVertex& v : d.cellVertices(s)) {
            if (!admissible(v, round, d, source, options))
                continue;
            if (!seen.insert(canonical(v.definingSites)).second)
                continue;
            SiteId parent = s;
            for (SiteId t : v.definingSites)
                if (generationOf(d, t, source) == round && t < parent)
                    parent = t;
            result.next.push_back({v, round + 1, parent});
        }
    }
    return result;
}

SecurePath reconstruct(const Diagram& d, SiteId source, SiteId target, SiteId finalSite)
{
    SecurePath path;
    if (finalSite == source) {
        if (!d.adjacent(source, target))
            throw Error(ErrorCode::NotAdjacent, "source and target are not adjacent");
        return path;
    }
    if (!d.adjacent(finalSite, target))
        throw Error(ErrorCode::NotAdjacent, "final site does not border the target cell");

    for (SiteId s = finalSite; s != source;) {
        const SiteRecord& r = d.site(s);
        if (r.kind() != SiteKind::Inserted || !r.origin.parent)
            throw Error(ErrorCode::Internal, "broken parent chain");
        path.chainSites.push_back(s);
        s = *r.origin.parent;
    }
    std::reverse(path.chainSites.begin(), path.chainSites.end());
    for (SiteId s : path.chainSites)
        path.chain.push_back(d.site(s).disk);
    path.contact = d.bisectorContactDisk(finalSite, target);

    // Consecutive chain disks touch only up to the radius shrink. The
    // insertion goes to the middle of the lens where the unshrunk disks
    // overlap, so both witnesses keep half the slack as margin.
    const double rf = d.config().radiusFactor;
    auto link = [&](const Disk& a, const Disk& b, bool bShrunk) {
        const double tol = d.absTolerance() + (1.0 - rf) * (a.radius + b.radius);
        const Point touch = tangencyPoint(a, b, tol);
        const double len = distance(a.center, b.center);
        if (len == 0.0)
            return touch;
        const double ra = a.radius / rf;
        const double rb = bShrunk ? b.radius / rf : b.radius;
        const double mid = 0.5 * (ra + len - rb);
        return a.center + (mid / len) * (b.center - a.center);
    };
    for (std::size_t i = 0; i + 1 < path.chain.size(); ++i)
        path.insertions.push_back(link(path.chain[i], path.chain[i + 1], true));
    path.insertions.push_back(link(path.chain.back(), *path.contact, false));
    path.cost = static_cast<int>(path.insertions.size());
    return path;
}

WavefrontResult solve(Diagram& d, SiteId source, SiteId target, const WavefrontOptions& options)
{
    requireEndpoint(d, source, "source");
    requireEndpoint(d, target, "target");
    if (source == target)
        throw Error(ErrorCode::InvalidArgument, "source and target coincide");
    if (options.backwardGap < 1)
        throw Error(ErrorCode::InvalidArgument, "backward gap must be >= 1");

    WavefrontResult result;
    if (d.adjacent(source, target)) {
        result.path = reconstruct(d, source, target, source);
        return result;
    }

    std::vector<CandidateVertex> queue = initialCandidates(d, source);
    for (int round = 1; !queue.empty(); ++round) {
        RoundResult r = runRound(d, queue, round, source, target, options);
        result.trace.generations.push_back(std::move(r.inserted));
        result.trace.skipped.push_back(r.skipped);
        result.trace.rounds = round;
        if (r.reached) {
            result.path = reconstruct(d, source, target, *r.reached);
            return result;
        }
        queue = std::move(r.next);
    }
    throw Error(ErrorCode::NoPath, "wavefront died out before reaching the target");
}

} // namespace securepath
