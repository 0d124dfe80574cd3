#include "securepath/baseline_bfs.hpp"

#include "securepath/error.hpp"

#include <algorithm>
#include <deque>

namespace securepath {

BfsResult bfsBaseline(const Diagram& d, SiteId source, SiteId target)
{
    auto usable = [&](SiteId s) { return d.isLive(s) && d.site(s).kind() != SiteKind::Frame; };
    if (!usable(source) || !usable(target))
        throw Error(ErrorCode::InvalidArgument, "source and target must be live non-frame sites");

    constexpr std::int32_t unseen = -1;
    std::vector<std::int32_t> parent(d.siteCount(), unseen);
    parent[index(source)] = static_cast<std::int32_t>(index(source));
    std::deque<SiteId> queue{source};
    while (!queue.empty() && parent[index(target)] == unseen) {
        const SiteId s = queue.front();
        queue.pop_front();
        std::vector<SiteId> next = d.neighbors(s);
        std::sort(next.begin(), next.end());
        for (SiteId t : next) {
            if (!usable(t) || parent[index(t)] != unseen)
                continue;
            parent[index(t)] = static_cast<std::int32_t>(index(s));
            queue.push_back(t);
        }
    }
    if (parent[index(target)] == unseen)
        throw Error(ErrorCode::NoPath, "target is not connected to source");

    BfsResult result;
    for (SiteId s = target; s != source; s = siteId(static_cast<std::size_t>(parent[index(s)])))
        result.path.push_back(s);
    result.path.push_back(source);
    std::reverse(result.path.begin(), result.path.end());
    result.intermediates = static_cast<int>(result.path.size()) - 2;
    return result;
}

} // namespace securepath
