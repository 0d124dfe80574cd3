#pragma once

#include "securepath/apollonius.hpp"

#include <vector>

namespace securepath {

/// Hop-count shortest path through the neighbor graph of a diagram.
struct BfsResult {
    std::vector<SiteId> path;
    /// Sites strictly between source and target: path.size() - 2.
    int intermediates = 0;
};

/// BFS over live non-frame sites. Neighbors are expanded in increasing SiteId
/// order, so among equally short paths the result is reproducible.
/// Throws NoPath when target is unreachable.
BfsResult bfsBaseline(const Diagram& d, SiteId source, SiteId target);

} // namespace securepath
