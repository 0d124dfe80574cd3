#pragma once

#include "securepath/apollonius.hpp"
#include "securepath/baseline_bfs.hpp"
#include "securepath/wavefront.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace securepath {

/// What to draw on top of the diagram. Site ids refer to the rendered diagram.
struct RenderOverlays {
    std::optional<SiteId> source;
    std::optional<SiteId> target;
    const SecurePath* path = nullptr;
    const WavefrontTrace* trace = nullptr;
    const BfsResult* baseline = nullptr;
    std::string title;
};

/// SVG 1.1 picture of the diagram: input points, Voronoi edges sampled as
/// polylines (at most 64 segments per arc), wavefront disks colored by
/// generation, and the requested paths. Output depends only on the inputs.
std::string renderSvg(const Diagram& d, const RenderOverlays& overlays);

/// renderSvg written to a file. Throws IoError.
void writeSvg(const Diagram& d, const RenderOverlays& overlays, const std::filesystem::path& path);

} // namespace securepath
