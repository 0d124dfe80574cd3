#include "securepath/render.hpp"

#include "securepath/error.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string_view>

namespace securepath {

namespace {

constexpr double kWidthPx = 800.0;
constexpr int kMaxArcSegments = 64;
// Chord error allowed when sampling an arc, relative to the chord length.
constexpr double kChordError = 0.01;

class Canvas {
public:
    explicit Canvas(const BoundingBox& box)
    {
        const double pad = 0.05 * std::max(box.width(), box.height());
        lo_ = {box.min.x - pad, box.min.y - pad};
        const double w = box.width() + 2.0 * pad;
        const double h = box.height() + 2.0 * pad;
        scale_ = kWidthPx / (w > 0.0 ? w : 1.0);
        width_ = kWidthPx;
        height_ = h * scale_;
        hi_y_ = lo_.y + h;
    }

    double width() const { return width_; }
    double height() const { return height_; }
    double length(double l) const { return l * scale_; }
    Point map(Point p) const { return {(p.x - lo_.x) * scale_, (hi_y_ - p.y) * scale_}; }

private:
    Point lo_;
    double hi_y_ = 0.0;
    double scale_ = 1.0;
    double width_ = 0.0;
    double height_ = 0.0;
};

void append(std::string& out, const char* fmt, auto... args)
{
    char buf[256];
    const int n = std::snprintf(buf, sizeof buf, fmt, args...);
    out.append(buf, static_cast<std::size_t>(std::min<int>(n, sizeof buf - 1)));
}

std::string escape(std::string_view text)
{
    std::string out;
    for (char c : text) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

// Evenly spread hues, converted to hex since SVG 1.1 has no hsl().
std::string generationColor(int generation)
{
    const double hue = std::fmod(generation * 47.0, 360.0) / 60.0;
    const double s = 0.65, v = 0.85;
    const double c = v * s;
    const double x = c * (1.0 - std::abs(std::fmod(hue, 2.0) - 1.0));
    std::array<double, 3> rgb{};
    switch (static_cast<int>(hue)) {
    case 0: rgb = {c, x, 0}; break;
    case 1: rgb = {x, c, 0}; break;
    case 2: rgb = {0, c, x}; break;
    case 3: rgb = {0, x, c}; break;
    case 4: rgb = {x, 0, c}; break;
    default: rgb = {c, 0, x}; break;
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround((rgb[0] + v - c) * 255)),
                  static_cast<int>(std::lround((rgb[1] + v - c) * 255)),
                  static_cast<int>(std::lround((rgb[2] + v - c) * 255)));
    return buf;
}

// Parameters along the bisector, refined where the arc bends.
void sampleArc(const Bisector& bis, double lo, double hi, int budget, std::vector<double>& out)
{
    const Point a = bis.pointAt(lo);
    const Point b = bis.pointAt(hi);
    const double mid = 0.5 * (lo + hi);
    const Point m = bis.pointAt(mid);
    const double chord = distance(a, b);
    const double deviation = chord > 0.0 ? std::abs(orientation(a, b, m)) / chord : 0.0;
    if (budget <= 1 || deviation <= kChordError * chord) {
        out.push_back(hi);
        return;
    }
    sampleArc(bis, lo, mid, budget / 2, out);
    sampleArc(bis, mid, hi, budget - budget / 2, out);
}

void polyline(std::string& out, const Canvas& canvas, const std::vector<Point>& points, const char* style)
{
    if (points.size() < 2)
        return;
    out += "<polyline points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Point p = canvas.map(points[i]);
        append(out, i == 0 ? "%.2f,%.2f" : " %.2f,%.2f", p.x, p.y);
    }
    append(out, "\" %s/>\n", style);
}

void circle(std::string& out, const Canvas& canvas, const Disk& disk, const char* style)
{
    const Point c = canvas.map(disk.center);
    append(out, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" %s/>\n", c.x, c.y, canvas.length(disk.radius), style);
}

} // namespace

std::string renderSvg(const Diagram& d, const RenderOverlays& overlays)
{
    std::vector<Point> inputs;
    for (std::size_t i = 0; i < d.inputCount(); ++i)
        inputs.push_back(d.site(siteId(i)).disk.center);
    const Canvas canvas(boundingBox(inputs));
    const double dot = std::max(1.0, std::min(3.0, 400.0 / std::sqrt(static_cast<double>(inputs.size()) + 1.0)));

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    append(out,
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"%.0f\" height=\"%.0f\" "
           "viewBox=\"0 0 %.2f %.2f\">\n",
           canvas.width(), canvas.height(), canvas.width(), canvas.height());
    if (!overlays.title.empty())
        out += "<title>" + escape(overlays.title) + "</title>\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    if (overlays.trace) {
        out += "<g id=\"generations\" fill-opacity=\"0.35\" stroke-width=\"0.5\">\n";
        for (std::size_t g = 0; g < overlays.trace->generations.size(); ++g) {
            const std::string color = generationColor(static_cast<int>(g) + 1);
            const std::string style = "fill=\"" + color + "\" stroke=\"" + color + "\"";
            for (SiteId s : overlays.trace->generations[g])
                if (index(s) < d.siteCount())
                    circle(out, canvas, d.site(s).disk, style.c_str());
        }
        out += "</g>\n";
    }

    out += "<g id=\"voronoi\" fill=\"none\" stroke=\"#8c8c8c\" stroke-width=\"0.6\">\n";
    for (const Diagram::Edge& e : d.voronoiEdges()) {
        if (d.site(e.a).kind() == SiteKind::Frame && d.site(e.b).kind() == SiteKind::Frame)
            continue;
        const Bisector bis(d.site(e.a).disk, d.site(e.b).disk);
        const double lo = bis.parameterOf(e.from);
        const double hi = bis.parameterOf(e.to);
        std::vector<double> params{lo};
        sampleArc(bis, lo, hi, kMaxArcSegments, params);
        std::vector<Point> pts;
        for (double s : params)
            pts.push_back(bis.pointAt(s));
        polyline(out, canvas, pts, "");
    }
    out += "</g>\n";

    out += "<g id=\"sites\" fill=\"#202020\">\n";
    for (Point p : inputs) {
        const Point c = canvas.map(p);
        append(out, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\"/>\n", c.x, c.y, dot);
    }
    out += "</g>\n";

    if (overlays.baseline) {
        std::vector<Point> pts;
        for (SiteId s : overlays.baseline->path)
            pts.push_back(d.site(s).disk.center);
        out += "<g id=\"baseline\">\n";
        polyline(out, canvas, pts, "fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"2\"");
        out += "</g>\n";
    }

    if (overlays.path) {
        out += "<g id=\"path\">\n";
        for (const Disk& disk : overlays.path->chain)
            circle(out, canvas, disk, "fill=\"none\" stroke=\"#d0302f\" stroke-width=\"1\"");
        if (overlays.path->contact)
            circle(out, canvas, *overlays.path->contact,
                   "fill=\"none\" stroke=\"#d0302f\" stroke-width=\"1\" stroke-dasharray=\"4,3\"");
        std::vector<Point> pts;
        if (overlays.source)
            pts.push_back(d.site(*overlays.source).disk.center);
        pts.insert(pts.end(), overlays.path->insertions.begin(), overlays.path->insertions.end());
        if (overlays.target)
            pts.push_back(d.site(*overlays.target).disk.center);
        polyline(out, canvas, pts, "fill=\"none\" stroke=\"#d0302f\" stroke-width=\"2\"");
        for (Point q : overlays.path->insertions) {
            const Point c = canvas.map(q);
            append(out, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"#d0302f\"/>\n", c.x, c.y, dot + 1.0);
        }
        out += "</g>\n";
    }

    for (const auto& [site, color] : {std::pair{overlays.source, "#1a9641"}, std::pair{overlays.target, "#7b3294"}}) {
        if (!site)
            continue;
        const Point c = canvas.map(d.site(*site).disk.center);
        append(out, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"%.2f\" fill=\"%s\"/>\n", c.x, c.y, dot + 3.0, color);
    }
    out += "</svg>\n";
    return out;
}

void writeSvg(const Diagram& d, const RenderOverlays& overlays, const std::filesystem::path& path)
{
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw Error(ErrorCode::IoError, "cannot write " + path.string());
    file << renderSvg(d, overlays);
    if (!file)
        throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

} // namespace securepath
