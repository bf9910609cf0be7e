#include "skinmon/svg.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace skinmon {

namespace {

constexpr double kScale = 30.0;  // px per cm
constexpr double kMargin = 10.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct Mapper {
    double px(double x_cm) const { return x_cm * kScale + kMargin; }
    double py(double y_cm) const { return y_cm * kScale + kMargin; }
};

void emit_shape(std::ostringstream& out, const Shape& shape, const Mapper& map,
                const char* color) {
    if (const auto* e = std::get_if<EllipseShape>(&shape)) {
        out << "  <ellipse cx=\"" << fmt(map.px(e->center.x)) << "\" cy=\""
            << fmt(map.py(e->center.y)) << "\" rx=\"" << fmt(e->rx * kScale)
            << "\" ry=\"" << fmt(e->ry * kScale) << "\" fill=\"" << color
            << "\"/>\n";
    } else if (const auto* c = std::get_if<CapsuleShape>(&shape)) {
        out << "  <line x1=\"" << fmt(map.px(c->a.x)) << "\" y1=\""
            << fmt(map.py(c->a.y)) << "\" x2=\"" << fmt(map.px(c->b.x))
            << "\" y2=\"" << fmt(map.py(c->b.y)) << "\" stroke=\"" << color
            << "\" stroke-width=\"" << fmt(2.0 * c->r * kScale)
            << "\" stroke-linecap=\"round\"/>\n";
    }
}

void emit_dot(std::ostringstream& out, const Location& loc, const Mapper& map,
              double r_px, const char* color) {
    out << "  <circle cx=\"" << fmt(map.px(loc.x)) << "\" cy=\""
        << fmt(map.py(loc.y)) << "\" r=\"" << fmt(r_px) << "\" fill=\"" << color
        << "\"/>\n";
}

}  // namespace

std::string render_snapshot_svg(const Snapshot& snap) {
    Mapper map;
    double w = snap.patch_w * kScale + 2 * kMargin;
    double h = snap.patch_h * kScale + 2 * kMargin;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w)
        << "\" height=\"" << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << ' '
        << fmt(h) << "\">\n";
    out << "  <rect width=\"" << fmt(w) << "\" height=\"" << fmt(h)
        << "\" fill=\"white\"/>\n";
    out << "  <!-- round " << snap.round << " -->\n";

    for (const auto& s : snap.healed_shapes) emit_shape(out, s, map, "black");
    for (const auto& s : snap.active_shapes) emit_shape(out, s, map, "red");

    // Parent ids referenced by some other drawn node.
    std::set<NodeId> parent_ids;
    auto drawn = [](const Snapshot::Node& n) { return n.active && n.alive; };
    for (const auto& n : snap.nodes)
        if (drawn(n) && !n.self_rooted) parent_ids.insert(n.parent_id);

    // Tree edges, child id ascending.
    for (const auto& n : snap.nodes) {
        if (!drawn(n) || n.self_rooted) continue;
        const auto& p = snap.nodes[n.parent_id];
        if (!drawn(p)) continue;
        out << "  <line x1=\"" << fmt(map.px(n.loc.x)) << "\" y1=\""
            << fmt(map.py(n.loc.y)) << "\" x2=\"" << fmt(map.px(p.loc.x))
            << "\" y2=\"" << fmt(map.py(p.loc.y))
            << "\" stroke=\"green\" stroke-width=\"1.2\"/>\n";
    }

    // Ordinary members, then larger parent dots, then blue roots on top.
    for (const auto& n : snap.nodes) {
        if (!drawn(n) || n.self_rooted || parent_ids.count(n.id)) continue;
        emit_dot(out, n.loc, map, 2.2, "green");
    }
    for (const auto& n : snap.nodes) {
        if (!drawn(n) || n.self_rooted || !parent_ids.count(n.id)) continue;
        emit_dot(out, n.loc, map, 4.0, "green");
    }
    for (const auto& n : snap.nodes) {
        if (!drawn(n) || !n.self_rooted) continue;
        emit_dot(out, n.loc, map, 5.0, "blue");
    }

    out << "</svg>\n";
    return out.str();
}

void render_snapshot(const Snapshot& snap, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write snapshot: " + path);
    out << render_snapshot_svg(snap);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace skinmon
