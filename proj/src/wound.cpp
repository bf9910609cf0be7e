#include "skinmon/wound.hpp"

#include <algorithm>
#include <cmath>

namespace skinmon {

namespace {

double point_segment_dist(const Location& p, const Location& a, const Location& b) {
    double abx = b.x - a.x, aby = b.y - a.y;
    double len2 = abx * abx + aby * aby;
    if (len2 == 0.0) return distance_cm(p, a);
    double t = ((p.x - a.x) * abx + (p.y - a.y) * aby) / len2;
    t = std::clamp(t, 0.0, 1.0);
    Location proj{a.x + t * abx, a.y + t * aby};
    return distance_cm(p, proj);
}

bool inside_ellipse(const Location& p, const Location& c, double rx, double ry) {
    if (rx <= 0.0 || ry <= 0.0) return false;
    double nx = (p.x - c.x) / rx;
    double ny = (p.y - c.y) / ry;
    return nx * nx + ny * ny <= 1.0;
}

}  // namespace

WoundField WoundField::from_config(const WoundConfig& cfg, double patch_w,
                                   double patch_h) {
    WoundField f;
    f.scenario_ = cfg.scenario;
    f.center_ = {cfg.center_x, cfg.center_y};
    f.radius_ = cfg.radius;
    f.radius_b_ = cfg.radius_b;
    f.growth_rounds_ = cfg.growth_rounds;
    f.heal_rounds_ = cfg.heal_rounds;
    if (cfg.scenario == WoundScenario::Scratch) {
        // Three disjoint cuts in patch-relative coordinates. The middle one
        // heals last, the top one first.
        auto px = [patch_w](double f_) { return f_ * patch_w; };
        auto py = [patch_h](double f_) { return f_ * patch_h; };
        int h = cfg.heal_rounds;
        f.capsules_ = {
            {{px(0.15), py(0.15)}, {px(0.45), py(0.20)}, 0.06 * patch_w,
             std::max(1, static_cast<int>(std::lround(0.7 * h)))},
            {{px(0.50), py(0.475)}, {px(0.80), py(0.525)}, 0.07 * patch_w, h},
            {{px(0.20), py(0.75)}, {px(0.50), py(0.80)}, 0.06 * patch_w,
             std::max(1, static_cast<int>(std::lround(0.6 * h)))},
        };
    }
    return f;
}

int WoundField::peak_round() const {
    return scenario_ == WoundScenario::Gunshot ? growth_rounds_ : 0;
}

bool WoundField::is_abnormal(const Location& loc, int t) const {
    if (t >= heal_rounds_) return false;
    switch (scenario_) {
        case WoundScenario::Oval: {
            double shrink = 1.0 - static_cast<double>(t) / heal_rounds_;
            if (shrink <= 0.0) return false;
            return inside_ellipse(loc, center_, radius_ * shrink, radius_b_ * shrink);
        }
        case WoundScenario::Gunshot: {
            double r;
            if (t < growth_rounds_) {
                // grows linearly to 1.5x the initial radius
                r = radius_ * (1.0 + 0.5 * static_cast<double>(t) / growth_rounds_);
            } else {
                r = 1.5 * radius_ * static_cast<double>(heal_rounds_ - t) /
                    (heal_rounds_ - growth_rounds_);
            }
            if (r <= 0.0) return false;
            return inside_ellipse(loc, center_, r, r);
        }
        case WoundScenario::Scratch: {
            for (const auto& c : capsules_) {
                double r = c.r0 * (1.0 - static_cast<double>(t) / c.heal_rounds);
                if (r <= 0.0) continue;
                if (point_segment_dist(loc, c.a, c.b) <= r) return true;
            }
            return false;
        }
    }
    return false;
}

std::vector<Shape> WoundField::shapes_at(int t) const {
    std::vector<Shape> shapes;
    if (t >= heal_rounds_) return shapes;
    switch (scenario_) {
        case WoundScenario::Oval: {
            double shrink = 1.0 - static_cast<double>(t) / heal_rounds_;
            if (shrink > 0.0)
                shapes.push_back(EllipseShape{center_, radius_ * shrink,
                                              radius_b_ * shrink});
            break;
        }
        case WoundScenario::Gunshot: {
            double r;
            if (t < growth_rounds_)
                r = radius_ * (1.0 + 0.5 * static_cast<double>(t) / growth_rounds_);
            else
                r = 1.5 * radius_ * static_cast<double>(heal_rounds_ - t) /
                    (heal_rounds_ - growth_rounds_);
            if (r > 0.0) shapes.push_back(EllipseShape{center_, r, r});
            break;
        }
        case WoundScenario::Scratch: {
            for (const auto& c : capsules_) {
                double r = c.r0 * (1.0 - static_cast<double>(t) / c.heal_rounds);
                if (r > 0.0) shapes.push_back(CapsuleShape{c.a, c.b, r});
            }
            break;
        }
    }
    return shapes;
}

std::vector<NodeId> active_sensor_set(
    const WoundField& field,
    std::span<const std::pair<NodeId, Location>> sensors, int t) {
    std::vector<NodeId> out;
    for (const auto& [id, loc] : sensors)
        if (field.is_abnormal(loc, t)) out.push_back(id);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace skinmon
