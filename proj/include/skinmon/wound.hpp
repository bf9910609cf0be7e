// Spatio-temporal models of abnormal skin. A field is a pure predicate over
// (location, round): gunshot wounds grow then shrink, scratches are three
// independently healing capsules, ovals shrink uniformly. Every scenario is
// empty from its heal round onward.
#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "skinmon/types.hpp"

namespace skinmon {

struct EllipseShape {
    Location center;
    double rx = 0.0;  // semi-axis along x, cm
    double ry = 0.0;
};

struct CapsuleShape {
    Location a;
    Location b;
    double r = 0.0;
};

using Shape = std::variant<EllipseShape, CapsuleShape>;

class WoundField {
public:
    static WoundField from_config(const WoundConfig& cfg, double patch_w,
                                  double patch_h);

    bool is_abnormal(const Location& loc, int t) const;

    // Exact geometry at round t; empty shapes are omitted.
    std::vector<Shape> shapes_at(int t) const;

    // Smallest round from which the region stays empty.
    int healed_round() const { return heal_rounds_; }

    // Round of maximal extent (growth_rounds for gunshot, 0 otherwise).
    int peak_round() const;

    WoundScenario scenario() const { return scenario_; }

private:
    WoundScenario scenario_ = WoundScenario::Oval;
    Location center_;
    double radius_ = 0.0;
    double radius_b_ = 0.0;
    int growth_rounds_ = 1;
    int heal_rounds_ = 1;
    struct TimedCapsule {
        Location a, b;
        double r0;
        int heal_rounds;
    };
    std::vector<TimedCapsule> capsules_;
};

// IDs of the sensors lying on abnormal skin at round t, ascending.
std::vector<NodeId> active_sensor_set(
    const WoundField& field,
    std::span<const std::pair<NodeId, Location>> sensors, int t);

}  // namespace skinmon
