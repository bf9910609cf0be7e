// Deployment geometry: jittered grid of sensors over the patch, a 3x3 relay
// grid, and the symmetric within-range adjacency.
#pragma once

#include <cstdint>
#include <vector>

#include "skinmon/types.hpp"

namespace skinmon {

struct Topology {
    std::vector<Location> sensors;  // index == NodeId, row-major placement
    std::vector<Location> relays;
    std::vector<std::vector<NodeId>> adjacency;  // ascending, symmetric, no self
    double comm_range = 0.0;

    // Sensors on a grid_spacing lattice, each jittered uniformly within
    // +/- placement_jitter per axis. Deterministic for a given seed.
    static Topology build(const SimConfig& cfg);

    // Custom deployments (experiments, tests); adjacency is derived here.
    static Topology from_positions(std::vector<Location> sensors,
                                   std::vector<Location> relays,
                                   double comm_range);

    std::size_t size() const { return sensors.size(); }
    double nearest_relay_m(const Location& loc) const;
};

}  // namespace skinmon
