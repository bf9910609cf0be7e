#include "skinmon/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <unordered_map>

namespace skinmon {

namespace {

// Platform-stable uniform double in [lo, hi] from raw 64-bit draws.
double uniform(std::mt19937_64& rng, double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

void build_adjacency(Topology& topo) {
    const double range = topo.comm_range;
    const std::size_t n = topo.sensors.size();
    topo.adjacency.assign(n, {});
    if (n == 0 || range <= 0.0) return;

    // Bucket nodes into range-sized cells so only 3x3 neighborhoods are
    // compared.
    auto cell_of = [range](const Location& p) {
        return std::pair<long, long>{static_cast<long>(std::floor(p.x / range)),
                                     static_cast<long>(std::floor(p.y / range))};
    };
    std::unordered_map<long long, std::vector<NodeId>> cells;
    auto key = [](long cx, long cy) {
        return (static_cast<long long>(cx) << 32) ^ (cy & 0xffffffffLL);
    };
    for (std::size_t i = 0; i < n; ++i) {
        auto [cx, cy] = cell_of(topo.sensors[i]);
        cells[key(cx, cy)].push_back(static_cast<NodeId>(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto [cx, cy] = cell_of(topo.sensors[i]);
        for (long dx = -1; dx <= 1; ++dx) {
            for (long dy = -1; dy <= 1; ++dy) {
                auto it = cells.find(key(cx + dx, cy + dy));
                if (it == cells.end()) continue;
                for (NodeId j : it->second) {
                    if (j == i) continue;
                    if (distance_cm(topo.sensors[i], topo.sensors[j]) <= range)
                        topo.adjacency[i].push_back(j);
                }
            }
        }
        std::sort(topo.adjacency[i].begin(), topo.adjacency[i].end());
    }
}

}  // namespace

Topology Topology::build(const SimConfig& cfg) {
    Topology topo;
    topo.comm_range = cfg.comm_range;

    int cols = std::max(1, static_cast<int>(std::floor(cfg.patch_width /
                                                       cfg.grid_spacing + 1e-9)));
    int rows = std::max(1, static_cast<int>(std::floor(cfg.patch_height /
                                                       cfg.grid_spacing + 1e-9)));
    std::mt19937_64 rng(cfg.rng_seed);
    topo.sensors.reserve(static_cast<std::size_t>(cols) * rows);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            double x = (c + 0.5) * cfg.grid_spacing;
            double y = (r + 0.5) * cfg.grid_spacing;
            if (cfg.placement_jitter > 0.0) {
                x += uniform(rng, -cfg.placement_jitter, cfg.placement_jitter);
                y += uniform(rng, -cfg.placement_jitter, cfg.placement_jitter);
            }
            x = std::clamp(x, 0.0, cfg.patch_width);
            y = std::clamp(y, 0.0, cfg.patch_height);
            topo.sensors.push_back(Location{x, y});
        }
    }

    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i)
            topo.relays.push_back(Location{cfg.patch_width * (i + 0.5) / 3.0,
                                           cfg.patch_height * (j + 0.5) / 3.0});

    build_adjacency(topo);
    return topo;
}

Topology Topology::from_positions(std::vector<Location> sensors,
                                  std::vector<Location> relays,
                                  double comm_range) {
    Topology topo;
    topo.sensors = std::move(sensors);
    topo.relays = std::move(relays);
    topo.comm_range = comm_range;
    build_adjacency(topo);
    return topo;
}

double Topology::nearest_relay_m(const Location& loc) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& r : relays) best = std::min(best, distance_m(loc, r));
    return best;
}

}  // namespace skinmon
