#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "skinmon/topology.hpp"

using namespace skinmon;

namespace {

SimConfig grid_cfg(double spacing, double range, double jitter = 0.0) {
    SimConfig cfg;
    cfg.patch_width = 10.0;
    cfg.patch_height = 10.0;
    cfg.grid_spacing = spacing;
    cfg.comm_range = range;
    cfg.placement_jitter = jitter;
    return cfg;
}

}  // namespace

TEST_CASE("unit lattice neighbor counts follow the communication range") {
    // diagonal sqrt(2) within range: 8 neighbors
    auto topo = Topology::build(grid_cfg(1.0, 1.5));
    REQUIRE(topo.size() == 100);
    NodeId interior = 4 * 10 + 4;
    CHECK(topo.adjacency[interior].size() == 8);

    // orthogonal only: 4 neighbors
    topo = Topology::build(grid_cfg(1.0, 1.1));
    CHECK(topo.adjacency[interior].size() == 4);
}

TEST_CASE("same seed, same deployment; different seed, different jitter") {
    SimConfig cfg = grid_cfg(0.5, 0.85, 0.05);
    cfg.rng_seed = 11;
    auto a = Topology::build(cfg);
    auto b = Topology::build(cfg);
    CHECK(a.sensors == b.sensors);
    CHECK(a.adjacency == b.adjacency);

    cfg.rng_seed = 12;
    auto c = Topology::build(cfg);
    CHECK(a.sensors != c.sensors);
}

TEST_CASE("adjacency is symmetric, sorted and loop-free") {
    SimConfig cfg = grid_cfg(0.5, 0.85, 0.05);
    auto topo = Topology::build(cfg);
    for (std::size_t i = 0; i < topo.size(); ++i) {
        const auto& nbrs = topo.adjacency[i];
        CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
        for (NodeId j : nbrs) {
            CHECK(j != i);
            const auto& back = topo.adjacency[j];
            CHECK(std::binary_search(back.begin(), back.end(),
                                     static_cast<NodeId>(i)));
        }
    }
}

TEST_CASE("adjacency matches the brute-force oracle") {
    SimConfig cfg = grid_cfg(1.0, 1.6, 0.2);
    cfg.rng_seed = 5;
    auto topo = Topology::build(cfg);
    auto want = oracle::brute_adjacency(topo.sensors, cfg.comm_range);
    CHECK(topo.adjacency == want);
}

TEST_CASE("jittered sensors stay inside the patch") {
    SimConfig cfg = grid_cfg(0.5, 0.85, 0.2);
    auto topo = Topology::build(cfg);
    for (const auto& s : topo.sensors) {
        CHECK(s.x >= 0.0);
        CHECK(s.x <= cfg.patch_width);
        CHECK(s.y >= 0.0);
        CHECK(s.y <= cfg.patch_height);
    }
}

TEST_CASE("relays form a 3x3 grid over the patch") {
    auto topo = Topology::build(grid_cfg(1.0, 1.5));
    REQUIRE(topo.relays.size() == 9);
    // a sensor at a relay position has zero relay distance
    CHECK(topo.nearest_relay_m(topo.relays[4]) == 0.0);
    // worst case stays under half a cell diagonal
    double worst = 0.0;
    for (const auto& s : topo.sensors)
        worst = std::max(worst, topo.nearest_relay_m(s));
    CHECK(worst <= std::hypot(10.0 / 3.0, 10.0 / 3.0) / 2.0 / 100.0 + 1e-12);
}

TEST_CASE("custom deployments derive adjacency from positions") {
    std::vector<Location> locs{{0, 0}, {1, 0}, {2.5, 0}};
    auto topo = Topology::from_positions(locs, {{1, 1}}, 1.2);
    CHECK(topo.adjacency[0] == std::vector<NodeId>{1});
    CHECK(topo.adjacency[1] == std::vector<NodeId>{0});
    CHECK(topo.adjacency[2].empty());
}
