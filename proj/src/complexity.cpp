#include "skinmon/complexity.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace skinmon {

namespace {

// BFS hop distances within the active-node subgraph.
std::vector<int> bfs_hops(const Topology& topo, const std::vector<bool>& active,
                          NodeId start) {
    std::vector<int> hops(topo.size(), -1);
    std::queue<NodeId> q;
    hops[start] = 0;
    q.push(start);
    while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        for (NodeId v : topo.adjacency[u]) {
            if (!active[v] || hops[v] >= 0) continue;
            hops[v] = hops[u] + 1;
            q.push(v);
        }
    }
    return hops;
}

}  // namespace

ComplexityReport complexity_counters(const MetricsSeries& series,
                                     const Topology& topo,
                                     const WoundField& wound, double slack) {
    if (series.empty()) throw std::invalid_argument("complexity: empty series");
    if (series.front().beliefs.empty())
        throw std::invalid_argument("complexity: run must record beliefs");

    ComplexityReport rep;

    std::vector<bool> active(topo.size(), false);
    for (std::size_t i = 0; i < topo.size(); ++i) {
        active[i] = wound.is_abnormal(topo.sensors[i], 0);
        if (active[i]) ++rep.active_count;
    }

    // Connected components of the round-0 active set and their hop diameters.
    std::vector<bool> seen(topo.size(), false);
    for (std::size_t i = 0; i < topo.size(); ++i) {
        if (!active[i] || seen[i]) continue;
        ComponentStats comp;
        auto hops = bfs_hops(topo, active, static_cast<NodeId>(i));
        for (std::size_t j = 0; j < topo.size(); ++j) {
            if (hops[j] >= 0) {
                comp.members.push_back(static_cast<NodeId>(j));
                seen[j] = true;
            }
        }
        for (NodeId u : comp.members) {
            auto h = bfs_hops(topo, active, u);
            for (NodeId v : comp.members)
                comp.hop_diameter = std::max(comp.hop_diameter, h[v]);
        }
        rep.components.push_back(std::move(comp));
    }

    // Convergence round: first round whose beliefs are uniform across the
    // component and identical in the following round.
    for (auto& comp : rep.components) {
        for (std::size_t r = 0; r + 1 < series.size(); ++r) {
            const auto& b = series[r].beliefs;
            const auto& b2 = series[r + 1].beliefs;
            NodeId root = b[comp.members.front()];
            bool uniform = root != kNoNode;
            for (NodeId u : comp.members)
                uniform = uniform && b[u] == root && b2[u] == root;
            if (uniform) {
                comp.convergence_round = static_cast<int>(r);
                comp.converged_root = root;
                comp.converged = true;
                break;
            }
        }
        rep.max_diameter = std::max(rep.max_diameter, comp.hop_diameter);
    }

    rep.convergence_ok = !rep.components.empty();
    int last_conv = 0;
    for (const auto& comp : rep.components) {
        if (!comp.converged ||
            comp.convergence_round > std::max(1, comp.hop_diameter)) {
            rep.convergence_ok = false;
        }
        last_conv = std::max(last_conv, comp.convergence_round);
    }

    // Formation-phase STATUS total vs. slack * N * D.
    for (int r = 0; r <= last_conv && r < static_cast<int>(series.size()); ++r)
        rep.status_formation_total += series[r].status_msgs;
    rep.status_bound =
        slack * rep.active_count * std::max(1, rep.max_diameter);
    rep.status_ok = rep.status_formation_total <= rep.status_bound;

    // Steady-round LOCATION hop total vs. slack * D * p, measured once every
    // alive counter has settled after convergence.
    int steady = last_conv + 8;
    if (steady >= static_cast<int>(series.size()))
        steady = static_cast<int>(series.size()) - 1;
    rep.steady_round = steady;
    rep.boundary_count =
        static_cast<int>(series[steady].location_origins.size());
    rep.location_steady_hops = series[steady].location_msgs;
    rep.location_bound = slack * std::max(1, rep.max_diameter) *
                         std::max(1, rep.boundary_count);
    rep.location_ok = rep.location_steady_hops <= rep.location_bound;

    return rep;
}

}  // namespace skinmon
