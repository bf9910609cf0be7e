// Empirical checks of the protocol's round/message growth against its
// expected bounds: tree formation converges within a component's hop
// diameter, formation-phase STATUS traffic stays within a constant factor of
// N*D, and steady-state boundary-report traffic within a factor of D*p.
//
// Requires a run recorded with record_beliefs = true over an effectively
// static wound (the active set is taken from round 0).
#pragma once

#include <vector>

#include "skinmon/engine.hpp"
#include "skinmon/topology.hpp"
#include "skinmon/wound.hpp"

namespace skinmon {

struct ComponentStats {
    std::vector<NodeId> members;
    int hop_diameter = 0;
    int convergence_round = -1;  // first round with a uniform, stable belief
    NodeId converged_root = kNoNode;
    bool converged = false;
};

struct ComplexityReport {
    std::vector<ComponentStats> components;
    int max_diameter = 0;
    int active_count = 0;

    long status_formation_total = 0;  // STATUS messages through convergence
    double status_bound = 0.0;        // slack * N * D

    int steady_round = -1;
    int boundary_count = 0;           // p: LOCATION origins in the steady round
    long location_steady_hops = 0;    // LOCATION transmissions that round
    double location_bound = 0.0;      // slack * D * p

    bool convergence_ok = false;
    bool status_ok = false;
    bool location_ok = false;

    bool all_ok() const { return convergence_ok && status_ok && location_ok; }
};

ComplexityReport complexity_counters(const MetricsSeries& series,
                                     const Topology& topo,
                                     const WoundField& wound,
                                     double slack = 4.0);

}  // namespace skinmon
