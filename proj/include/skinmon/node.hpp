// Per-node protocol state machine: status gossip, energy-efficient tree
// adoption with alive-status recharge, and border detection with re-rooting
// on parent loss. All operations are invoked sequentially by the engine
// inside a round; nothing here touches global state.
#pragma once

#include <optional>
#include <vector>

#include "skinmon/ledger.hpp"
#include "skinmon/types.hpp"

namespace skinmon {

struct ProtocolParams {
    int recharge = 3;
    int alive_cap = 6;
    // When false (the static baseline) adoption compares root ids only and
    // ignores energy, freezing each component's root on its smallest member.
    bool energy_adoption = true;
};

struct NeighborStatus {
    NodeId id = kNoNode;
    int alive = 0;  // rounds of assumed liveness left (i.as)
};

struct RootBan {
    NodeId root = kNoNode;
    int until_round = 0;
};

struct NodeState {
    NodeId id = kNoNode;
    Location loc;
    EnergyBudget budget;
    NodeId parent_id = kNoNode;
    NodeId root_id = kNoNode;
    double root_energy = 0.0;
    bool active = false;
    std::vector<NeighborStatus> neighbors;  // ascending id, fixed by topology
    std::optional<BoundaryLedger> ledger;   // present iff parent_id == id
    std::vector<RootBan> banned_roots;      // stale roots shed by echo resets

    bool alive() const { return budget.remaining > 0.0; }
    bool self_rooted() const { return parent_id == id; }

    // parent = root = self, advertised root energy = own remaining energy.
    void reset_self() {
        parent_id = id;
        root_id = id;
        root_energy = budget.remaining;
    }

    NeighborStatus* find_neighbor(NodeId nid);
    bool root_banned(NodeId root, int round) const;
    void ban_root(NodeId root, int until_round);
};

// Status emission. Active nodes broadcast (id, root id, root energy); a
// self-rooted node refreshes the carried energy to its current remaining
// energy first. Inactive nodes stay silent.
std::optional<StatusMsg> update_status(NodeState& node);

// Processes one received STATUS. Returns false when the sender is not a
// known neighbor (the message is ignored).
bool on_status(NodeState& node, const StatusMsg& msg, const ProtocolParams& params,
               int round);

// Once per round after all status processing: scans neighbors in ascending
// id order, decrementing their alive counters. A zero counter marks the node
// as a boundary node; if the decrement kills the parent's counter the node
// re-roots to itself immediately and reports nothing this round. Boundary
// nodes that are not roots emit a LOCATION report toward their parent.
std::optional<LocationMsg> border_check(NodeState& node);

// The root's once-per-round broadcast of its own id and location.
LocationMsg root_self_announce(const NodeState& node);

enum class RouteAction {
    Discard,     // overheard, not addressed to this node
    Ingest,      // this node is the root; feed the boundary ledger
    Forward,     // re-emit with the parent field rewritten one hop up
    EchoReset,   // own report came back: parent chain is a loop, re-root
};

struct RouteResult {
    RouteAction action = RouteAction::Discard;
    LocationMsg forward;  // valid when action == Forward
};

// Hop-by-hop convergecast rule for a received LOCATION message.
RouteResult route_location(const NodeState& node, const LocationMsg& msg);

}  // namespace skinmon
