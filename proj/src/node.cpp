#include "skinmon/node.hpp"

#include <algorithm>

namespace skinmon {

NeighborStatus* NodeState::find_neighbor(NodeId nid) {
    auto it = std::lower_bound(
        neighbors.begin(), neighbors.end(), nid,
        [](const NeighborStatus& n, NodeId v) { return n.id < v; });
    if (it == neighbors.end() || it->id != nid) return nullptr;
    return &*it;
}

bool NodeState::root_banned(NodeId root, int round) const {
    for (const auto& b : banned_roots)
        if (b.root == root && round < b.until_round) return true;
    return false;
}

void NodeState::ban_root(NodeId root, int until_round) {
    for (auto& b : banned_roots) {
        if (b.root == root) {
            b.until_round = std::max(b.until_round, until_round);
            return;
        }
    }
    banned_roots.push_back(RootBan{root, until_round});
}

std::optional<StatusMsg> update_status(NodeState& node) {
    if (!node.active) return std::nullopt;
    if (node.self_rooted()) node.root_energy = node.budget.remaining;
    return StatusMsg{node.id, node.root_id, node.root_energy};
}

bool on_status(NodeState& node, const StatusMsg& msg, const ProtocolParams& params,
               int round) {
    NeighborStatus* nb = node.find_neighbor(msg.sender);
    if (!nb) return false;

    nb->alive = std::min(params.alive_cap, nb->alive + params.recharge);

    // Someone names this node as their root. Take the role unless fresher
    // knowledge of a strictly better root is already held; such claims are
    // one gossip round stale by construction.
    if (msg.root_id == node.id) {
        bool better_informed;
        if (params.energy_adoption) {
            better_informed =
                node.root_energy > node.budget.remaining ||
                (node.root_energy == node.budget.remaining &&
                 node.root_id < node.id);
        } else {
            better_informed = node.root_id < node.id;
        }
        if (node.self_rooted() || !better_informed) node.reset_self();
        return true;
    }

    if (node.root_banned(msg.root_id, round)) return true;

    // Same tree announced again: nothing to learn. Values stay frozen at
    // adoption time, which keeps an established root in office instead of
    // letting every idle neighbor outbid it as it spends.
    if (msg.root_id == node.root_id) return true;

    bool better;
    if (params.energy_adoption) {
        better = msg.root_energy > node.root_energy ||
                 (msg.root_energy == node.root_energy && msg.root_id < node.root_id);
    } else {
        better = msg.root_id < node.root_id;
    }
    if (better) {
        node.parent_id = msg.sender;
        node.root_id = msg.root_id;
        node.root_energy = msg.root_energy;
    } else if (msg.sender == node.parent_id && !node.self_rooted()) {
        // The parent disowned the tree it relayed here, so this branch's
        // belief is void. Restart, and sit out claims for the old root long
        // enough for the purge to sweep past.
        NodeId stale = node.root_id;
        node.reset_self();
        node.ban_root(stale, round + params.alive_cap);
    }
    return true;
}

std::optional<LocationMsg> border_check(NodeState& node) {
    bool boundary = false;
    for (auto& nb : node.neighbors) {
        if (nb.alive == 0) {
            boundary = true;
        } else {
            --nb.alive;
            if (nb.id == node.parent_id && nb.alive == 0) {
                node.reset_self();
                return std::nullopt;
            }
        }
    }
    if (boundary && !node.self_rooted())
        return LocationMsg{node.id, node.loc, node.parent_id};
    return std::nullopt;
}

LocationMsg root_self_announce(const NodeState& node) {
    return LocationMsg{node.id, node.loc, node.id};
}

RouteResult route_location(const NodeState& node, const LocationMsg& msg) {
    RouteResult r;
    if (msg.parent_id != node.id) {
        r.action = RouteAction::Discard;
        return r;
    }
    if (msg.loc == node.loc) {
        // This node's own boundary report was routed back to it; the parent
        // chain loops through stale root information.
        r.action = RouteAction::EchoReset;
        return r;
    }
    if (node.self_rooted()) {
        r.action = RouteAction::Ingest;
        return r;
    }
    r.action = RouteAction::Forward;
    r.forward = LocationMsg{node.id, msg.loc, node.parent_id};
    return r;
}

}  // namespace skinmon
