#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "skinmon/node.hpp"

using namespace skinmon;

namespace {

const ProtocolParams kParams{3, 6, true};
const ProtocolParams kStatic{3, 6, false};

// Active node with the given neighbors, all counters started at `alive`.
NodeState make_node(NodeId id, std::vector<NodeId> neighbor_ids, int alive = 3) {
    NodeState n;
    n.id = id;
    n.loc = {static_cast<double>(id), 0.0};
    n.budget = {1000.0, 1000.0};
    n.active = true;
    n.reset_self();
    std::sort(neighbor_ids.begin(), neighbor_ids.end());
    for (NodeId j : neighbor_ids) n.neighbors.push_back({j, alive});
    return n;
}

}  // namespace

TEST_CASE("update_status emits only when active") {
    NodeState n = make_node(5, {1, 2});
    n.active = false;
    CHECK_FALSE(update_status(n).has_value());

    n.active = true;
    auto msg = update_status(n);
    REQUIRE(msg.has_value());
    CHECK(msg->sender == 5);
    CHECK(msg->root_id == 5);
    CHECK(msg->root_energy == 1000.0);
}

TEST_CASE("a self-rooted node advertises its current energy, not a stale value") {
    NodeState n = make_node(5, {1});
    n.root_energy = 9999.0;  // stale
    n.budget.remaining = 4200.0;
    auto msg = update_status(n);
    REQUIRE(msg.has_value());
    CHECK(msg->root_energy == 4200.0);
}

TEST_CASE("a member advertises its stored root belief unchanged") {
    NodeState n = make_node(5, {1});
    n.parent_id = 1;
    n.root_id = 1;
    n.root_energy = 7777.0;
    auto msg = update_status(n);
    REQUIRE(msg.has_value());
    CHECK(msg->root_id == 1);
    CHECK(msg->root_energy == 7777.0);
}

TEST_CASE("on_status adopts a strictly higher-energy root") {
    NodeState n = make_node(9, {4});
    n.root_energy = 3000.0;
    CHECK(on_status(n, StatusMsg{4, 4, 5000.0}, kParams, 0));
    CHECK(n.parent_id == 4);
    CHECK(n.root_id == 4);
    CHECK(n.root_energy == 5000.0);
}

TEST_CASE("equal energy ties break toward the smaller root id") {
    NodeState n = make_node(7, {2});
    n.root_energy = 5000.0;  // root 7, same energy
    n.budget.remaining = 5000.0;
    CHECK(on_status(n, StatusMsg{2, 2, 5000.0}, kParams, 0));
    CHECK(n.root_id == 2);
    CHECK(n.parent_id == 2);
}

TEST_CASE("a worse offer leaves the state unchanged except the recharge") {
    NodeState n = make_node(3, {8});
    n.parent_id = 3;
    n.root_energy = 1000.0;
    n.neighbors[0].alive = 0;
    CHECK(on_status(n, StatusMsg{8, 8, 400.0}, kParams, 0));
    CHECK(n.parent_id == 3);
    CHECK(n.root_id == 3);
    CHECK(n.neighbors[0].alive == 3);
}

TEST_CASE("hearing your own id as someone's root re-roots you to yourself") {
    NodeState n = make_node(3, {8});
    n.parent_id = 8;
    n.root_id = 8;
    n.root_energy = 500.0;  // nothing better than being root itself
    n.budget.remaining = 750.0;
    CHECK(on_status(n, StatusMsg{8, 3, 9999.0}, kParams, 0));
    CHECK(n.self_rooted());
    CHECK(n.root_id == 3);
    CHECK(n.root_energy == 750.0);
}

TEST_CASE("a stale claim does not displace strictly better root knowledge") {
    NodeState n = make_node(3, {8});
    n.parent_id = 8;
    n.root_id = 8;
    n.root_energy = 2000.0;  // better than this node could offer
    n.budget.remaining = 750.0;
    CHECK(on_status(n, StatusMsg{8, 3, 9999.0}, kParams, 0));
    CHECK(n.root_id == 8);
    CHECK(n.parent_id == 8);
}

TEST_CASE("a self-rooted node refreshes on hearing its own claim") {
    NodeState n = make_node(3, {8});
    n.root_energy = 999.0;  // stale
    n.budget.remaining = 750.0;
    CHECK(on_status(n, StatusMsg{8, 3, 1.0}, kParams, 0));
    CHECK(n.self_rooted());
    CHECK(n.root_energy == 750.0);
}

TEST_CASE("alive status recharges and saturates at the cap") {
    NodeState n = make_node(1, {2}, 0);
    for (int i = 0; i < 5; ++i)
        CHECK(on_status(n, StatusMsg{2, 2, 1.0}, kParams, i));
    CHECK(n.neighbors[0].alive == kParams.alive_cap);
}

TEST_CASE("a message from an unknown sender is ignored") {
    NodeState n = make_node(1, {2});
    NodeState before = n;
    CHECK_FALSE(on_status(n, StatusMsg{77, 77, 1e9}, kParams, 0));
    CHECK(n.parent_id == before.parent_id);
    CHECK(n.root_id == before.root_id);
    CHECK(n.root_energy == before.root_energy);
}

TEST_CASE("static adoption compares ids and ignores energy") {
    NodeState n = make_node(5, {9, 2});
    n.root_energy = 100.0;
    // higher energy, higher id: ignored
    CHECK(on_status(n, StatusMsg{9, 9, 99999.0}, kStatic, 0));
    CHECK(n.root_id == 5);
    // lower id wins regardless of energy
    CHECK(on_status(n, StatusMsg{2, 2, 1.0}, kStatic, 0));
    CHECK(n.root_id == 2);
    CHECK(n.parent_id == 2);
}

TEST_CASE("root values stay frozen while the tree is stable") {
    NodeState n = make_node(9, {4, 6});
    n.parent_id = 4;
    n.root_id = 2;
    n.root_energy = 4000.0;
    // same tree, other members' snapshots differ either way: no updates
    CHECK(on_status(n, StatusMsg{6, 2, 4500.0}, kParams, 0));
    CHECK(on_status(n, StatusMsg{4, 2, 3500.0}, kParams, 0));
    CHECK(n.parent_id == 4);
    CHECK(n.root_energy == 4000.0);
}

TEST_CASE("a parent switching to a better tree carries the member along") {
    NodeState n = make_node(9, {4});
    n.parent_id = 4;
    n.root_id = 2;
    n.root_energy = 5000.0;
    CHECK(on_status(n, StatusMsg{4, 1, 7000.0}, kParams, 3));
    CHECK(n.parent_id == 4);
    CHECK(n.root_id == 1);
    CHECK(n.root_energy == 7000.0);
}

TEST_CASE("a parent defecting to a worse tree voids this branch's belief") {
    NodeState n = make_node(9, {4});
    n.parent_id = 4;
    n.root_id = 2;
    n.root_energy = 5000.0;
    n.budget.remaining = 800.0;
    CHECK(on_status(n, StatusMsg{4, 6, 900.0}, kParams, 3));
    CHECK(n.self_rooted());
    CHECK(n.root_energy == 800.0);
    // the disowned root stays banned long enough for the purge to pass
    CHECK(n.root_banned(2, 3 + kParams.alive_cap - 1));
    CHECK_FALSE(n.root_banned(2, 3 + kParams.alive_cap));
}

TEST_CASE("border_check decrements counters and stays quiet inside the region") {
    NodeState n = make_node(5, {2, 7, 9}, 4);
    n.parent_id = 2;
    auto msg = border_check(n);
    CHECK_FALSE(msg.has_value());
    for (const auto& nb : n.neighbors) CHECK(nb.alive == 3);
}

TEST_CASE("a silent neighbor makes a non-root node report its location") {
    NodeState n = make_node(5, {2, 7}, 3);
    n.parent_id = 2;
    n.root_id = 2;
    n.neighbors[1].alive = 0;  // neighbor 7 asleep
    auto msg = border_check(n);
    REQUIRE(msg.has_value());
    CHECK(msg->sender == 5);
    CHECK(msg->loc == n.loc);
    CHECK(msg->parent_id == 2);
}

TEST_CASE("roots never report their own boundary") {
    NodeState n = make_node(5, {2, 7}, 3);
    n.neighbors[0].alive = 0;
    CHECK(n.self_rooted());
    CHECK_FALSE(border_check(n).has_value());
}

TEST_CASE("losing the parent mid-scan re-roots and suppresses the report") {
    // neighbor 2 is already silent (boundary flag would be set); parent 7
    // decays to zero during the same scan.
    NodeState n = make_node(5, {2, 7}, 3);
    n.parent_id = 7;
    n.root_id = 7;
    n.neighbors[0].alive = 0;
    n.neighbors[1].alive = 1;
    n.budget.remaining = 123.0;
    auto msg = border_check(n);
    CHECK_FALSE(msg.has_value());
    CHECK(n.self_rooted());
    CHECK(n.root_energy == 123.0);
}

TEST_CASE("route_location follows the convergecast rules") {
    NodeState n = make_node(5, {2, 7});
    n.parent_id = 2;

    // overheard: addressed to someone else
    auto r = route_location(n, LocationMsg{7, {1.0, 1.0}, 9});
    CHECK(r.action == RouteAction::Discard);

    // addressed to this node: forward one hop up with the parent rewritten
    r = route_location(n, LocationMsg{7, {1.0, 1.0}, 5});
    REQUIRE(r.action == RouteAction::Forward);
    CHECK(r.forward.sender == 5);
    CHECK(r.forward.parent_id == 2);
    CHECK(r.forward.loc == Location{1.0, 1.0});

    // roots consume reports
    n.reset_self();
    r = route_location(n, LocationMsg{7, {1.0, 1.0}, 5});
    CHECK(r.action == RouteAction::Ingest);

    // a node's own report coming back marks a parent loop
    n.parent_id = 2;
    r = route_location(n, LocationMsg{7, n.loc, 5});
    CHECK(r.action == RouteAction::EchoReset);
}

TEST_CASE("root_self_announce carries the root's own id and location") {
    NodeState n = make_node(6, {1});
    auto msg = root_self_announce(n);
    CHECK(msg.sender == 6);
    CHECK(msg.parent_id == 6);
    CHECK(msg.loc == n.loc);
}

TEST_CASE("banned roots are not re-adopted until the ban expires") {
    NodeState n = make_node(9, {4});
    n.ban_root(2, 5);
    CHECK(on_status(n, StatusMsg{4, 2, 99999.0}, kParams, 4));
    CHECK(n.root_id == 9);
    CHECK(on_status(n, StatusMsg{4, 2, 99999.0}, kParams, 5));
    CHECK(n.root_id == 2);
}
