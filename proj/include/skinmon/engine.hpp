// Deterministic synchronous-round simulation. Each round runs a fixed phase
// order: wound advance and wake/sleep, status emission (roots also announce
// themselves), broadcast delivery, border checks, LOCATION convergecast with
// root-side ingestion, periodic relay reports, metrics.
#pragma once

#include <optional>
#include <vector>

#include "skinmon/ledger.hpp"
#include "skinmon/node.hpp"
#include "skinmon/radio.hpp"
#include "skinmon/topology.hpp"
#include "skinmon/types.hpp"
#include "skinmon/wound.hpp"

namespace skinmon {

struct RoundMetrics {
    int round = 0;
    double energy_nj = 0.0;      // full message prices, tx plus all receptions
    double cum_energy_nj = 0.0;
    int dead_nodes = 0;          // total dead so far
    int active_nodes = 0;        // live nodes on abnormal skin
    long status_msgs = 0;        // transmissions, not receptions
    long location_msgs = 0;      // boundary reports + forwards + root announces
    long change_msgs = 0;
    long relay_msgs = 0;
    long dropped_locations = 0;    // hop-guard casualties, normally zero
    long unknown_sender_msgs = 0;  // diagnostics; cannot occur with static topology
    std::vector<NodeId> root_ids;          // self-rooted live active, ascending
    std::vector<NodeId> location_origins;  // border_check emitters this round
    std::vector<ChangeReport> change_reports;
    std::vector<RelaySample> relay_samples;
    std::vector<NodeId> beliefs;  // per node root belief, kNoNode when idle
};

using MetricsSeries = std::vector<RoundMetrics>;

// One transmission with its delivered reception count, for energy audits.
struct TxEvent {
    int round = 0;
    NodeId sender = kNoNode;
    MsgKind kind = MsgKind::Status;
    int bits = 0;
    double dist_m = 0.0;
    int receivers = 0;
};

struct Snapshot {
    struct Node {
        NodeId id = kNoNode;
        Location loc;
        bool active = false;
        bool alive = false;
        NodeId parent_id = kNoNode;
        bool self_rooted = false;
    };
    int round = 0;
    double patch_w = 0.0, patch_h = 0.0;
    std::vector<Node> nodes;
    std::vector<Shape> active_shapes;  // red
    std::vector<Shape> healed_shapes;  // black: past extent minus active
};

class Simulation {
public:
    explicit Simulation(const SimConfig& cfg);
    Simulation(const SimConfig& cfg, Topology topology);

    // Executes the current round and advances the clock.
    RoundMetrics step();

    int round() const { return round_; }
    const SimConfig& config() const { return cfg_; }
    const Topology& topology() const { return topo_; }
    const WoundField& wound() const { return wound_; }
    const std::vector<NodeState>& nodes() const { return nodes_; }
    const std::vector<TxEvent>& message_log() const { return log_; }

    // Experiment hook: overrides one node's battery (initial and remaining).
    void set_node_energy(NodeId id, double energy_nj);

    Snapshot snapshot() const;

private:
    struct Flight {
        LocationMsg msg;
        NodeId origin = kNoNode;
        std::size_t ev = 0;  // message-log slot, when recording
    };
    struct Staged {
        Location loc;
        NodeId origin = kNoNode;
        double dist = 0.0;
    };

    void wake(NodeState& n);
    void sleep(NodeState& n);
    void break_parent_cycles();
    std::size_t charge_tx(NodeState& n, MsgKind kind, int bits, double dist_m,
                          RoundMetrics& m);
    void charge_rx(NodeState& n, int bits, RoundMetrics& m, std::size_t event);
    void convergecast(std::vector<Flight> flights, RoundMetrics& m);
    void ingest_staged(RoundMetrics& m);
    void relay_report_phase(RoundMetrics& m);

    SimConfig cfg_;
    Topology topo_;
    WoundField wound_;
    RadioParams radio_;
    ProtocolParams proto_;
    std::vector<NodeState> nodes_;
    std::vector<std::vector<Staged>> staged_;   // per node, roots only
    std::vector<Flight> pending_;               // hop_per_round carryover
    std::vector<TxEvent> log_;
    double cum_energy_ = 0.0;
    int round_ = 0;
};

struct RunResult {
    MetricsSeries series;
    std::vector<Snapshot> snapshots;
    std::vector<TxEvent> log;
};

// Builds the topology, applies the configured scheme and iterates step() for
// cfg.rounds, emitting snapshots on the configured cadence plus the four
// heal-fraction milestones (0, 1/3, 2/3, 1).
RunResult run_simulation(const SimConfig& cfg);

}  // namespace skinmon
