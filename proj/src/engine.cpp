#include "skinmon/engine.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace skinmon {

namespace {
constexpr std::size_t kNoEvent = std::numeric_limits<std::size_t>::max();
}

Simulation::Simulation(const SimConfig& cfg)
    : Simulation(cfg, Topology::build(cfg)) {}

Simulation::Simulation(const SimConfig& cfg, Topology topology)
    : cfg_(cfg),
      topo_(std::move(topology)),
      wound_(WoundField::from_config(cfg.wound, cfg.patch_width, cfg.patch_height)),
      radio_{cfg.e_trx, cfg.e_rec, cfg.eps_amp},
      proto_{cfg.recharge, cfg.alive_cap,
             cfg.scheme != Scheme::WoundOnlyStatic} {
    auto errs = validate(cfg);
    if (!errs.empty()) {
        std::string joined = "invalid config:";
        for (const auto& e : errs) joined += "\n  " + e;
        throw std::invalid_argument(joined);
    }
    nodes_.resize(topo_.size());
    staged_.resize(topo_.size());
    for (std::size_t i = 0; i < topo_.size(); ++i) {
        NodeState& n = nodes_[i];
        n.id = static_cast<NodeId>(i);
        n.loc = topo_.sensors[i];
        n.budget = {cfg.initial_energy, cfg.initial_energy};
        n.reset_self();
        n.neighbors.reserve(topo_.adjacency[i].size());
        for (NodeId j : topo_.adjacency[i]) n.neighbors.push_back({j, 0});
    }
}

void Simulation::set_node_energy(NodeId id, double energy_nj) {
    NodeState& n = nodes_.at(id);
    n.budget = {energy_nj, energy_nj};
    if (n.self_rooted()) n.root_energy = energy_nj;
}

void Simulation::wake(NodeState& n) {
    n.active = true;
    n.reset_self();
    for (auto& nb : n.neighbors) nb.alive = 0;
    n.ledger.reset();
    n.banned_roots.clear();
}

void Simulation::sleep(NodeState& n) {
    n.active = false;
    n.reset_self();
    for (auto& nb : n.neighbors) nb.alive = 0;
    n.ledger.reset();
    n.banned_roots.clear();
}

std::size_t Simulation::charge_tx(NodeState& n, MsgKind kind, int bits,
                                  double dist_m, RoundMetrics& m) {
    double cost = tx_energy(radio_, bits, dist_m);
    n.budget = debit(n.budget, cost).budget;
    m.energy_nj += cost;
    switch (kind) {
        case MsgKind::Status: ++m.status_msgs; break;
        case MsgKind::Location: ++m.location_msgs; break;
        case MsgKind::Change: ++m.change_msgs; break;
        case MsgKind::RelayBatch: ++m.relay_msgs; break;
    }
    if (cfg_.record_message_log) {
        log_.push_back(TxEvent{round_, n.id, kind, bits, dist_m, 0});
        return log_.size() - 1;
    }
    return kNoEvent;
}

void Simulation::charge_rx(NodeState& n, int bits, RoundMetrics& m,
                           std::size_t event) {
    double cost = rx_energy(radio_, bits);
    n.budget = debit(n.budget, cost).budget;
    m.energy_nj += cost;
    if (event != kNoEvent) ++log_[event].receivers;
}

RoundMetrics Simulation::step() {
    const int t = round_;
    const double bcast_m = cfg_.comm_range / 100.0;
    RoundMetrics m;
    m.round = t;

    // Phase 1: advance the wound, recompute the active set. Waking and
    // sleeping nodes start from a fresh protocol state.
    for (NodeState& n : nodes_) {
        bool abnormal = cfg_.scheme == Scheme::AllActive
                            ? true
                            : wound_.is_abnormal(n.loc, t);
        bool want = abnormal && n.alive();
        if (want && !n.active)
            wake(n);
        else if (!want && n.active)
            sleep(n);
    }

    // Phase 2: status emission; self-rooted nodes also announce themselves.
    struct OutStatus {
        StatusMsg msg;
        std::size_t ev;
    };
    struct OutAnnounce {
        LocationMsg msg;
        std::size_t ev;
    };
    std::vector<OutStatus> statuses;
    std::vector<OutAnnounce> announces;
    for (NodeState& n : nodes_) {
        if (!n.active || !n.alive()) continue;
        auto s = update_status(n);
        if (!s) continue;
        std::size_t ev = charge_tx(n, MsgKind::Status, kStatusBits, bcast_m, m);
        statuses.push_back({*s, ev});
        if (n.alive() && n.self_rooted()) {
            LocationMsg ann = root_self_announce(n);
            std::size_t ev2 =
                charge_tx(n, MsgKind::Location, kLocationBits, bcast_m, m);
            announces.push_back({ann, ev2});
        }
    }

    // Phase 3: deliver all phase-2 broadcasts in ascending sender order.
    // Every live in-range active node pays reception; STATUS is processed
    // through on_status, announces carry no receiver-side action.
    std::size_t ai = 0;
    for (const auto& out : statuses) {
        for (NodeId j : topo_.adjacency[out.msg.sender]) {
            NodeState& r = nodes_[j];
            if (!r.active || !r.alive()) continue;
            charge_rx(r, kStatusBits, m, out.ev);
            if (!on_status(r, out.msg, proto_, t)) ++m.unknown_sender_msgs;
        }
        while (ai < announces.size() &&
               announces[ai].msg.sender == out.msg.sender) {
            for (NodeId j : topo_.adjacency[out.msg.sender]) {
                NodeState& r = nodes_[j];
                if (!r.active || !r.alive()) continue;
                charge_rx(r, kLocationBits, m, announces[ai].ev);
            }
            ++ai;
        }
    }

    // Adoption can momentarily close a parent loop when two nodes pick up
    // each other's relayed beliefs in the same round; loop members restart
    // from themselves so the parent graph stays a forest.
    break_parent_cycles();

    // Phase 4: border checks; boundary nodes emit LOCATION toward parents.
    std::vector<Flight> flights = std::move(pending_);
    pending_.clear();
    for (NodeState& n : nodes_) {
        if (!n.active || !n.alive()) continue;
        auto lm = border_check(n);
        if (!lm) continue;
        std::size_t ev = charge_tx(n, MsgKind::Location, kLocationBits, bcast_m, m);
        m.location_origins.push_back(n.id);
        flights.push_back(Flight{*lm, n.id, ev});
    }

    // Roles settled for this round: a ledger exists exactly at live active
    // roots.
    for (NodeState& n : nodes_) {
        if (n.active && n.alive() && n.self_rooted()) {
            if (!n.ledger) n.ledger.emplace(n.loc, cfg_.max_dir);
        } else if (n.ledger) {
            n.ledger.reset();
        }
    }

    // Phase 5: convergecast, then root-side ingestion.
    convergecast(std::move(flights), m);
    ingest_staged(m);

    // Phase 6: periodic uniform ledger samples to the nearest relay.
    if (t % cfg_.t_interval == 0) relay_report_phase(m);

    // Phase 7: bookkeeping.
    for (const NodeState& n : nodes_) {
        if (!n.alive()) ++m.dead_nodes;
        if (n.active && n.alive()) {
            ++m.active_nodes;
            if (n.self_rooted()) m.root_ids.push_back(n.id);
        }
    }
    cum_energy_ += m.energy_nj;
    m.cum_energy_nj = cum_energy_;
    if (cfg_.record_beliefs) {
        m.beliefs.assign(nodes_.size(), kNoNode);
        for (const NodeState& n : nodes_)
            if (n.active && n.alive()) m.beliefs[n.id] = n.root_id;
    }
    ++round_;
    return m;
}

void Simulation::break_parent_cycles() {
    // 0 = unvisited, 1 = on the current walk, 2 = settled
    std::vector<std::uint8_t> mark(nodes_.size(), 0);
    std::vector<NodeId> path;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (mark[i]) continue;
        path.clear();
        NodeId cur = static_cast<NodeId>(i);
        while (true) {
            NodeState& n = nodes_[cur];
            bool chained = n.active && n.alive() && !n.self_rooted();
            if (!chained || mark[cur] == 2) {
                if (!mark[cur]) mark[cur] = 2;
                break;
            }
            if (mark[cur] == 1) {
                // Found a loop: reset every node on it.
                auto at = std::find(path.begin(), path.end(), cur);
                for (auto it = at; it != path.end(); ++it)
                    nodes_[*it].reset_self();
                break;
            }
            mark[cur] = 1;
            path.push_back(cur);
            cur = n.parent_id;
        }
        for (NodeId u : path) mark[u] = 2;
    }
}

void Simulation::convergecast(std::vector<Flight> flights, RoundMetrics& m) {
    const double bcast_m = cfg_.comm_range / 100.0;
    const int hop_guard = static_cast<int>(nodes_.size()) + 2;
    int hops = 0;
    while (!flights.empty()) {
        if (!cfg_.hop_per_round && hops >= hop_guard) {
            m.dropped_locations += static_cast<long>(flights.size());
            break;
        }
        std::sort(flights.begin(), flights.end(),
                  [](const Flight& a, const Flight& b) {
                      if (a.msg.sender != b.msg.sender)
                          return a.msg.sender < b.msg.sender;
                      return a.origin < b.origin;
                  });
        std::vector<Flight> next;
        for (const Flight& f : flights) {
            for (NodeId j : topo_.adjacency[f.msg.sender]) {
                NodeState& r = nodes_[j];
                if (!r.active || !r.alive()) continue;
                charge_rx(r, kLocationBits, m, f.ev);
                if (r.id != f.msg.parent_id) continue;
                RouteResult rr = route_location(r, f.msg);
                switch (rr.action) {
                    case RouteAction::Discard:
                        break;
                    case RouteAction::EchoReset: {
                        NodeId stale = r.root_id;
                        r.reset_self();
                        r.ban_root(stale, round_ + cfg_.alive_cap);
                        break;
                    }
                    case RouteAction::Ingest:
                        staged_[j].push_back(
                            Staged{f.msg.loc, f.origin,
                                   distance_cm(r.loc, f.msg.loc)});
                        break;
                    case RouteAction::Forward: {
                        std::size_t ev = charge_tx(r, MsgKind::Location,
                                                   kLocationBits, bcast_m, m);
                        next.push_back(Flight{rr.forward, f.origin, ev});
                        break;
                    }
                }
            }
        }
        flights = std::move(next);
        ++hops;
        if (cfg_.hop_per_round) {
            pending_ = std::move(flights);
            break;
        }
    }
}

void Simulation::ingest_staged(RoundMetrics& m) {
    for (std::size_t i = 0; i < staged_.size(); ++i) {
        auto& staged = staged_[i];
        if (staged.empty()) continue;
        NodeState& n = nodes_[i];
        if (!n.active || !n.alive() || !n.self_rooted()) {
            staged.clear();
            continue;
        }
        if (!n.ledger) n.ledger.emplace(n.loc, cfg_.max_dir);
        // Farthest-first so each bin's comparison uses the round's outermost
        // sample; ties resolved by origin for determinism.
        std::sort(staged.begin(), staged.end(),
                  [](const Staged& a, const Staged& b) {
                      if (a.dist != b.dist) return a.dist > b.dist;
                      return a.origin < b.origin;
                  });
        for (const Staged& s : staged) {
            if (!n.alive()) break;
            auto rep = n.ledger->ingest(s.loc, round_, cfg_.threshold,
                                        cfg_.threshold_mode, cfg_.dof);
            if (rep) {
                charge_tx(n, MsgKind::Change, kChangeBits,
                          topo_.nearest_relay_m(n.loc), m);
                m.change_reports.push_back(*rep);
            }
        }
        staged.clear();
    }
}

void Simulation::relay_report_phase(RoundMetrics& m) {
    for (NodeState& n : nodes_) {
        if (!n.active || !n.alive() || !n.self_rooted() || !n.ledger) continue;
        auto samples = n.ledger->uniform_samples(cfg_.sample_count);
        if (samples.empty()) continue;
        int bits = relay_batch_bits(static_cast<int>(samples.size()));
        charge_tx(n, MsgKind::RelayBatch, bits, topo_.nearest_relay_m(n.loc), m);
        m.relay_samples.insert(m.relay_samples.end(), samples.begin(),
                               samples.end());
    }
}

Snapshot Simulation::snapshot() const {
    Snapshot s;
    int t_view = std::max(0, round_ - 1);
    s.round = t_view;
    s.patch_w = cfg_.patch_width;
    s.patch_h = cfg_.patch_height;
    s.active_shapes = wound_.shapes_at(t_view);
    int extent = std::min(t_view, wound_.peak_round());
    s.healed_shapes = wound_.shapes_at(extent);
    s.nodes.reserve(nodes_.size());
    for (const NodeState& n : nodes_)
        s.nodes.push_back(Snapshot::Node{n.id, n.loc, n.active, n.alive(),
                                         n.parent_id, n.self_rooted()});
    return s;
}

RunResult run_simulation(const SimConfig& cfg) {
    Simulation sim(cfg);
    RunResult out;
    if (cfg.rounds == 0) {
        out.snapshots.push_back(sim.snapshot());
        out.log = sim.message_log();
        return out;
    }
    int heal = sim.wound().healed_round();
    std::set<int> marks{0, heal / 3, 2 * heal / 3, heal};
    out.series.reserve(static_cast<std::size_t>(cfg.rounds));
    for (int t = 0; t < cfg.rounds; ++t) {
        out.series.push_back(sim.step());
        if (t % cfg.snapshot_interval == 0 || marks.count(t))
            out.snapshots.push_back(sim.snapshot());
    }
    out.log = sim.message_log();
    return out;
}

}  // namespace skinmon
