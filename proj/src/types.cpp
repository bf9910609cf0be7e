#include "skinmon/types.hpp"

namespace skinmon {

MsgKind kind_of(const Message& msg) {
    return static_cast<MsgKind>(msg.index());
}

int message_bits(const Message& msg) {
    switch (kind_of(msg)) {
        case MsgKind::Status:
            return kStatusBits;
        case MsgKind::Location:
            return kLocationBits;
        case MsgKind::Change:
            return kChangeBits;
        case MsgKind::RelayBatch:
            return relay_batch_bits(
                static_cast<int>(std::get<RelayBatchMsg>(msg).samples.size()));
    }
    return 0;
}

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::Proposed: return "proposed";
        case Scheme::WoundOnlyStatic: return "wound_only_static";
        case Scheme::AllActive: return "all_active";
    }
    return "?";
}

std::string to_string(WoundScenario s) {
    switch (s) {
        case WoundScenario::Gunshot: return "gunshot";
        case WoundScenario::Scratch: return "scratch";
        case WoundScenario::Oval: return "oval";
    }
    return "?";
}

std::string to_string(ThresholdMode m) {
    return m == ThresholdMode::Band ? "band" : "literal";
}

std::vector<std::string> validate(const SimConfig& cfg) {
    std::vector<std::string> errs;
    auto require = [&errs](bool ok, const char* msg) {
        if (!ok) errs.emplace_back(msg);
    };
    require(cfg.patch_width > 0.0, "patch.width must be > 0");
    require(cfg.patch_height > 0.0, "patch.height must be > 0");
    require(cfg.grid_spacing > 0.0, "patch.grid_spacing must be > 0");
    require(cfg.placement_jitter >= 0.0, "patch.jitter must be >= 0");
    require(cfg.comm_range > cfg.grid_spacing,
            "patch.comm_range must be > patch.grid_spacing");
    require(cfg.e_trx > 0.0, "radio.e_trx must be > 0");
    require(cfg.e_rec > 0.0, "radio.e_rec must be > 0");
    require(cfg.eps_amp > 0.0, "radio.eps_amp must be > 0");
    require(cfg.initial_energy > 0.0, "radio.initial_energy must be > 0");
    require(cfg.recharge >= 1, "protocol.recharge must be >= 1");
    require(cfg.alive_cap >= cfg.recharge,
            "protocol.alive_cap must be >= protocol.recharge");
    require(cfg.max_dir >= 1, "protocol.max_dir must be >= 1");
    require(cfg.max_dir <= 255, "protocol.max_dir must be <= 255 (8-bit bin field)");
    require(cfg.dof > 0.0, "protocol.dof must be > 0");
    require(cfg.threshold > 0.0 && cfg.threshold < 1.0,
            "protocol.threshold must be in (0, 1)");
    require(cfg.t_interval >= 1, "protocol.t_interval must be >= 1");
    require(cfg.sample_count >= 1, "protocol.sample_count must be >= 1");
    require(cfg.rounds >= 0, "run.rounds must be >= 0");
    require(cfg.snapshot_interval >= 1, "run.snapshot_interval must be >= 1");
    require(cfg.wound.radius > 0.0, "wound.radius must be > 0");
    require(cfg.wound.radius_b > 0.0, "wound.radius_b must be > 0");
    require(cfg.wound.growth_rounds >= 1, "wound.growth_rounds must be >= 1");
    require(cfg.wound.heal_rounds >= 1, "wound.heal_rounds must be >= 1");
    if (cfg.wound.scenario == WoundScenario::Gunshot)
        require(cfg.wound.growth_rounds < cfg.wound.heal_rounds,
                "wound.growth_rounds must be < wound.heal_rounds");
    return errs;
}

}  // namespace skinmon
