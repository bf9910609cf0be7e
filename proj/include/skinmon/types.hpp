// Shared vocabulary types: identities, geometry, energy, wire messages and
// the full run configuration.
#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace skinmon {

using NodeId = std::uint32_t;

inline constexpr NodeId kNoNode = 0xffffffffu;

// Planar position on the skin patch, in centimeters.
struct Location {
    double x = 0.0;
    double y = 0.0;
};

inline bool operator==(const Location& a, const Location& b) {
    return a.x == b.x && a.y == b.y;
}

inline double distance_cm(const Location& a, const Location& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Radio pricing works in meters; geometry is kept in centimeters.
inline double distance_m(const Location& a, const Location& b) {
    return distance_cm(a, b) / 100.0;
}

// Battery state in nanojoules. remaining == 0 means the node is dead and
// never transmits or receives again.
struct EnergyBudget {
    double remaining = 0.0;
    double initial = 0.0;
};

enum class MsgKind : std::uint8_t {
    Status = 0,      // wire tag 00
    Location = 1,    // wire tag 01
    Change = 2,      // wire tag 10
    RelayBatch = 3,  // wire tag 11
};

enum class ChangeSign : std::uint8_t { Growth, Shrink };

struct StatusMsg {
    NodeId sender = kNoNode;
    NodeId root_id = kNoNode;
    double root_energy = 0.0;  // nJ, unquantized inside the simulator
    bool operator==(const StatusMsg&) const = default;
};

struct LocationMsg {
    NodeId sender = kNoNode;
    Location loc;              // boundary (or root) location being reported
    NodeId parent_id = kNoNode;  // addressee for convergecast
    bool operator==(const LocationMsg&) const = default;
};

struct ChangeMsg {
    NodeId sender = kNoNode;
    Location root_loc;
    Location boundary_loc;
    ChangeSign sign = ChangeSign::Growth;
    bool operator==(const ChangeMsg&) const = default;
};

struct RelaySample {
    std::uint8_t bin = 0;
    Location loc;
    double dist = 0.0;  // cm from root
    bool operator==(const RelaySample&) const = default;
};

struct RelayBatchMsg {
    NodeId sender = kNoNode;
    std::vector<RelaySample> samples;
    bool operator==(const RelayBatchMsg&) const = default;
};

using Message = std::variant<StatusMsg, LocationMsg, ChangeMsg, RelayBatchMsg>;

MsgKind kind_of(const Message& msg);

// Fixed wire length of a message in bits. Kind-constant except for relay
// batches, whose length grows with the sample count.
int message_bits(const Message& msg);

inline constexpr int kStatusBits = 50;    // tag(2) + sender(16) + root(16) + energy(16)
inline constexpr int kLocationBits = 66;  // tag(2) + sender(16) + x(16) + y(16) + parent(16)
inline constexpr int kChangeBits = 100;   // tag(2) + sender(16) + 4*coord(16) + sign(2)
inline constexpr int kRelayHeaderBits = 26;      // tag(2) + sender(16) + count(8)
inline constexpr int kRelaySampleBits = 56;      // bin(8) + x(16) + y(16) + dist(16)

inline int relay_batch_bits(int sample_count) {
    return kRelayHeaderBits + kRelaySampleBits * sample_count;
}

enum class Scheme { Proposed, WoundOnlyStatic, AllActive };
enum class WoundScenario { Gunshot, Scratch, Oval };
enum class ThresholdMode { Band, Literal };

std::string to_string(Scheme s);
std::string to_string(WoundScenario s);
std::string to_string(ThresholdMode m);

struct WoundConfig {
    WoundScenario scenario = WoundScenario::Oval;
    double center_x = 10.0;  // cm
    double center_y = 10.0;
    double radius = 6.0;     // gunshot r0, or oval semi-axis a0
    double radius_b = 4.0;   // oval semi-axis b0
    int growth_rounds = 30;  // gunshot growth phase length
    int heal_rounds = 100;   // region empty for all t >= heal_rounds
};

struct SimConfig {
    // [patch]
    double patch_width = 20.0;      // cm
    double patch_height = 20.0;
    double grid_spacing = 0.5;
    double placement_jitter = 0.03;
    double comm_range = 0.85;

    // [radio]
    double e_trx = 16.7;            // nJ/bit
    double e_rec = 36.1;            // nJ/bit
    double eps_amp = 1.97;          // nJ/bit/m^2
    double initial_energy = 1.0e6;     // nJ per node

    // [protocol]
    int recharge = 3;
    int alive_cap = 6;
    int max_dir = 20;
    double dof = 2.0;
    double threshold = 0.10;
    ThresholdMode threshold_mode = ThresholdMode::Band;
    int t_interval = 5;
    int sample_count = 10;
    bool hop_per_round = false;

    // [wound]
    WoundConfig wound;

    // [run]
    Scheme scheme = Scheme::Proposed;
    int rounds = 160;
    std::uint64_t rng_seed = 1;
    int snapshot_interval = 10;

    // Instrumentation toggles (library-level, not part of the config file).
    bool record_beliefs = false;
    bool record_message_log = false;
};

// Returns one human-readable message per violated invariant; empty when valid.
std::vector<std::string> validate(const SimConfig& cfg);

}  // namespace skinmon
