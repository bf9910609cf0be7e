#include "skinmon/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace skinmon {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    double out;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size())
        throw ConfigError(key + ": expected a number, got '" + v + "'");
    return out;
}

long long to_int(const std::string& key, const std::string& v) {
    long long out;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size())
        throw ConfigError(key + ": expected an integer, got '" + v + "'");
    return out;
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError(key + ": expected true/false, got '" + v + "'");
}

WoundScenario parse_scenario(const std::string& key, const std::string& v) {
    if (v == "gunshot") return WoundScenario::Gunshot;
    if (v == "scratch") return WoundScenario::Scratch;
    if (v == "oval") return WoundScenario::Oval;
    throw ConfigError(key + ": unknown scenario '" + v +
                      "' (gunshot|scratch|oval)");
}

ThresholdMode parse_threshold_mode(const std::string& key, const std::string& v) {
    if (v == "band") return ThresholdMode::Band;
    if (v == "literal") return ThresholdMode::Literal;
    throw ConfigError(key + ": unknown mode '" + v + "' (band|literal)");
}

}  // namespace

Scheme parse_scheme(const std::string& name) {
    if (name == "proposed") return Scheme::Proposed;
    if (name == "wound_only_static") return Scheme::WoundOnlyStatic;
    if (name == "all_active") return Scheme::AllActive;
    throw ConfigError("unknown scheme '" + name +
                      "' (proposed|wound_only_static|all_active)");
}

SimConfig parse_config(const std::string& text) {
    SimConfig cfg;

    using Setter = std::function<void(const std::string&, const std::string&)>;
    std::map<std::string, Setter> keys;
    auto dbl = [&](const char* name, double& field) {
        keys[name] = [&field](const std::string& k, const std::string& v) {
            field = to_double(k, v);
        };
    };
    auto integer = [&](const char* name, int& field) {
        keys[name] = [&field](const std::string& k, const std::string& v) {
            field = static_cast<int>(to_int(k, v));
        };
    };
    auto boolean = [&](const char* name, bool& field) {
        keys[name] = [&field](const std::string& k, const std::string& v) {
            field = to_bool(k, v);
        };
    };

    dbl("patch.width", cfg.patch_width);
    dbl("patch.height", cfg.patch_height);
    dbl("patch.grid_spacing", cfg.grid_spacing);
    dbl("patch.jitter", cfg.placement_jitter);
    dbl("patch.comm_range", cfg.comm_range);

    dbl("radio.e_trx", cfg.e_trx);
    dbl("radio.e_rec", cfg.e_rec);
    dbl("radio.eps_amp", cfg.eps_amp);
    dbl("radio.initial_energy", cfg.initial_energy);

    integer("protocol.recharge", cfg.recharge);
    integer("protocol.alive_cap", cfg.alive_cap);
    integer("protocol.max_dir", cfg.max_dir);
    dbl("protocol.dof", cfg.dof);
    dbl("protocol.threshold", cfg.threshold);
    keys["protocol.threshold_mode"] = [&cfg](const std::string& k,
                                             const std::string& v) {
        cfg.threshold_mode = parse_threshold_mode(k, v);
    };
    integer("protocol.t_interval", cfg.t_interval);
    integer("protocol.sample_count", cfg.sample_count);
    boolean("protocol.hop_per_round", cfg.hop_per_round);

    keys["wound.scenario"] = [&cfg](const std::string& k, const std::string& v) {
        cfg.wound.scenario = parse_scenario(k, v);
    };
    dbl("wound.center_x", cfg.wound.center_x);
    dbl("wound.center_y", cfg.wound.center_y);
    dbl("wound.radius", cfg.wound.radius);
    dbl("wound.radius_b", cfg.wound.radius_b);
    integer("wound.growth_rounds", cfg.wound.growth_rounds);
    integer("wound.heal_rounds", cfg.wound.heal_rounds);

    keys["run.scheme"] = [&cfg](const std::string&, const std::string& v) {
        cfg.scheme = parse_scheme(v);
    };
    integer("run.rounds", cfg.rounds);
    keys["run.seed"] = [&cfg](const std::string& k, const std::string& v) {
        cfg.rng_seed = static_cast<std::uint64_t>(to_int(k, v));
    };
    integer("run.snapshot_interval", cfg.snapshot_interval);

    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) +
                                  ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "patch" && section != "radio" && section != "protocol" &&
                section != "wound" && section != "run")
                throw ConfigError("unknown section [" + section + "]");
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) +
                              ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (section.empty())
            throw ConfigError("key '" + key + "' appears before any section");
        std::string full = section + "." + key;
        auto it = keys.find(full);
        if (it == keys.end()) throw ConfigError("unknown key '" + full + "'");
        it->second(full, value);
    }

    auto errs = validate(cfg);
    if (!errs.empty()) {
        std::string joined = "invalid config:";
        for (const auto& e : errs) joined += "\n  " + e;
        throw ConfigError(joined);
    }
    return cfg;
}

SimConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string config_text(const SimConfig& cfg) {
    std::ostringstream out;
    out.precision(17);
    out << "[patch]\n"
        << "width = " << cfg.patch_width << "\n"
        << "height = " << cfg.patch_height << "\n"
        << "grid_spacing = " << cfg.grid_spacing << "\n"
        << "jitter = " << cfg.placement_jitter << "\n"
        << "comm_range = " << cfg.comm_range << "\n\n"
        << "[radio]\n"
        << "e_trx = " << cfg.e_trx << "\n"
        << "e_rec = " << cfg.e_rec << "\n"
        << "eps_amp = " << cfg.eps_amp << "\n"
        << "initial_energy = " << cfg.initial_energy << "\n\n"
        << "[protocol]\n"
        << "recharge = " << cfg.recharge << "\n"
        << "alive_cap = " << cfg.alive_cap << "\n"
        << "max_dir = " << cfg.max_dir << "\n"
        << "dof = " << cfg.dof << "\n"
        << "threshold = " << cfg.threshold << "\n"
        << "threshold_mode = " << to_string(cfg.threshold_mode) << "\n"
        << "t_interval = " << cfg.t_interval << "\n"
        << "sample_count = " << cfg.sample_count << "\n"
        << "hop_per_round = " << (cfg.hop_per_round ? "true" : "false") << "\n\n"
        << "[wound]\n"
        << "scenario = " << to_string(cfg.wound.scenario) << "\n"
        << "center_x = " << cfg.wound.center_x << "\n"
        << "center_y = " << cfg.wound.center_y << "\n"
        << "radius = " << cfg.wound.radius << "\n"
        << "radius_b = " << cfg.wound.radius_b << "\n"
        << "growth_rounds = " << cfg.wound.growth_rounds << "\n"
        << "heal_rounds = " << cfg.wound.heal_rounds << "\n\n"
        << "[run]\n"
        << "scheme = " << to_string(cfg.scheme) << "\n"
        << "rounds = " << cfg.rounds << "\n"
        << "seed = " << cfg.rng_seed << "\n"
        << "snapshot_interval = " << cfg.snapshot_interval << "\n";
    return out.str();
}

}  // namespace skinmon
