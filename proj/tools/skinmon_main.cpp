// Command-line front end: single runs, scheme comparisons and snapshot
// rendering. Exit codes: 0 ok, 1 config/validation error, 2 runtime failure,
// 3 scheme-ordering violation in compare.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skinmon/config.hpp"
#include "skinmon/engine.hpp"
#include "skinmon/report.hpp"
#include "skinmon/svg.hpp"

namespace fs = std::filesystem;
using namespace skinmon;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out;
    std::int64_t seed = -1;
    std::string scheme;
    int rounds = -1;
    int snapshot_interval = -1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_out = true) {
    cmd->add_option("--config", o.config_path, "Config file (defaults when omitted)");
    if (with_out) cmd->add_option("--out", o.out, "Output directory")->required();
    cmd->add_option("--seed", o.seed, "Override run.seed");
    cmd->add_option("--scheme", o.scheme,
                    "Override run.scheme (proposed|wound_only_static|all_active)");
    cmd->add_option("--rounds", o.rounds, "Override run.rounds");
    cmd->add_option("--snapshot-interval", o.snapshot_interval,
                    "Override run.snapshot_interval");
}

SimConfig resolve_config(const CommonOpts& o) {
    SimConfig cfg = o.config_path.empty() ? parse_config("")
                                          : load_config_file(o.config_path);
    if (o.seed >= 0) cfg.rng_seed = static_cast<std::uint64_t>(o.seed);
    if (!o.scheme.empty()) cfg.scheme = parse_scheme(o.scheme);
    if (o.rounds >= 0) cfg.rounds = o.rounds;
    if (o.snapshot_interval > 0) cfg.snapshot_interval = o.snapshot_interval;
    auto errs = validate(cfg);
    if (!errs.empty()) {
        std::string joined = "invalid config:";
        for (const auto& e : errs) joined += "\n  " + e;
        throw ConfigError(joined);
    }
    return cfg;
}

std::string snapshot_name(int round) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "snapshot_r%04d.svg", round);
    return buf;
}

int cmd_run(const CommonOpts& o) {
    SimConfig cfg = resolve_config(o);
    fs::create_directories(o.out);
    RunResult result = run_simulation(cfg);
    write_metrics_csv(result.series, (fs::path(o.out) / "metrics.csv").string());
    int last_round = -1;
    for (const auto& snap : result.snapshots) {
        if (snap.round == last_round) continue;  // milestone == cadence round
        last_round = snap.round;
        render_snapshot(snap, (fs::path(o.out) / snapshot_name(snap.round)).string());
    }
    double cum = result.series.empty() ? 0.0 : result.series.back().cum_energy_nj;
    int dead = result.series.empty() ? 0 : result.series.back().dead_nodes;
    std::cout << "scheme " << to_string(cfg.scheme) << ", seed " << cfg.rng_seed
              << ": " << result.series.size() << " rounds, "
              << format_double(cum) << " nJ consumed, " << dead
              << " dead nodes\n";
    std::cout << "wrote " << (fs::path(o.out) / "metrics.csv").string() << " and "
              << result.snapshots.size() << " snapshots\n";
    return 0;
}

int cmd_compare(const CommonOpts& o, const std::string& seeds_arg,
                const std::string& schemes_arg) {
    CompareManifest manifest;
    manifest.base = resolve_config(o);

    std::stringstream seed_in(seeds_arg);
    std::string item;
    while (std::getline(seed_in, item, ','))
        if (!item.empty()) manifest.seeds.push_back(std::stoull(item));
    if (manifest.seeds.empty()) manifest.seeds.push_back(manifest.base.rng_seed);

    if (schemes_arg.empty()) {
        manifest.schemes = {Scheme::Proposed, Scheme::WoundOnlyStatic,
                            Scheme::AllActive};
    } else {
        std::stringstream scheme_in(schemes_arg);
        while (std::getline(scheme_in, item, ','))
            if (!item.empty()) manifest.schemes.push_back(parse_scheme(item));
    }

    fs::create_directories(o.out);
    CompareResult result = compare_schemes(manifest);
    {
        std::ofstream csv(fs::path(o.out) / "compare.csv", std::ios::binary);
        csv << compare_csv(result);
    }
    {
        std::ofstream sum(fs::path(o.out) / "summary.csv", std::ios::binary);
        sum << compare_summary_text(result);
    }
    std::cout << compare_summary_text(result);
    return result.ordering_ok ? 0 : 3;
}

int cmd_render(const CommonOpts& o, const std::string& out_file, int round) {
    SimConfig cfg = resolve_config(o);
    Simulation sim(cfg);
    for (int t = 0; t <= round; ++t) sim.step();
    if (auto dir = fs::path(out_file).parent_path(); !dir.empty())
        fs::create_directories(dir);
    render_snapshot(sim.snapshot(), out_file);
    std::cout << "wrote " << out_file << " (round " << round << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Round-based simulator of an adaptive skin-monitoring "
                 "body-area network"};
    app.require_subcommand(1);

    CommonOpts run_opts, cmp_opts, render_opts;
    std::string seeds_arg, schemes_arg, render_out;
    int render_round = 0;

    auto* run = app.add_subcommand("run", "Single simulation run");
    add_common(run, run_opts);

    auto* cmp = app.add_subcommand("compare", "Run schemes side by side");
    add_common(cmp, cmp_opts);
    cmp->add_option("--seeds", seeds_arg, "Comma-separated seed list");
    cmp->add_option("--schemes", schemes_arg,
                    "Comma-separated scheme list (default: all three)");

    auto* render = app.add_subcommand("render", "Render one snapshot");
    add_common(render, render_opts, /*with_out=*/false);
    render->add_option("--out", render_out, "Output SVG file")->required();
    render->add_option("--round", render_round, "Round to render")
        ->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_opts);
        if (cmp->parsed()) return cmd_compare(cmp_opts, seeds_arg, schemes_arg);
        if (render->parsed()) return cmd_render(render_opts, render_out, render_round);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
