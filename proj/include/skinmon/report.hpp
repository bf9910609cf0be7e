// Per-round metrics as CSV, scheme comparison runs, and their summaries.
// Floating-point fields use the shortest fixed-decimal form that re-parses
// to the identical value, so written files round-trip exactly.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skinmon/engine.hpp"
#include "skinmon/types.hpp"

namespace skinmon {

std::string format_double(double v);

// Header: round,energy_nj,cum_energy_nj,dead_nodes,active_nodes,status_msgs,
// location_msgs,change_msgs,relay_msgs,root_ids
std::string metrics_csv(const MetricsSeries& series);
void write_metrics_csv(const MetricsSeries& series, const std::string& path);

// Parses the CSV columns back into a (partially populated) series.
MetricsSeries parse_metrics_csv(const std::string& text);

struct CompareManifest {
    SimConfig base;                // scheme and seed fields are overridden
    std::vector<Scheme> schemes;
    std::vector<std::uint64_t> seeds;
};

struct CompareResult {
    struct Row {
        Scheme scheme;
        std::uint64_t seed;
        int round;
        double energy_nj;
        double cum_energy_nj;
        int dead_nodes;
    };
    struct Summary {
        Scheme scheme;
        double mean_cum_energy_nj = 0.0;
        double mean_dead_nodes = 0.0;
    };
    std::vector<Row> rows;
    std::vector<Summary> summaries;  // in manifest scheme order
    // Mean cumulative energy and dead nodes both non-decreasing along
    // proposed -> wound_only_static -> all_active (over the schemes present).
    bool ordering_ok = true;
};

// Runs every (scheme, seed) pair on the identical topology (same seed, same
// placement) and aggregates end-of-run means.
CompareResult compare_schemes(const CompareManifest& manifest);

// Long format: scheme,seed,round,energy_nj,cum_energy_nj,dead_nodes
std::string compare_csv(const CompareResult& result);
std::string compare_summary_text(const CompareResult& result);

}  // namespace skinmon
