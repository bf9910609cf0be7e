#include "skinmon/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace skinmon {

std::string format_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                 std::chars_format::fixed);
    if (ec != std::errc{}) return "0";
    return std::string(buf, p);
}

namespace {

double parse_double(const std::string& s) {
    double v;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{}) throw std::runtime_error("csv: bad number '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

constexpr const char* kMetricsHeader =
    "round,energy_nj,cum_energy_nj,dead_nodes,active_nodes,status_msgs,"
    "location_msgs,change_msgs,relay_msgs,root_ids";

}  // namespace

std::string metrics_csv(const MetricsSeries& series) {
    std::ostringstream out;
    out << kMetricsHeader << "\n";
    for (const auto& m : series) {
        out << m.round << ',' << format_double(m.energy_nj) << ','
            << format_double(m.cum_energy_nj) << ',' << m.dead_nodes << ','
            << m.active_nodes << ',' << m.status_msgs << ',' << m.location_msgs
            << ',' << m.change_msgs << ',' << m.relay_msgs << ',';
        for (std::size_t i = 0; i < m.root_ids.size(); ++i) {
            if (i) out << ';';
            out << m.root_ids[i];
        }
        out << "\n";
    }
    return out.str();
}

void write_metrics_csv(const MetricsSeries& series, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write metrics csv: " + path);
    out << metrics_csv(series);
    if (!out) throw std::runtime_error("write failed: " + path);
}

MetricsSeries parse_metrics_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kMetricsHeader)
        throw std::runtime_error("csv: unexpected header");
    MetricsSeries series;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split(line, ',');
        if (f.size() != 10) throw std::runtime_error("csv: bad column count");
        RoundMetrics m;
        m.round = static_cast<int>(parse_double(f[0]));
        m.energy_nj = parse_double(f[1]);
        m.cum_energy_nj = parse_double(f[2]);
        m.dead_nodes = static_cast<int>(parse_double(f[3]));
        m.active_nodes = static_cast<int>(parse_double(f[4]));
        m.status_msgs = static_cast<long>(parse_double(f[5]));
        m.location_msgs = static_cast<long>(parse_double(f[6]));
        m.change_msgs = static_cast<long>(parse_double(f[7]));
        m.relay_msgs = static_cast<long>(parse_double(f[8]));
        if (!f[9].empty())
            for (const auto& id : split(f[9], ';'))
                m.root_ids.push_back(static_cast<NodeId>(parse_double(id)));
        series.push_back(std::move(m));
    }
    return series;
}

CompareResult compare_schemes(const CompareManifest& manifest) {
    if (manifest.seeds.empty())
        throw std::invalid_argument("compare: at least one seed required");
    if (manifest.schemes.empty())
        throw std::invalid_argument("compare: at least one scheme required");

    CompareResult result;
    std::map<Scheme, std::pair<double, double>> totals;  // cum energy, dead
    for (Scheme scheme : manifest.schemes) {
        for (std::uint64_t seed : manifest.seeds) {
            SimConfig cfg = manifest.base;
            cfg.scheme = scheme;
            cfg.rng_seed = seed;
            RunResult run = run_simulation(cfg);
            for (const auto& m : run.series)
                result.rows.push_back(CompareResult::Row{
                    scheme, seed, m.round, m.energy_nj, m.cum_energy_nj,
                    m.dead_nodes});
            if (!run.series.empty()) {
                totals[scheme].first += run.series.back().cum_energy_nj;
                totals[scheme].second += run.series.back().dead_nodes;
            }
        }
        CompareResult::Summary s;
        s.scheme = scheme;
        s.mean_cum_energy_nj =
            totals[scheme].first / static_cast<double>(manifest.seeds.size());
        s.mean_dead_nodes =
            totals[scheme].second / static_cast<double>(manifest.seeds.size());
        result.summaries.push_back(s);
    }

    // Ordering over whichever of the three schemes were run.
    auto mean_of = [&result](Scheme s) -> const CompareResult::Summary* {
        for (const auto& sum : result.summaries)
            if (sum.scheme == s) return &sum;
        return nullptr;
    };
    const auto* p = mean_of(Scheme::Proposed);
    const auto* w = mean_of(Scheme::WoundOnlyStatic);
    const auto* a = mean_of(Scheme::AllActive);
    auto leq = [](const CompareResult::Summary* lo,
                  const CompareResult::Summary* hi) {
        return !lo || !hi ||
               (lo->mean_cum_energy_nj <= hi->mean_cum_energy_nj &&
                lo->mean_dead_nodes <= hi->mean_dead_nodes);
    };
    result.ordering_ok = leq(p, w) && leq(w, a) && leq(p, a);
    return result;
}

std::string compare_csv(const CompareResult& result) {
    std::ostringstream out;
    out << "scheme,seed,round,energy_nj,cum_energy_nj,dead_nodes\n";
    for (const auto& r : result.rows)
        out << to_string(r.scheme) << ',' << r.seed << ',' << r.round << ','
            << format_double(r.energy_nj) << ',' << format_double(r.cum_energy_nj)
            << ',' << r.dead_nodes << "\n";
    return out.str();
}

std::string compare_summary_text(const CompareResult& result) {
    std::ostringstream out;
    out << "scheme,mean_cum_energy_nj,mean_dead_nodes\n";
    for (const auto& s : result.summaries)
        out << to_string(s.scheme) << ',' << format_double(s.mean_cum_energy_nj)
            << ',' << format_double(s.mean_dead_nodes) << "\n";
    out << "ordering " << (result.ordering_ok ? "ok" : "violated") << "\n";
    return out.str();
}

}  // namespace skinmon
