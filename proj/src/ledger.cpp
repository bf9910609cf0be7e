#include "skinmon/ledger.hpp"

#include <cmath>
#include <numbers>

namespace skinmon {

std::optional<QuantizedAngle> quantize_angle(const Location& root_loc,
                                             const Location& boundary_loc,
                                             int max_dir, double dof) {
    double dx = boundary_loc.x - root_loc.x;
    double dy = boundary_loc.y - root_loc.y;
    if (dx == 0.0 && dy == 0.0) return std::nullopt;
    double angle = std::atan2(dy, dx);
    if (angle < 0.0) angle += 2.0 * std::numbers::pi;
    double full = std::numbers::pi * dof;
    if (angle >= full) angle = 0.0;
    int bin = static_cast<int>(std::lround(angle * max_dir / full));
    if (bin >= max_dir) bin = 0;
    return QuantizedAngle{bin, std::hypot(dx, dy)};
}

std::optional<ChangeReport> BoundaryLedger::ingest(const Location& boundary_loc,
                                                   int round, double threshold,
                                                   ThresholdMode mode, double dof) {
    auto qa = quantize_angle(root_loc_, boundary_loc, max_dir(), dof);
    if (!qa) return std::nullopt;

    Bin& bin = bins_[static_cast<std::size_t>(qa->bin)];
    if (bin.filled && bin.last_round == round) {
        // Later samples in the same round only widen the bin outward.
        if (qa->dist > bin.dist) {
            bin.loc = boundary_loc;
            bin.dist = qa->dist;
        }
        return std::nullopt;
    }

    std::optional<ChangeReport> report;
    if (bin.filled) {
        bool grew, shrank;
        if (mode == ThresholdMode::Band) {
            grew = qa->dist > (1.0 + threshold) * bin.dist;
            shrank = qa->dist < (1.0 - threshold) * bin.dist;
        } else {
            grew = qa->dist > threshold * bin.dist;
            shrank = qa->dist < threshold * bin.dist;
        }
        if (grew)
            report = ChangeReport{root_loc_, boundary_loc, ChangeSign::Growth, round};
        else if (shrank)
            report = ChangeReport{root_loc_, boundary_loc, ChangeSign::Shrink, round};
    }

    bin.filled = true;
    bin.last_round = round;
    bin.loc = boundary_loc;
    bin.dist = qa->dist;
    return report;
}

std::vector<RelaySample> BoundaryLedger::uniform_samples(int sample_count) const {
    std::vector<RelaySample> out;
    std::vector<int> filled;
    for (int i = 0; i < max_dir(); ++i)
        if (bins_[static_cast<std::size_t>(i)].filled) filled.push_back(i);
    if (filled.empty() || sample_count < 1) return out;
    int stride = (static_cast<int>(filled.size()) + sample_count - 1) / sample_count;
    for (std::size_t i = 0; i < filled.size(); i += static_cast<std::size_t>(stride)) {
        const Bin& b = bins_[static_cast<std::size_t>(filled[i])];
        out.push_back(RelaySample{static_cast<std::uint8_t>(filled[i]), b.loc, b.dist});
    }
    return out;
}

int BoundaryLedger::filled_count() const {
    int n = 0;
    for (const auto& b : bins_)
        if (b.filled) ++n;
    return n;
}

}  // namespace skinmon
