// Root-side boundary aggregation: boundary locations are quantized into
// angular bins around the root, each bin remembers the previous round's
// distance, and growth/shrink beyond a threshold produces a change report.
#pragma once

#include <optional>
#include <vector>

#include "skinmon/types.hpp"

namespace skinmon {

struct QuantizedAngle {
    int bin = 0;
    double dist = 0.0;  // cm
};

// Maps the direction root -> boundary onto one of max_dir bins. The angle is
// taken in [0, 2*pi) for dof = 2; a full-circle angle wraps to bin 0, as does
// a rounded bin index of max_dir. Returns nothing when the two points
// coincide.
std::optional<QuantizedAngle> quantize_angle(const Location& root_loc,
                                             const Location& boundary_loc,
                                             int max_dir, double dof);

struct ChangeReport {
    Location root_loc;
    Location boundary_loc;
    ChangeSign sign = ChangeSign::Growth;
    int round = 0;
};

class BoundaryLedger {
public:
    // mature_from_round: first round from which change reports may be
    // emitted. A freshly elected root keeps collecting silently until the
    // tree around it has settled; before that, per-bin samples fluctuate
    // with routing rather than with the wound.
    BoundaryLedger(const Location& root_loc, int max_dir,
                   int mature_from_round = 0)
        : root_loc_(root_loc),
          mature_from_(mature_from_round),
          bins_(static_cast<std::size_t>(max_dir)) {}

    // Folds one boundary report into the ledger. Within a round a bin keeps
    // its farthest sample; the first sample of a round is compared against
    // the bin's stored distance from earlier rounds and yields a change
    // report when it falls outside the threshold band (or, in literal mode,
    // when it crosses threshold * d_old).
    std::optional<ChangeReport> ingest(const Location& boundary_loc, int round,
                                       double threshold, ThresholdMode mode,
                                       double dof);

    // Every ceil(filled/sample_count)-th filled bin in ascending bin order.
    std::vector<RelaySample> uniform_samples(int sample_count) const;

    int filled_count() const;
    const Location& root_loc() const { return root_loc_; }
    int max_dir() const { return static_cast<int>(bins_.size()); }

    struct Bin {
        bool filled = false;
        int last_round = -1;
        Location loc;
        double dist = 0.0;
    };
    const std::vector<Bin>& bins() const { return bins_; }

private:
    Location root_loc_;
    std::vector<Bin> bins_;
};

}  // namespace skinmon
