// First-order radio energy model: E_tx = e_trx*k + eps_amp*k*d^2, E_rx = e_rec*k.
#pragma once

#include "skinmon/types.hpp"

namespace skinmon {

struct RadioParams {
    double e_trx = 16.7;    // nJ/bit
    double e_rec = 36.1;    // nJ/bit
    double eps_amp = 1.97;  // nJ/bit/m^2
};

inline double tx_energy(const RadioParams& p, int bits, double distance_m) {
    return p.e_trx * bits + p.eps_amp * bits * distance_m * distance_m;
}

inline double rx_energy(const RadioParams& p, int bits) {
    return p.e_rec * bits;
}

struct DebitResult {
    EnergyBudget budget;
    bool died = false;  // true only on the transition remaining > 0 -> 0
};

// A node whose budget cannot cover a cost still completes the action and
// dies; the budget clamps at zero. Debiting a dead node is a no-op.
inline DebitResult debit(EnergyBudget budget, double cost) {
    DebitResult r{budget, false};
    if (budget.remaining <= 0.0) return r;
    r.budget.remaining = budget.remaining - cost;
    if (r.budget.remaining <= 0.0) {
        r.budget.remaining = 0.0;
        r.died = true;
    }
    return r;
}

}  // namespace skinmon
