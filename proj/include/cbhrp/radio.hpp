#pragma once

#include <stdexcept>

#include "cbhrp/types.hpp"

namespace cbhrp {

// First-order radio model, free-space (d^2) amplifier only.

inline double tx_energy(const RadioParams& p, int bits, double distance) {
    if (bits < 0 || distance < 0.0)
        throw std::invalid_argument("tx_energy: negative bits or distance");
    const double b = static_cast<double>(bits);
    return b * p.e_elec + b * p.eps_amp * distance * distance;
}

inline double rx_energy(const RadioParams& p, int bits) {
    if (bits < 0) throw std::invalid_argument("rx_energy: negative bits");
    return static_cast<double>(bits) * p.e_elec;
}

inline double aggregate_energy(const RadioParams& p, int bits, int n_signals) {
    if (bits < 0 || n_signals < 0)
        throw std::invalid_argument("aggregate_energy: negative bits or signal count");
    return static_cast<double>(bits) * static_cast<double>(n_signals) * p.e_da;
}

struct ChargeResult {
    double remaining = 0.0;
    bool died = false;
};

// Drains `amount` joules; clamps at zero and marks the node dead when the
// budget is exhausted (energy exactly zero counts as exhausted).
ChargeResult charge(Node& node, double amount);

}  // namespace cbhrp
