#pragma once

#include <cstdint>
#include <vector>

#include "cbhrp/rng.hpp"
#include "cbhrp/types.hpp"

namespace cbhrp {

// Whole simulation state. Node positions are mirrored into flat coordinate
// arrays once at deployment so the geometry kernels can run over them.
struct World {
    NetworkConfig config;
    std::vector<Node> nodes;
    std::vector<double> xs, ys;
    Xoshiro256ss rng;

    World(NetworkConfig cfg, std::uint64_t seed)
        : config(cfg), rng(seed) {}

    int alive_count() const {
        int c = 0;
        for (const Node& nd : nodes) c += nd.alive() ? 1 : 0;
        return c;
    }

    // Ascending-id energy snapshot; ledger sums are differences of these.
    std::vector<double> energy_snapshot() const {
        std::vector<double> e(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i) e[i] = nodes[i].energy;
        return e;
    }
};

// Sum over all nodes, ascending id, of (before[i] - after[i]). Every
// reported energy aggregate is exactly this expression, which is what makes
// the energy ledger reproducible to the last bit.
double drained_energy(const std::vector<double>& before,
                      const std::vector<double>& after);

// Validates the config, then places n nodes uniformly in the field square
// (per node: x then y, each one uniform draw scaled by the side length) and
// fills every battery. The same generator keeps serving the protocol
// afterwards, so a run is one deterministic stream.
World deploy(const NetworkConfig& cfg, std::uint64_t seed);

}  // namespace cbhrp
