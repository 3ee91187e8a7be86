#include "cbhrp/world.hpp"

namespace cbhrp {

double drained_energy(const std::vector<double>& before,
                      const std::vector<double>& after) {
    double acc = 0.0;
    for (std::size_t i = 0; i < before.size(); ++i)
        acc += before[i] - after[i];
    return acc;
}

World deploy(const NetworkConfig& cfg, std::uint64_t seed) {
    validate(cfg);
    World w(cfg, seed);
    w.nodes.resize(static_cast<std::size_t>(cfg.n));
    w.xs.resize(w.nodes.size());
    w.ys.resize(w.nodes.size());
    for (int i = 0; i < cfg.n; ++i) {
        const double x = w.rng.uniform() * cfg.field;
        const double y = w.rng.uniform() * cfg.field;
        Node& nd = w.nodes[static_cast<std::size_t>(i)];
        nd.id = i;
        nd.pos = {x, y};
        nd.energy = cfg.e_init;
        nd.state = NodeState::Candidate;
        w.xs[static_cast<std::size_t>(i)] = x;
        w.ys[static_cast<std::size_t>(i)] = y;
    }
    return w;
}

}  // namespace cbhrp
