#include "cbhrp/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "cbhrp/kernels.hpp"
#include "cbhrp/radio.hpp"

namespace cbhrp {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Advertisement reach: radius of a disc holding 1/k of the field area.
double adv_radius(double field, int k) {
    return field / std::sqrt(kPi * static_cast<double>(k));
}

bool is_eligible(const Node& nd) {
    return nd.state == NodeState::Candidate && !nd.served_this_round;
}

std::vector<NodeId> eligible_ids(const World& w) {
    std::vector<NodeId> out;
    for (const Node& nd : w.nodes)
        if (is_eligible(nd)) out.push_back(nd.id);
    return out;
}

std::vector<NodeId> alive_node_ids(const World& w) {
    std::vector<NodeId> out;
    out.reserve(w.nodes.size());
    for (const Node& nd : w.nodes)
        if (nd.alive()) out.push_back(nd.id);
    return out;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

std::vector<NodeId> elect_cluster_heads(World& w, int k) {
    std::vector<NodeId> pool = eligible_ids(w);
    if (k < 1 || static_cast<std::size_t>(k) > pool.size())
        throw std::invalid_argument(
            "elect_cluster_heads: k outside the eligible pool");
    // Partial Fisher-Yates over the ascending-id pool: k unbiased distinct
    // picks, a fixed number of generator draws.
    for (int i = 0; i < k; ++i) {
        const std::size_t j =
            static_cast<std::size_t>(i) +
            static_cast<std::size_t>(w.rng.bounded(pool.size() - static_cast<std::size_t>(i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    // Heads turn Active immediately; this also removes them from the
    // associate-selection pools below.
    for (NodeId h : pool) {
        Node& nd = w.nodes[static_cast<std::size_t>(h)];
        nd.state = transition(nd.state, StateEvent::ChosenAsHead);
    }
    return pool;
}

std::vector<int> form_clusters(const World& w,
                               const std::vector<NodeId>& heads) {
    std::vector<double> ax, ay, sx, sy;
    std::vector<NodeId> aid;
    for (const Node& nd : w.nodes) {
        if (!nd.alive()) continue;
        aid.push_back(nd.id);
        ax.push_back(w.xs[static_cast<std::size_t>(nd.id)]);
        ay.push_back(w.ys[static_cast<std::size_t>(nd.id)]);
    }
    for (NodeId h : heads) {
        sx.push_back(w.xs[static_cast<std::size_t>(h)]);
        sy.push_back(w.ys[static_cast<std::size_t>(h)]);
    }
    std::vector<std::int32_t> idx(aid.size());
    kernels::active().nearest_site(ax.data(), ay.data(), aid.size(), sx.data(),
                                   sy.data(), sx.size(), idx.data());
    std::vector<int> cluster(w.nodes.size(), -1);
    for (std::size_t t = 0; t < aid.size(); ++t)
        cluster[static_cast<std::size_t>(aid[t])] = idx[t];
    return cluster;
}

HeadSet select_head_set(const World& w, const std::vector<NodeId>& members,
                        NodeId head, int m, int cluster_index) {
    HeadSet hs;
    hs.cluster = cluster_index;
    hs.active_index = 0;
    hs.members.push_back(head);
    const double hx = w.xs[static_cast<std::size_t>(head)];
    const double hy = w.ys[static_cast<std::size_t>(head)];
    // Nearest eligible members join; distance ties go to the lower id.
    std::vector<std::pair<double, NodeId>> pool;
    for (NodeId id : members) {
        if (id == head) continue;
        const Node& nd = w.nodes[static_cast<std::size_t>(id)];
        if (!nd.alive() || !is_eligible(nd)) continue;
        const double dx = w.xs[static_cast<std::size_t>(id)] - hx;
        const double dy = w.ys[static_cast<std::size_t>(id)] - hy;
        pool.emplace_back(dx * dx + dy * dy, id);
    }
    std::sort(pool.begin(), pool.end());
    const std::size_t take =
        std::min(pool.size(), static_cast<std::size_t>(m > 0 ? m - 1 : 0));
    for (std::size_t t = 0; t < take; ++t) hs.members.push_back(pool[t].second);
    return hs;
}

int iterations_per_round(int n_alive, int k, int m) {
    if (k < 1 || m < 1) throw std::invalid_argument("iterations_per_round: k and m must be >= 1");
    if (n_alive <= 0) return 0;
    return ceil_div(n_alive, k * m);
}

int epochs_per_iteration(const NetworkConfig& cfg, int cluster_size,
                         int m_effective, double d_bs) {
    const RadioParams& p = cfg.radio;
    const double r_adv = adv_radius(cfg.field, cfg.k);
    const double e_election = tx_energy(p, cfg.l_adv, r_adv) +
                              static_cast<double>(cluster_size - 1) *
                                  rx_energy(p, cfg.l_ack) +
                              tx_energy(p, cfg.l_sched, r_adv);
    const double e_epoch =
        rx_energy(p, cfg.l_data) *
            static_cast<double>(cluster_size - m_effective) +
        aggregate_energy(p, cfg.l_data, cluster_size - m_effective + 1) +
        tx_energy(p, cfg.l_data, d_bs);
    const double budget = cfg.beta * cfg.e_init;
    const double raw = std::floor((budget - e_election) / e_epoch);
    if (!(raw >= 1.0)) return 1;
    if (raw >= static_cast<double>(std::numeric_limits<int>::max()))
        return std::numeric_limits<int>::max();
    return static_cast<int>(raw);
}

EpochResult run_epoch(HeadSet& hs, const std::vector<NodeId>& members,
                      World& w) {
    const NetworkConfig& c = w.config;
    const RadioParams& p = c.radio;
    const auto& K = kernels::active();
    const std::vector<double> pre = w.energy_snapshot();
    int frames = 0;
    std::vector<double> sx, sy, d2, cost;
    std::vector<NodeId> senders;
    for (std::size_t slot = 0; slot < hs.members.size(); ++slot) {
        Node& act = w.nodes[static_cast<std::size_t>(hs.members[slot])];
        if (!act.alive()) continue;
        hs.active_index = static_cast<int>(slot);
        act.state = transition(act.state, StateEvent::TurnToTransmit);
        // Frame senders: the cluster's regular nodes right now (dead nodes
        // and the head-set itself excluded by state).
        senders.clear();
        for (NodeId id : members) {
            const NodeState s = w.nodes[static_cast<std::size_t>(id)].state;
            if (s == NodeState::Candidate || s == NodeState::NonCandidate)
                senders.push_back(id);
        }
        if (!senders.empty()) {
            const std::size_t ns = senders.size();
            sx.resize(ns);
            sy.resize(ns);
            d2.resize(ns);
            cost.resize(ns);
            for (std::size_t t = 0; t < ns; ++t) {
                sx[t] = w.xs[static_cast<std::size_t>(senders[t])];
                sy[t] = w.ys[static_cast<std::size_t>(senders[t])];
            }
            K.distance_sq(sx.data(), sy.data(), ns,
                          w.xs[static_cast<std::size_t>(act.id)],
                          w.ys[static_cast<std::size_t>(act.id)], d2.data());
            K.affine(d2.data(), ns,
                     static_cast<double>(c.l_data) * p.eps_amp,
                     static_cast<double>(c.l_data) * p.e_elec, cost.data());
            for (std::size_t t = 0; t < ns; ++t)
                charge(w.nodes[static_cast<std::size_t>(senders[t])], cost[t]);
        }
        // The active member's whole turn is one drain: receive every frame,
        // aggregate them with its own, forward one frame to the base station.
        const double dxb = w.xs[static_cast<std::size_t>(act.id)] - c.bs.x;
        const double dyb = w.ys[static_cast<std::size_t>(act.id)] - c.bs.y;
        const double dbs2 = dxb * dxb + dyb * dyb;
        const double lump =
            static_cast<double>(senders.size()) * rx_energy(p, c.l_data) +
            aggregate_energy(p, c.l_data, static_cast<int>(senders.size()) + 1) +
            (static_cast<double>(c.l_data) * p.e_elec +
             static_cast<double>(c.l_data) * p.eps_amp * dbs2);
        charge(act, lump);
        if (act.alive()) {
            ++frames;
            act.state = transition(act.state, StateEvent::FrameSent);
        }
    }
    const std::vector<double> post = w.energy_snapshot();
    return {drained_energy(pre, post), frames};
}

std::optional<IterationReport> run_iteration(World& w,
                                             IterationObserver* obs) {
    const NetworkConfig& c = w.config;
    const RadioParams& p = c.radio;
    const auto& K = kernels::active();
    const std::vector<NodeId> alive0 = alive_node_ids(w);
    const std::vector<NodeId> elig = eligible_ids(w);
    if (elig.empty()) return std::nullopt;
    const int k_eff = std::min<int>(c.k, static_cast<int>(elig.size()));
    const std::vector<double> pre = w.energy_snapshot();

    // --- election -----------------------------------------------------
    const std::vector<NodeId> heads = elect_cluster_heads(w, k_eff);
    const double r_adv = adv_radius(c.field, k_eff);
    const std::vector<int> cluster_of = form_clusters(w, heads);
    std::vector<std::vector<NodeId>> members(
        static_cast<std::size_t>(k_eff));
    for (NodeId id : alive0)
        members[static_cast<std::size_t>(cluster_of[static_cast<std::size_t>(id)])]
            .push_back(id);
    for (NodeId id : alive0)
        w.nodes[static_cast<std::size_t>(id)].cluster =
            cluster_of[static_cast<std::size_t>(id)];
    std::vector<char> is_head(w.nodes.size(), 0);
    for (NodeId h : heads) is_head[static_cast<std::size_t>(h)] = 1;

    // Heads advertise; every node listens to all k advertisements; members
    // ack to their head; heads take the acks in.
    const double adv_tx = tx_energy(p, c.l_adv, r_adv);
    for (NodeId h : heads) charge(w.nodes[static_cast<std::size_t>(h)], adv_tx);
    const double adv_rx = static_cast<double>(k_eff) * rx_energy(p, c.l_adv);
    for (NodeId id : alive0) charge(w.nodes[static_cast<std::size_t>(id)], adv_rx);
    std::vector<double> gx, gy, d2, cost;
    std::vector<NodeId> batch;
    for (int ci = 0; ci < k_eff; ++ci) {
        batch.clear();
        for (NodeId id : members[static_cast<std::size_t>(ci)])
            if (!is_head[static_cast<std::size_t>(id)]) batch.push_back(id);
        if (batch.empty()) continue;
        const std::size_t nb = batch.size();
        gx.resize(nb);
        gy.resize(nb);
        d2.resize(nb);
        cost.resize(nb);
        for (std::size_t t = 0; t < nb; ++t) {
            gx[t] = w.xs[static_cast<std::size_t>(batch[t])];
            gy[t] = w.ys[static_cast<std::size_t>(batch[t])];
        }
        const NodeId h = heads[static_cast<std::size_t>(ci)];
        K.distance_sq(gx.data(), gy.data(), nb,
                      w.xs[static_cast<std::size_t>(h)],
                      w.ys[static_cast<std::size_t>(h)], d2.data());
        K.affine(d2.data(), nb, static_cast<double>(c.l_ack) * p.eps_amp,
                 static_cast<double>(c.l_ack) * p.e_elec, cost.data());
        for (std::size_t t = 0; t < nb; ++t)
            charge(w.nodes[static_cast<std::size_t>(batch[t])], cost[t]);
    }
    const double ack_rx = rx_energy(p, c.l_ack);
    for (int ci = 0; ci < k_eff; ++ci) {
        const int others = std::max<int>(
            0, static_cast<int>(members[static_cast<std::size_t>(ci)].size()) - 1);
        charge(w.nodes[static_cast<std::size_t>(heads[static_cast<std::size_t>(ci)])],
               static_cast<double>(others) * ack_rx);
    }

    // --- head-set selection, then top-up so the round schedule holds ----
    std::vector<HeadSet> sets;
    sets.reserve(static_cast<std::size_t>(k_eff));
    std::vector<char> selected(w.nodes.size(), 0);
    for (int ci = 0; ci < k_eff; ++ci) {
        HeadSet hs = select_head_set(w, members[static_cast<std::size_t>(ci)],
                                     heads[static_cast<std::size_t>(ci)], c.m, ci);
        for (std::size_t r = 0; r < hs.members.size(); ++r) {
            Node& nd = w.nodes[static_cast<std::size_t>(hs.members[r])];
            selected[static_cast<std::size_t>(hs.members[r])] = 1;
            if (!nd.alive()) continue;
            nd.headset_rank = static_cast<int>(r);
            if (r > 0) nd.state = transition(nd.state, StateEvent::SelectedAsAssociate);
        }
        sets.push_back(std::move(hs));
    }
    // Eligible nodes left over where their own cluster's set filled up get
    // folded into the nearest set with a vacancy (ties: lowest head id).
    for (NodeId id : elig) {
        if (selected[static_cast<std::size_t>(id)]) continue;
        const Node& nd = w.nodes[static_cast<std::size_t>(id)];
        if (!nd.alive() || !is_eligible(nd)) continue;
        int best_ci = -1;
        double best_d2 = std::numeric_limits<double>::infinity();
        for (int ci = 0; ci < k_eff; ++ci) {
            if (sets[static_cast<std::size_t>(ci)].members.size() >=
                static_cast<std::size_t>(c.m))
                continue;
            const NodeId h = heads[static_cast<std::size_t>(ci)];
            const double dx = w.xs[static_cast<std::size_t>(id)] -
                              w.xs[static_cast<std::size_t>(h)];
            const double dy = w.ys[static_cast<std::size_t>(id)] -
                              w.ys[static_cast<std::size_t>(h)];
            const double dd2 = dx * dx + dy * dy;
            if (dd2 < best_d2) {
                best_d2 = dd2;
                best_ci = ci;
            }
        }
        if (best_ci < 0) break;  // every set is full
        HeadSet& hs = sets[static_cast<std::size_t>(best_ci)];
        Node& join = w.nodes[static_cast<std::size_t>(id)];
        join.headset_rank = static_cast<int>(hs.members.size());
        join.state = transition(join.state, StateEvent::SelectedAsAssociate);
        join.cluster = best_ci;
        hs.members.push_back(id);
        selected[static_cast<std::size_t>(id)] = 1;
    }
    // Heads broadcast the slot schedule; their associates take it in.
    const double sched_tx = tx_energy(p, c.l_sched, r_adv);
    for (NodeId h : heads) charge(w.nodes[static_cast<std::size_t>(h)], sched_tx);
    const double sched_rx = rx_energy(p, c.l_sched);
    for (const HeadSet& hs : sets)
        for (std::size_t r = 1; r < hs.members.size(); ++r)
            charge(w.nodes[static_cast<std::size_t>(hs.members[r])], sched_rx);
    if (obs) obs->on_headsets(w, sets);
    const std::vector<double> mid = w.energy_snapshot();

    // --- data transfer ---------------------------------------------------
    const int cs_repr = ceil_div(static_cast<int>(alive0.size()), k_eff);
    const int m_repr = std::min<int>(
        c.m, std::max<int>(1, ceil_div(static_cast<int>(elig.size()), k_eff)));
    const double cx = c.field / 2.0;
    const double cy = c.field / 2.0;
    const double obx = c.bs.x - cx;
    const double oby = c.bs.y - cy;
    const double d_budget = std::sqrt(obx * obx + oby * oby) + c.field / 2.0;
    const int epochs = epochs_per_iteration(c, cs_repr, m_repr, d_budget);

    int frames = 0;
    for (int e = 0; e < epochs; ++e)
        for (int ci = 0; ci < k_eff; ++ci)
            frames += run_epoch(sets[static_cast<std::size_t>(ci)],
                                members[static_cast<std::size_t>(ci)], w)
                          .frames_to_bs;

    // --- iteration end -----------------------------------------------------
    for (const HeadSet& hs : sets)
        for (NodeId id : hs.members) {
            Node& nd = w.nodes[static_cast<std::size_t>(id)];
            nd.served_this_round = true;
            if (nd.alive())
                nd.state = transition(nd.state, StateEvent::IterationEnd);
            nd.headset_rank.reset();
        }

    const std::vector<double> post = w.energy_snapshot();
    IterationReport rep;
    rep.election_energy_j = drained_energy(pre, mid);
    rep.transfer_energy_j = drained_energy(mid, post);
    rep.frames_to_bs = frames;
    rep.epochs = epochs;
    rep.elapsed_time_s =
        3.0 * c.t_slot +
        static_cast<double>(epochs) * static_cast<double>(m_repr) *
            static_cast<double>(cs_repr) * c.t_slot;
    rep.alive_after = w.alive_count();
    return rep;
}

std::optional<RoundReport> run_round(World& w, IterationObserver* obs) {
    const int alive = w.alive_count();
    if (alive == 0) return std::nullopt;
    const std::vector<double> pre = w.energy_snapshot();
    for (Node& nd : w.nodes) {
        nd.served_this_round = false;
        if (nd.alive()) nd.state = transition(nd.state, StateEvent::RoundStart);
    }
    const int iters = iterations_per_round(alive, w.config.k, w.config.m);
    RoundReport rr;
    for (int t = 0; t < iters; ++t) {
        auto ir = run_iteration(w, obs);
        if (!ir) break;
        ir->index = t;
        rr.frames_to_bs += ir->frames_to_bs;
        rr.elapsed_time_s += ir->elapsed_time_s;
        rr.iterations.push_back(std::move(*ir));
    }
    const std::vector<double> post = w.energy_snapshot();
    rr.energy_j = drained_energy(pre, post);
    rr.alive_after = w.alive_count();
    return rr;
}

SimulationTrace simulate(const NetworkConfig& cfg, std::uint64_t seed,
                         const StopRule& stop, IterationObserver* obs) {
    World w = deploy(cfg, seed);
    SimulationTrace tr;
    for (int r = 0;; ++r) {
        if (stop.kind == StopKind::MaxRounds && r >= stop.rounds) break;
        auto rr = run_round(w, obs);
        if (!rr) break;
        rr->index = r;
        const int alive = rr->alive_after;
        tr.rounds.push_back(std::move(*rr));
        if (!tr.first_death_round && alive < cfg.n) tr.first_death_round = r;
        if (!tr.half_death_round && alive <= cfg.n / 2) tr.half_death_round = r;
        if (!tr.last_death_round && alive == 0) tr.last_death_round = r;
        if (stop.kind == StopKind::FirstDeath && tr.first_death_round) break;
        if (stop.kind == StopKind::HalfDead && tr.half_death_round) break;
        if (alive == 0) break;
    }
    return tr;
}

NetworkConfig leach_config(NetworkConfig cfg) {
    cfg.m = 1;
    return cfg;
}

}  // namespace cbhrp
