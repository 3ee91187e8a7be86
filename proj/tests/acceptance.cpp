// Acceptance gate: one self-contained check per shipped guarantee, one
// PASS/FAIL line each. Exit code is the number of failed checks.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cbhrp/protocol.hpp"
#include "cbhrp/rng.hpp"
#include "cbhrp/sweep.hpp"
#include "cbhrp/trace_io.hpp"
#include "cbhrp/world.hpp"

using namespace cbhrp;

namespace {

int run_criterion(int id, const char* label, double limit_secs,
                  const std::function<bool(std::string&)>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
        ok = fn(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (ok && limit_secs > 0.0 && secs >= limit_secs) {
        ok = false;
        char buf[64];
        std::snprintf(buf, sizeof buf, "over time limit %.0fs", limit_secs);
        note = note.empty() ? buf : note + "; " + buf;
    }
    std::printf("C%-2d %s  %s%s%s  (%.2fs)\n", id, ok ? "PASS" : "FAIL", label,
                note.empty() ? "" : " -- ", note.c_str(), secs);
    std::fflush(stdout);
    return ok ? 0 : 1;
}

// Mean of a fresh-deployment metric over seeds base_seed..base_seed+reps-1.
enum class Metric { RoundEnergy, IterationTime, IterationFrames };

double mean_metric(const NetworkConfig& cfg, Metric which, int reps,
                   std::uint64_t base_seed) {
    double s = 0.0;
    for (int i = 0; i < reps; ++i) {
        World w = deploy(cfg, base_seed + static_cast<std::uint64_t>(i));
        switch (which) {
            case Metric::RoundEnergy:
                s += run_round(w)->energy_j;
                break;
            case Metric::IterationTime:
                s += run_iteration(w)->elapsed_time_s;
                break;
            case Metric::IterationFrames:
                s += static_cast<double>(run_iteration(w)->frames_to_bs);
                break;
        }
    }
    return s / reps;
}

struct ServiceCount : IterationObserver {
    std::vector<int> count;
    int iterations = 0;
    explicit ServiceCount(int n) : count(static_cast<std::size_t>(n), 0) {}
    void on_headsets(const World&, const std::vector<HeadSet>& sets) override {
        ++iterations;
        for (const HeadSet& hs : sets)
            for (NodeId id : hs.members) ++count[static_cast<std::size_t>(id)];
    }
};

struct ArmStats {
    double energy_per_round = 0.0;
    double frames_per_iteration = 0.0;
    int fnd = 0;
};

ArmStats arm_stats(const NetworkConfig& cfg, std::uint64_t seed) {
    const SimulationTrace tr = simulate(cfg, seed, StopRule::first_death());
    double energy = 0.0;
    long long frames = 0, iters = 0;
    for (const RoundReport& rr : tr.rounds) {
        energy += rr.energy_j;
        frames += rr.frames_to_bs;
        iters += static_cast<long long>(rr.iterations.size());
    }
    ArmStats st;
    st.energy_per_round = energy / static_cast<double>(tr.rounds.size());
    st.frames_per_iteration =
        static_cast<double>(frames) / static_cast<double>(iters);
    st.fnd = tr.first_death_round.value();
    return st;
}

bool c1_state_machine(std::string& note) {
    const StateEvent events[7] = {
        StateEvent::RoundStart,        StateEvent::ChosenAsHead,
        StateEvent::SelectedAsAssociate, StateEvent::TurnToTransmit,
        StateEvent::FrameSent,         StateEvent::IterationEnd,
        StateEvent::EnergyExhausted,
    };
    const NodeState Ca = NodeState::Candidate, NC = NodeState::NonCandidate,
                    Ac = NodeState::Active, As = NodeState::Associate,
                    PA = NodeState::PassiveAssociate, De = NodeState::Dead;
    struct Row {
        NodeState from;
        NodeState to[7];
    };
    const Row table[6] = {
        {Ca, {Ca, Ac, As, Ca, Ca, Ca, De}},
        {NC, {Ca, NC, NC, NC, NC, NC, De}},
        {Ac, {Ac, Ac, Ac, Ac, PA, NC, De}},
        {As, {As, As, As, Ac, As, NC, De}},
        {PA, {PA, PA, PA, Ac, PA, NC, De}},
        {De, {De, De, De, De, De, De, De}},
    };
    int ok = 0, bad = 0;
    for (const Row& row : table)
        for (int e = 0; e < 7; ++e) {
            if (transition(row.from, events[e]) == row.to[e]) {
                ++ok;
            } else {
                ++bad;
                if (bad == 1) {
                    note = std::string("first mismatch: ") +
                           to_string(row.from) + " x " + to_string(events[e]);
                }
            }
        }
    if (bad == 0) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%d/42 transitions", ok);
        note = buf;
        return true;
    }
    return false;
}

bool c2_round_service(std::string& note) {
    Xoshiro256ss prng(12345); // draws the random configurations
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
        const int k = 1 + static_cast<int>(prng.bounded(10));
        const int m = 1 + static_cast<int>(prng.bounded(8));
        const int n =
            k * m + static_cast<int>(prng.bounded(
                        static_cast<std::uint64_t>(500 - k * m + 1)));
        NetworkConfig cfg;
        cfg.n = n;
        cfg.k = k;
        cfg.m = m;
        cfg.e_init = 1e9;  // deaths disabled
        cfg.beta = 1e-11;  // keeps the per-iteration budget at its usual level
        World w = deploy(cfg, 1000 + static_cast<std::uint64_t>(t));
        ServiceCount obs(n);
        const auto rr = run_round(w, &obs);
        const int want_iters = iterations_per_round(n, k, m);
        if (!rr || static_cast<int>(rr->iterations.size()) != want_iters ||
            obs.iterations != want_iters) {
            char buf[128];
            std::snprintf(buf, sizeof buf,
                          "trial %d (n=%d k=%d m=%d): expected %d iterations",
                          t, n, k, m, want_iters);
            note = buf;
            return false;
        }
        for (int i = 0; i < n; ++i) {
            if (obs.count[static_cast<std::size_t>(i)] != 1) {
                char buf[128];
                std::snprintf(buf, sizeof buf,
                              "trial %d (n=%d k=%d m=%d): node %d served %d times",
                              t, n, k, m, i, obs.count[static_cast<std::size_t>(i)]);
                note = buf;
                return false;
            }
        }
        if (rr->alive_after != n) {
            note = "unexpected death with deaths disabled";
            return false;
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "%d random configurations, every node served exactly once",
                  trials);
    note = buf;
    return true;
}

bool c3_energy_ledger(std::string& note) {
    const NetworkConfig cfg; // defaults
    const double provision = cfg.e_init * cfg.n;
    int total_rounds = 0;
    double last_total = 0.0;
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        World w = deploy(cfg, seed);
        const std::vector<double> initial = w.energy_snapshot();
        for (;;) {
            const std::vector<double> pre = w.energy_snapshot();
            const auto rr = run_round(w);
            if (!rr) break;
            const std::vector<double> post = w.energy_snapshot();
            if (rr->energy_j != drained_energy(pre, post)) {
                char buf[96];
                std::snprintf(buf, sizeof buf,
                              "seed %llu round %d: reported energy != summed deltas",
                              static_cast<unsigned long long>(seed), total_rounds);
                note = buf;
                return false;
            }
            const double cumulative = drained_energy(initial, post);
            if (cumulative > provision * (1.0 + 1e-12)) {
                note = "cumulative drain exceeds the initial provision";
                return false;
            }
            ++total_rounds;
            if (rr->alive_after == 0) {
                last_total = cumulative;
                break;
            }
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "%d rounds bit-exact; full drain %.17g of %.17g J",
                  total_rounds, last_total, provision);
    note = buf;
    return true;
}

bool c4_baseline_equivalence(std::string& note) {
    NetworkConfig direct; // defaults with the head-set collapsed by hand
    direct.m = 1;
    const NetworkConfig derived = leach_config(NetworkConfig{});
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const std::string a = trace_csv(simulate(direct, seed, StopRule::all_dead()));
        const std::string b = trace_csv(simulate(derived, seed, StopRule::all_dead()));
        if (a != b) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "seed %llu traces differ",
                          static_cast<unsigned long long>(seed));
            note = buf;
            return false;
        }
    }
    note = "20 shared seeds, byte-identical traces";
    return true;
}

bool c5_cluster_count_optimum(std::string& note) {
    const NetworkConfig base;
    double best_mean = 0.0;
    int best_k = -1;
    double at5 = 0.0, at100 = 0.0;
    for (int k = 5; k <= 100; k += 5) {
        const NetworkConfig cfg = apply_axis(base, "k", k);
        const double mean = mean_metric(cfg, Metric::RoundEnergy, 20, 1);
        if (k == 5) at5 = mean;
        if (k == 100) at100 = mean;
        if (best_k < 0 || mean < best_mean) {
            best_mean = mean;
            best_k = k;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "energy/round mean: %.3f J at k=5, %.3f J at k=100, argmin at "
                  "k=%d (required within [20,60])",
                  at5, at100, best_k);
    note = buf;
    return best_k >= 20 && best_k <= 60;
}

bool c6_headset_energy(std::string& note) {
    const NetworkConfig base;
    double prev = 0.0, first = 0.0, last = 0.0;
    for (int m = 1; m <= 8; ++m) {
        const NetworkConfig cfg = apply_axis(base, "m", m);
        const double mean = mean_metric(cfg, Metric::RoundEnergy, 20, 1);
        if (m == 1) {
            first = mean;
        } else if (mean >= prev) {
            char buf[96];
            std::snprintf(buf, sizeof buf,
                          "not strictly decreasing at m=%d (%.4f -> %.4f J)", m,
                          prev, mean);
            note = buf;
            return false;
        }
        prev = mean;
        last = mean;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "energy/round strictly falls %.3f -> %.3f J over m=1..8",
                  first, last);
    note = buf;
    return true;
}

bool c7_iteration_time_monotone(std::string& note) {
    const NetworkConfig base; // mean cluster size n/k = 50, so m runs to 25
    double prev = -1.0, first = 0.0, last = 0.0;
    for (int m = 1; m <= 25; ++m) {
        const NetworkConfig cfg = apply_axis(base, "m", m);
        const double mean = mean_metric(cfg, Metric::IterationTime, 20, 1);
        if (m == 1) first = mean;
        if (mean < prev) {
            char buf[96];
            std::snprintf(buf, sizeof buf,
                          "decreased at m=%d (%.4f -> %.4f s)", m, prev, mean);
            note = buf;
            return false;
        }
        prev = mean;
        last = mean;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "iteration time non-decreasing, %.3f -> %.3f s over m=1..25",
                  first, last);
    note = buf;
    return true;
}

bool c8_iteration_time_flat_in_k(std::string& note) {
    const NetworkConfig base; // field stays at its 100 m default
    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (int k = 10; k <= 80; k += 10) {
        const NetworkConfig cfg = apply_axis(base, "k", k);
        const double mean = mean_metric(cfg, Metric::IterationTime, 20, 1);
        if (!any) {
            lo = hi = mean;
            any = true;
        } else {
            lo = std::min(lo, mean);
            hi = std::max(hi, mean);
        }
    }
    const double spread = (hi - lo) / lo;
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "iteration time spread %.1f%% across k=10..80 (limit 15%%)",
                  spread * 100.0);
    note = buf;
    return spread < 0.15;
}

bool c9_frames_vs_bs_distance(std::string& note) {
    const NetworkConfig base;
    double prev = 0.0, first = 0.0, last = 0.0;
    for (int dist = 75; dist <= 250; dist += 25) {
        const NetworkConfig cfg = apply_axis(base, "bs_distance", dist);
        const double mean = mean_metric(cfg, Metric::IterationFrames, 20, 1);
        if (dist == 75) {
            first = mean;
        } else if (mean > prev) {
            char buf[96];
            std::snprintf(buf, sizeof buf,
                          "frames increased at distance %d (%.2f -> %.2f)",
                          dist, prev, mean);
            note = buf;
            return false;
        }
        prev = mean;
        last = mean;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "frames/iteration %.1f at 75 m, %.1f at 250 m, never rising",
                  first, last);
    note = buf;
    return true;
}

bool c10_headline_comparison(std::string& note) {
    const NetworkConfig head_set; // defaults, m=5
    const NetworkConfig baseline = leach_config(head_set);
    int wins_energy = 0, wins_frames = 0, wins_fnd = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const ArmStats a = arm_stats(head_set, seed);
        const ArmStats b = arm_stats(baseline, seed);
        wins_energy += a.energy_per_round < b.energy_per_round ? 1 : 0;
        wins_frames += a.frames_per_iteration > b.frames_per_iteration ? 1 : 0;
        wins_fnd += a.fnd > b.fnd ? 1 : 0;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "wins over 20 paired seeds: energy %d, frames %d, "
                  "first-death %d (need >= 18 each)",
                  wins_energy, wins_frames, wins_fnd);
    note = buf;
    return wins_energy >= 18 && wins_frames >= 18 && wins_fnd >= 18;
}

bool c11_determinism(std::string& note) {
    // Trace command at defaults.
    const NetworkConfig base;
    const std::string t1 = trace_csv(simulate(base, 1, StopRule::max_rounds(5)));
    const std::string t2 = trace_csv(simulate(base, 1, StopRule::max_rounds(5)));
    if (t1 != t2) {
        note = "trace output differs between identical runs";
        return false;
    }
    // Sweep command on a scaled-down network.
    NetworkConfig small;
    small.n = 100;
    small.k = 4;
    small.m = 2;
    SweepSpec spec;
    spec.figure = Figure::Fig4;
    spec.base = small;
    spec.replicates = 20;
    spec.base_seed = 1;
    std::ostringstream s1, s2;
    write_sweep_csv(s1, run_sweep(spec));
    write_sweep_csv(s2, run_sweep(spec));
    if (s1.str() != s2.str()) {
        note = "sweep output differs between identical runs";
        return false;
    }
    // Comparison command on the same network.
    std::ostringstream c1, c2;
    write_compare_csv(c1, run_compare(small, 1, 20));
    write_compare_csv(c2, run_compare(small, 1, 20));
    if (c1.str() != c2.str()) {
        note = "comparison output differs between identical runs";
        return false;
    }
    note = "trace, sweep and comparison outputs byte-identical on reruns";
    return true;
}

}  // namespace

int main() {
    int failed = 0;
    failed += run_criterion(1, "node life-cycle transition table", 1.0,
                            c1_state_machine);
    failed += run_criterion(2, "every node serves once per round", 30.0,
                            c2_round_service);
    failed += run_criterion(3, "energy ledger exactness", 0.0, c3_energy_ledger);
    failed += run_criterion(4, "m=1 equals the single-head baseline", 0.0,
                            c4_baseline_equivalence);
    failed += run_criterion(5, "energy-optimal cluster count in [20,60]", 120.0,
                            c5_cluster_count_optimum);
    failed += run_criterion(6, "energy per round falls as the head-set grows",
                            0.0, c6_headset_energy);
    failed += run_criterion(7, "iteration time non-decreasing in head-set size",
                            0.0, c7_iteration_time_monotone);
    failed += run_criterion(8, "iteration time flat across cluster counts", 0.0,
                            c8_iteration_time_flat_in_k);
    failed += run_criterion(9, "frame delivery never rises with BS distance",
                            0.0, c9_frames_vs_bs_distance);
    failed += run_criterion(10, "head-set protocol beats the baseline", 0.0,
                            c10_headline_comparison);
    failed += run_criterion(11, "byte-identical reruns", 0.0, c11_determinism);
    if (failed == 0) {
        std::printf("acceptance: all 11 criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion(s) failed\n", failed);
    }
    return failed;
}
