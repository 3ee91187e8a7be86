#pragma once

#include <optional>
#include <vector>

#include "cbhrp/types.hpp"
#include "cbhrp/world.hpp"

namespace cbhrp {

// Test/measurement hook: sees each iteration's head-sets right after
// selection (before any data transfer).
struct IterationObserver {
    virtual ~IterationObserver() = default;
    virtual void on_headsets(const World&, const std::vector<HeadSet>&) {}
};

// Uniformly draws k distinct heads from the eligible pool (Candidate and
// not yet served this round), returned in ascending id order. Throws
// std::invalid_argument if fewer than k nodes are eligible.
std::vector<NodeId> elect_cluster_heads(World& w, int k);

// Assigns every alive node to the nearest head by squared distance
// (earliest head in `heads` wins ties). Returns a per-node cluster index,
// -1 for dead nodes. `heads` indexes the returned clusters.
std::vector<int> form_clusters(const World& w,
                               const std::vector<NodeId>& heads);

// Builds one cluster's head-set: the head leads, then the m-1 eligible
// members nearest to it (ties by lower id). Smaller when the cluster lacks
// eligible members; the iteration driver tops such sets up from
// neighbouring clusters' surplus.
HeadSet select_head_set(const World& w, const std::vector<NodeId>& members,
                        NodeId head, int m, int cluster_index);

// ceil(n_alive / (k*m)): how many iterations a round schedules so every
// alive node serves in exactly one head-set per round.
int iterations_per_round(int n_alive, int k, int m);

// How many full head-set rotations one iteration's energy budget
// (beta * e_init) sustains, never less than one. cluster_size and
// m_effective are the iteration's representative values; d_bs is the
// worst-case provisioning distance to the base station.
int epochs_per_iteration(const NetworkConfig& cfg, int cluster_size,
                         int m_effective, double d_bs);

struct EpochResult {
    double energy_j = 0.0;
    int frames_to_bs = 0;
};

// One full rotation of one cluster's head-set: each alive member in turn
// becomes Active, receives the cluster's frames, aggregates and forwards
// one frame to the base station. `members` is the cluster's alive-at-
// iteration-start membership, ascending id.
EpochResult run_epoch(HeadSet& hs, const std::vector<NodeId>& members,
                      World& w);

// One election + data-transfer cycle. Returns nothing when no node is
// eligible (everyone alive already served this round).
std::optional<IterationReport> run_iteration(World& w,
                                             IterationObserver* obs = nullptr);

// One full round: re-arms every alive node as Candidate, then runs the
// scheduled number of iterations. Returns nothing when no node is alive.
std::optional<RoundReport> run_round(World& w,
                                     IterationObserver* obs = nullptr);

// Deploys a fresh world and runs rounds until the stop rule fires.
SimulationTrace simulate(const NetworkConfig& cfg, std::uint64_t seed,
                         const StopRule& stop,
                         IterationObserver* obs = nullptr);

// The baseline arm: same engine, head-set collapsed to a single head.
NetworkConfig leach_config(NetworkConfig cfg);

}  // namespace cbhrp
