#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cbhrp {

using NodeId = std::int32_t;

enum class NodeState : std::uint8_t {
    Candidate,
    NonCandidate,
    Active,
    Associate,
    PassiveAssociate,
    Dead,
};

enum class StateEvent : std::uint8_t {
    RoundStart,
    ChosenAsHead,
    SelectedAsAssociate,
    TurnToTransmit,
    FrameSent,
    IterationEnd,
    EnergyExhausted,
};

const char* to_string(NodeState s);
const char* to_string(StateEvent e);

// Total transition function for the node life-cycle. Pairs not listed in
// the protocol description leave the state unchanged; EnergyExhausted is
// absorbing into Dead from every state.
NodeState transition(NodeState s, StateEvent e);

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct Node {
    NodeId id = 0;
    Point pos;
    double energy = 0.0;
    NodeState state = NodeState::Candidate;
    // Set while the node belongs to the current iteration's head-set;
    // rank 0 transmits first.
    std::optional<int> headset_rank;
    // Cluster index within the current iteration, for alive members.
    std::optional<int> cluster;
    bool served_this_round = false;

    bool alive() const { return state != NodeState::Dead; }
};

struct RadioParams {
    double e_elec = 50e-9;   // J/bit, TX/RX electronics
    double eps_amp = 10e-12; // J/bit/m^2, free-space amplifier
    double e_da = 5e-9;      // J/bit/signal, aggregation
};

struct NetworkConfig {
    int n = 400;          // nodes
    int k = 8;            // clusters per iteration
    int m = 5;            // head-set size
    double field = 100.0; // square side, metres
    Point bs{50.0, 150.0};
    double e_init = 0.5;  // J per node
    RadioParams radio;
    int l_adv = 200;      // bits, head advertisement
    int l_ack = 200;      // bits, membership ack
    int l_sched = 200;    // bits, TDMA schedule
    int l_data = 4000;    // bits, data frame
    double beta = 0.02;   // fraction of e_init budgeted per iteration
    double t_slot = 1e-3; // seconds per data slot
    std::uint64_t seed = 1;
};

// Throws std::invalid_argument naming every violated constraint.
void validate(const NetworkConfig& cfg);

struct HeadSet {
    int cluster = 0;
    std::vector<NodeId> members; // transmission order; members[0] leads epoch 0
    int active_index = 0;
};

struct IterationReport {
    int index = 0;                  // within the round
    double election_energy_j = 0.0;
    double transfer_energy_j = 0.0;
    int frames_to_bs = 0;
    int epochs = 0;
    double elapsed_time_s = 0.0;
    int alive_after = 0;
};

struct RoundReport {
    int index = 0; // within the run
    std::vector<IterationReport> iterations;
    double energy_j = 0.0; // total drained this round, ledger-exact
    int frames_to_bs = 0;
    double elapsed_time_s = 0.0;
    int alive_after = 0;
};

enum class StopKind : std::uint8_t { AllDead, FirstDeath, HalfDead, MaxRounds };

struct StopRule {
    StopKind kind = StopKind::AllDead;
    int rounds = 0; // used when kind == MaxRounds

    static StopRule all_dead() { return {StopKind::AllDead, 0}; }
    static StopRule first_death() { return {StopKind::FirstDeath, 0}; }
    static StopRule half_dead() { return {StopKind::HalfDead, 0}; }
    static StopRule max_rounds(int n) { return {StopKind::MaxRounds, n}; }
};

struct SimulationTrace {
    std::vector<RoundReport> rounds;
    // Round indices (0-based) of the lifetime landmarks; unset if the run
    // stopped before reaching them.
    std::optional<int> first_death_round;
    std::optional<int> half_death_round;
    std::optional<int> last_death_round;
};

struct LifetimeMetrics {
    std::optional<int> fnd; // first node dead
    std::optional<int> hnd; // half nodes dead
    std::optional<int> lnd; // last node dead
};

LifetimeMetrics lifetime_metrics(const SimulationTrace& trace);

}  // namespace cbhrp
