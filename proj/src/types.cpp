#include "cbhrp/types.hpp"

#include <stdexcept>

namespace cbhrp {

const char* to_string(NodeState s) {
    switch (s) {
        case NodeState::Candidate: return "candidate";
        case NodeState::NonCandidate: return "non_candidate";
        case NodeState::Active: return "active";
        case NodeState::Associate: return "associate";
        case NodeState::PassiveAssociate: return "passive_associate";
        case NodeState::Dead: return "dead";
    }
    return "?";
}

const char* to_string(StateEvent e) {
    switch (e) {
        case StateEvent::RoundStart: return "round_start";
        case StateEvent::ChosenAsHead: return "chosen_as_head";
        case StateEvent::SelectedAsAssociate: return "selected_as_associate";
        case StateEvent::TurnToTransmit: return "turn_to_transmit";
        case StateEvent::FrameSent: return "frame_sent";
        case StateEvent::IterationEnd: return "iteration_end";
        case StateEvent::EnergyExhausted: return "energy_exhausted";
    }
    return "?";
}

NodeState transition(NodeState s, StateEvent e) {
    if (e == StateEvent::EnergyExhausted) return NodeState::Dead;
    if (s == NodeState::Dead) return NodeState::Dead;
    switch (s) {
        case NodeState::Candidate:
            if (e == StateEvent::ChosenAsHead) return NodeState::Active;
            if (e == StateEvent::SelectedAsAssociate) return NodeState::Associate;
            return s;
        case NodeState::NonCandidate:
            if (e == StateEvent::RoundStart) return NodeState::Candidate;
            return s;
        case NodeState::Active:
            if (e == StateEvent::FrameSent) return NodeState::PassiveAssociate;
            if (e == StateEvent::IterationEnd) return NodeState::NonCandidate;
            return s;
        case NodeState::Associate:
        case NodeState::PassiveAssociate:
            if (e == StateEvent::TurnToTransmit) return NodeState::Active;
            if (e == StateEvent::IterationEnd) return NodeState::NonCandidate;
            return s;
        default:
            return s;
    }
}

void validate(const NetworkConfig& cfg) {
    std::string err;
    auto fail = [&err](const char* msg) {
        if (!err.empty()) err += "; ";
        err += msg;
    };
    if (cfg.n < 1) fail("n must be >= 1");
    if (cfg.k < 1) fail("k must be >= 1");
    if (cfg.m < 1) fail("m must be >= 1");
    if (cfg.k > cfg.n) fail("k must be <= n");
    if (static_cast<long long>(cfg.k) * cfg.m > cfg.n)
        fail("k*m must be <= n");
    if (!(cfg.field > 0.0)) fail("field side must be > 0");
    if (!(cfg.e_init > 0.0)) fail("e_init must be > 0");
    if (cfg.radio.e_elec < 0.0 || cfg.radio.eps_amp < 0.0 ||
        cfg.radio.e_da < 0.0)
        fail("radio constants must be >= 0");
    if (cfg.l_adv < 1 || cfg.l_ack < 1 || cfg.l_sched < 1 || cfg.l_data < 1)
        fail("message lengths must be >= 1 bit");
    if (!(cfg.beta > 0.0) || cfg.beta > 1.0) fail("beta must be in (0, 1]");
    if (!(cfg.t_slot > 0.0)) fail("t_slot must be > 0");
    if (!err.empty()) throw std::invalid_argument("invalid config: " + err);
}

LifetimeMetrics lifetime_metrics(const SimulationTrace& trace) {
    return {trace.first_death_round, trace.half_death_round,
            trace.last_death_round};
}

}  // namespace cbhrp
