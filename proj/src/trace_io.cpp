#include "cbhrp/trace_io.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cbhrp/rng.hpp"

namespace cbhrp {

void write_trace_csv(std::ostream& out, const SimulationTrace& trace) {
    out << "# rng=" << Xoshiro256ss::name() << "\n";
    out << "round,iteration,election_energy_j,transfer_energy_j,"
           "frames_to_bs,epochs,elapsed_time_s,alive_after\n";
    char buf[256];
    for (const RoundReport& rr : trace.rounds) {
        for (const IterationReport& ir : rr.iterations) {
            std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,%d,%d,%.17g,%d\n",
                          rr.index, ir.index, ir.election_energy_j,
                          ir.transfer_energy_j, ir.frames_to_bs, ir.epochs,
                          ir.elapsed_time_s, ir.alive_after);
            out << buf;
        }
    }
    if (trace.first_death_round) out << "# fnd=" << *trace.first_death_round << "\n";
    if (trace.half_death_round) out << "# hnd=" << *trace.half_death_round << "\n";
    if (trace.last_death_round) out << "# lnd=" << *trace.last_death_round << "\n";
}

std::string trace_csv(const SimulationTrace& trace) {
    std::ostringstream ss;
    write_trace_csv(ss, trace);
    return ss.str();
}

StopRule parse_stop_rule(const std::string& text) {
    if (text == "all-dead") return StopRule::all_dead();
    if (text == "first-death") return StopRule::first_death();
    if (text == "half-dead") return StopRule::half_dead();
    const std::string prefix = "max-rounds:";
    if (text.rfind(prefix, 0) == 0) {
        const std::string num = text.substr(prefix.size());
        std::size_t used = 0;
        int n = 0;
        try {
            n = std::stoi(num, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad stop rule: " + text);
        }
        if (used != num.size() || n < 0)
            throw std::invalid_argument("bad stop rule: " + text);
        return StopRule::max_rounds(n);
    }
    throw std::invalid_argument(
        "bad stop rule '" + text +
        "' (want all-dead, first-death, half-dead or max-rounds:N)");
}

std::string to_string(const StopRule& stop) {
    switch (stop.kind) {
        case StopKind::AllDead: return "all-dead";
        case StopKind::FirstDeath: return "first-death";
        case StopKind::HalfDead: return "half-dead";
        case StopKind::MaxRounds:
            return "max-rounds:" + std::to_string(stop.rounds);
    }
    return "?";
}

}  // namespace cbhrp
