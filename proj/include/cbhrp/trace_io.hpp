#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "cbhrp/types.hpp"

namespace cbhrp {

// One CSV row per iteration, preceded by a `# rng=<name>` comment naming
// the generator the run used. Landmark rounds follow as trailing comments
// when the run reached them. Deterministic formatting: %.17g doubles.
void write_trace_csv(std::ostream& out, const SimulationTrace& trace);
std::string trace_csv(const SimulationTrace& trace);

// "all-dead" | "first-death" | "half-dead" | "max-rounds:N".
// Throws std::invalid_argument on anything else.
StopRule parse_stop_rule(const std::string& text);
std::string to_string(const StopRule& stop);

}  // namespace cbhrp
