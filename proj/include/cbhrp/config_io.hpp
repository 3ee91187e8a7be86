#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cbhrp/types.hpp"

namespace cbhrp {

// Raised on malformed config text; `line` is 1-based.
struct ConfigError : std::runtime_error {
    int line;
    ConfigError(const std::string& msg, int line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
          line(line_no) {}
};

// Flat `key = value` format, one pair per line; blank lines and lines
// starting with '#' are ignored. Unknown keys are errors; omitted keys keep
// their defaults. bs_position takes two numbers ("x y").
NetworkConfig parse_config(std::istream& in);
NetworkConfig parse_config_text(const std::string& text);
// Additionally throws std::runtime_error when the file cannot be opened.
NetworkConfig parse_config_file(const std::string& path);

// Canonical round-trippable rendering of a config.
std::string serialize_config(const NetworkConfig& cfg);

}  // namespace cbhrp
