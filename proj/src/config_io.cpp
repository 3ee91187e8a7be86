#include "cbhrp/config_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

namespace cbhrp {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, int line) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError("expected a number, got '" + text + "'", line);
    }
    if (trim(text.substr(used)) != "")
        throw ConfigError("trailing junk after number in '" + text + "'", line);
    return v;
}

int parse_int(const std::string& text, int line) {
    const double v = parse_number(text, line);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw ConfigError("expected an integer, got '" + text + "'", line);
    return i;
}

std::uint64_t parse_seed(const std::string& text, int line) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        throw ConfigError("expected an unsigned integer, got '" + text + "'",
                          line);
    }
    if (trim(text.substr(used)) != "")
        throw ConfigError("trailing junk after number in '" + text + "'", line);
    return static_cast<std::uint64_t>(v);
}

Point parse_point(const std::string& text, int line) {
    std::istringstream ss(text);
    double x = 0.0, y = 0.0;
    std::string rest;
    if (!(ss >> x >> y))
        throw ConfigError("bs_position needs two numbers ('x y')", line);
    if (ss >> rest)
        throw ConfigError("bs_position takes exactly two numbers", line);
    return {x, y};
}

}  // namespace

NetworkConfig parse_config(std::istream& in) {
    NetworkConfig cfg;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value'", line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("missing key", line_no);
        if (val.empty()) throw ConfigError("missing value for '" + key + "'", line_no);
        if (key == "n") cfg.n = parse_int(val, line_no);
        else if (key == "k") cfg.k = parse_int(val, line_no);
        else if (key == "m") cfg.m = parse_int(val, line_no);
        else if (key == "D") cfg.field = parse_number(val, line_no);
        else if (key == "bs_position") cfg.bs = parse_point(val, line_no);
        else if (key == "e_init") cfg.e_init = parse_number(val, line_no);
        else if (key == "e_elec") cfg.radio.e_elec = parse_number(val, line_no);
        else if (key == "eps_amp") cfg.radio.eps_amp = parse_number(val, line_no);
        else if (key == "e_da") cfg.radio.e_da = parse_number(val, line_no);
        else if (key == "l_adv") cfg.l_adv = parse_int(val, line_no);
        else if (key == "l_ack") cfg.l_ack = parse_int(val, line_no);
        else if (key == "l_sched") cfg.l_sched = parse_int(val, line_no);
        else if (key == "l_data") cfg.l_data = parse_int(val, line_no);
        else if (key == "beta") cfg.beta = parse_number(val, line_no);
        else if (key == "t_slot") cfg.t_slot = parse_number(val, line_no);
        else if (key == "seed") cfg.seed = parse_seed(val, line_no);
        else throw ConfigError("unknown key '" + key + "'", line_no);
    }
    return cfg;
}

NetworkConfig parse_config_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_config(ss);
}

NetworkConfig parse_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    return parse_config(f);
}

std::string serialize_config(const NetworkConfig& cfg) {
    char buf[512];
    std::string out;
    auto kv = [&out, &buf](const char* key, const char* fmt, auto value) {
        char line[560];
        std::snprintf(buf, sizeof buf, fmt, value);
        std::snprintf(line, sizeof line, "%s = %s\n", key, buf);
        out += line;
    };
    kv("n", "%d", cfg.n);
    kv("k", "%d", cfg.k);
    kv("m", "%d", cfg.m);
    kv("D", "%.17g", cfg.field);
    {
        char line[560];
        std::snprintf(line, sizeof line, "bs_position = %.17g %.17g\n",
                      cfg.bs.x, cfg.bs.y);
        out += line;
    }
    kv("e_init", "%.17g", cfg.e_init);
    kv("e_elec", "%.17g", cfg.radio.e_elec);
    kv("eps_amp", "%.17g", cfg.radio.eps_amp);
    kv("e_da", "%.17g", cfg.radio.e_da);
    kv("l_adv", "%d", cfg.l_adv);
    kv("l_ack", "%d", cfg.l_ack);
    kv("l_sched", "%d", cfg.l_sched);
    kv("l_data", "%d", cfg.l_data);
    kv("beta", "%.17g", cfg.beta);
    kv("t_slot", "%.17g", cfg.t_slot);
    kv("seed", "%llu", static_cast<unsigned long long>(cfg.seed));
    return out;
}

}  // namespace cbhrp
