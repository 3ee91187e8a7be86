#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cbhrp/types.hpp"

namespace cbhrp {

// The packaged parameter studies. fig2/fig3 measure the energy one full
// round drains from a fresh deployment; fig4/fig5 the first iteration's
// elapsed time; fig6 the first iteration's frames delivered to the base
// station. lifetime runs the head-set protocol against its single-head
// baseline to first death.
enum class Figure { Fig2, Fig3, Fig4, Fig5, Fig6, LifetimeCompare };

std::optional<Figure> figure_from_string(const std::string& name);
const char* to_string(Figure f);

struct SweepSpec {
    Figure figure = Figure::Fig2;
    NetworkConfig base;
    int replicates = 20;
    std::uint64_t base_seed = 1; // replicate i runs with seed base_seed + i
};

struct SweepRow {
    std::string figure;
    std::string axis1_name;
    double axis1 = 0.0;
    std::string axis2_name;
    double axis2 = 0.0;
    std::string metric;
    double mean = 0.0;
    double stddev = 0.0; // sample standard deviation over replicates
    int replicates = 0;
};

// Grid evaluation, axis1-major row order. Throws std::invalid_argument for
// Figure::LifetimeCompare (that one produces CompareRows instead).
std::vector<SweepRow> run_sweep(const SweepSpec& spec);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct CompareRow {
    std::string protocol; // "leach" or "cbhrp"
    double energy_per_round = 0.0;
    double fnd = 0.0;
    double frames_per_iteration = 0.0;
};

// Runs both arms to first death over `replicates` paired seeds and averages
// the per-seed metrics. Rows come back baseline first.
std::vector<CompareRow> run_compare(const NetworkConfig& base,
                                    std::uint64_t base_seed, int replicates);
void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows);

// Applies a sweep axis to a config copy: k, m, D (rescales the field and
// re-derives the base-station position so its distance from the field
// centre is preserved) or bs_distance (places the base station that far
// from the field centre, straight up). After axes are applied the head-set
// size is clamped to floor(n/k) so the config stays valid.
NetworkConfig apply_axis(NetworkConfig cfg, const std::string& axis,
                         double value);

}  // namespace cbhrp
