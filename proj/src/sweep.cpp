#include "cbhrp/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "cbhrp/protocol.hpp"
#include "cbhrp/world.hpp"

namespace cbhrp {

namespace {

struct Grid {
    const char* axis1;
    std::vector<double> values1;
    const char* axis2;
    std::vector<double> values2;
    const char* metric;
};

std::vector<double> seq(double lo, double hi, double step) {
    std::vector<double> v;
    for (double x = lo; x <= hi + 1e-9; x += step) v.push_back(x);
    return v;
}

Grid grid_for(Figure f) {
    switch (f) {
        case Figure::Fig2:
            return {"k", seq(5, 100, 5), "bs_distance", seq(75, 250, 25),
                    "energy_per_round_j"};
        case Figure::Fig3:
            return {"D", seq(50, 300, 50), "m", seq(1, 10, 1),
                    "energy_per_round_j"};
        case Figure::Fig4:
            return {"D", seq(50, 300, 50), "m", seq(1, 10, 1),
                    "iteration_time_s"};
        case Figure::Fig5:
            return {"k", seq(5, 100, 5), "D", seq(50, 300, 50),
                    "iteration_time_s"};
        case Figure::Fig6:
            return {"bs_distance", seq(75, 250, 25), "D", seq(50, 300, 50),
                    "frames_to_bs"};
        default:
            throw std::invalid_argument("run_sweep: not a grid figure");
    }
}

double replicate_metric(Figure f, const NetworkConfig& cfg,
                        std::uint64_t seed) {
    World w = deploy(cfg, seed);
    switch (f) {
        case Figure::Fig2:
        case Figure::Fig3:
            return run_round(w)->energy_j;
        case Figure::Fig4:
        case Figure::Fig5:
            return run_iteration(w)->elapsed_time_s;
        case Figure::Fig6:
            return static_cast<double>(run_iteration(w)->frames_to_bs);
        default:
            throw std::invalid_argument("replicate_metric: not a grid figure");
    }
}

}  // namespace

std::optional<Figure> figure_from_string(const std::string& name) {
    if (name == "fig2") return Figure::Fig2;
    if (name == "fig3") return Figure::Fig3;
    if (name == "fig4") return Figure::Fig4;
    if (name == "fig5") return Figure::Fig5;
    if (name == "fig6") return Figure::Fig6;
    if (name == "lifetime") return Figure::LifetimeCompare;
    return std::nullopt;
}

const char* to_string(Figure f) {
    switch (f) {
        case Figure::Fig2: return "fig2";
        case Figure::Fig3: return "fig3";
        case Figure::Fig4: return "fig4";
        case Figure::Fig5: return "fig5";
        case Figure::Fig6: return "fig6";
        case Figure::LifetimeCompare: return "lifetime";
    }
    return "?";
}

NetworkConfig apply_axis(NetworkConfig cfg, const std::string& axis,
                         double value) {
    if (axis == "k") {
        cfg.k = static_cast<int>(value);
    } else if (axis == "m") {
        cfg.m = static_cast<int>(value);
    } else if (axis == "D") {
        const double cx = cfg.field / 2.0;
        const double cy = cfg.field / 2.0;
        const double ox = cfg.bs.x - cx;
        const double oy = cfg.bs.y - cy;
        const double dist = std::sqrt(ox * ox + oy * oy);
        cfg.field = value;
        cfg.bs = {value / 2.0, value / 2.0 + dist};
    } else if (axis == "bs_distance") {
        cfg.bs = {cfg.field / 2.0, cfg.field / 2.0 + value};
    } else {
        throw std::invalid_argument("unknown sweep axis: " + axis);
    }
    if (cfg.k > 0 && cfg.m > cfg.n / cfg.k) cfg.m = cfg.n / cfg.k;
    return cfg;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.figure == Figure::LifetimeCompare)
        throw std::invalid_argument(
            "run_sweep: lifetime comparison has no grid; use run_compare");
    if (spec.replicates < 1)
        throw std::invalid_argument("run_sweep: replicates must be >= 1");
    const Grid g = grid_for(spec.figure);
    std::vector<SweepRow> rows;
    rows.reserve(g.values1.size() * g.values2.size());
    for (double v1 : g.values1) {
        for (double v2 : g.values2) {
            NetworkConfig cfg = apply_axis(spec.base, g.axis1, v1);
            cfg = apply_axis(cfg, g.axis2, v2);
            double sum = 0.0;
            std::vector<double> xs(static_cast<std::size_t>(spec.replicates));
            for (int i = 0; i < spec.replicates; ++i) {
                xs[static_cast<std::size_t>(i)] = replicate_metric(
                    spec.figure, cfg,
                    spec.base_seed + static_cast<std::uint64_t>(i));
                sum += xs[static_cast<std::size_t>(i)];
            }
            const double mean = sum / spec.replicates;
            double var = 0.0;
            if (spec.replicates > 1) {
                for (double x : xs) var += (x - mean) * (x - mean);
                var /= spec.replicates - 1;
            }
            SweepRow row;
            row.figure = to_string(spec.figure);
            row.axis1_name = g.axis1;
            row.axis1 = v1;
            row.axis2_name = g.axis2;
            row.axis2 = v2;
            row.metric = g.metric;
            row.mean = mean;
            row.stddev = std::sqrt(var);
            row.replicates = spec.replicates;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "figure,axis1_name,axis1,axis2_name,axis2,metric,mean,stddev,"
           "replicates\n";
    char buf[512];
    for (const SweepRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%s,%s,%.9g,%s,%.9g,%s,%.9g,%.9g,%d\n",
                      r.figure.c_str(), r.axis1_name.c_str(), r.axis1,
                      r.axis2_name.c_str(), r.axis2, r.metric.c_str(), r.mean,
                      r.stddev, r.replicates);
        out << buf;
    }
}

std::vector<CompareRow> run_compare(const NetworkConfig& base,
                                    std::uint64_t base_seed, int replicates) {
    if (replicates < 1)
        throw std::invalid_argument("run_compare: replicates must be >= 1");
    const NetworkConfig arms[2] = {leach_config(base), base};
    const char* names[2] = {"leach", "cbhrp"};
    std::vector<CompareRow> rows;
    for (int a = 0; a < 2; ++a) {
        double sum_e = 0.0, sum_f = 0.0, sum_fnd = 0.0;
        for (int i = 0; i < replicates; ++i) {
            const SimulationTrace tr =
                simulate(arms[a], base_seed + static_cast<std::uint64_t>(i),
                         StopRule::first_death());
            double energy = 0.0;
            long long frames = 0, iters = 0;
            for (const RoundReport& rr : tr.rounds) {
                energy += rr.energy_j;
                frames += rr.frames_to_bs;
                iters += static_cast<long long>(rr.iterations.size());
            }
            sum_e += energy / static_cast<double>(tr.rounds.size());
            sum_f += static_cast<double>(frames) / static_cast<double>(iters);
            sum_fnd += static_cast<double>(tr.first_death_round.value());
        }
        CompareRow row;
        row.protocol = names[a];
        row.energy_per_round = sum_e / replicates;
        row.frames_per_iteration = sum_f / replicates;
        row.fnd = sum_fnd / replicates;
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows) {
    out << "protocol,energy_per_round,fnd,frames_per_iteration\n";
    char buf[256];
    for (const CompareRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%s,%.9g,%.9g,%.9g\n",
                      r.protocol.c_str(), r.energy_per_round, r.fnd,
                      r.frames_per_iteration);
        out << buf;
    }
}

}  // namespace cbhrp
