// cbhrp: deterministic head-set clustering simulator.
//   cbhrp simulate [config] [--seed N] [--stop RULE] [--out PATH]
//   cbhrp sweep    [config] [--figure figN] [--seed N] [--out PATH]
//   cbhrp compare  [config] [--seed N] [--out PATH]
// Exit codes: 0 ok, 2 bad config/arguments, 3 unwritable output.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>

#include "cbhrp/config_io.hpp"
#include "cbhrp/protocol.hpp"
#include "cbhrp/sweep.hpp"
#include "cbhrp/trace_io.hpp"

namespace {

struct CommonArgs {
    std::string config_flag;
    std::string config_pos;
    std::uint64_t seed = 1;
    bool seed_given = false;
    std::string out;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("config_file", args.config_pos, "config file (key = value)");
    cmd->add_option("--config", args.config_flag, "config file (key = value)");
    cmd->add_option("--seed", args.seed, "override the config's seed")
        ->each([&args](const std::string&) { args.seed_given = true; });
    cmd->add_option("--out", args.out, "output file (default: stdout)");
}

int load_config(const CommonArgs& args, cbhrp::NetworkConfig& cfg) {
    if (!args.config_flag.empty() && !args.config_pos.empty() &&
        args.config_flag != args.config_pos) {
        std::cerr << "error: config given twice (positional and --config)\n";
        return 2;
    }
    const std::string path =
        !args.config_flag.empty() ? args.config_flag : args.config_pos;
    try {
        if (!path.empty()) cfg = cbhrp::parse_config_file(path);
        cbhrp::validate(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << (path.empty() ? "" : path + ": ") << e.what()
                  << "\n";
        return 2;
    }
    return 0;
}

// Writes through `fn` to --out (or stdout); exit 3 when the file can't be
// written.
template <typename Fn>
int emit(const CommonArgs& args, Fn&& fn) {
    if (args.out.empty()) {
        fn(std::cout);
        return std::cout ? 0 : 3;
    }
    std::ofstream f(args.out);
    if (!f) {
        std::cerr << "error: cannot write " << args.out << "\n";
        return 3;
    }
    fn(f);
    f.flush();
    if (!f) {
        std::cerr << "error: failed writing " << args.out << "\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic head-set clustering simulator"};
    app.require_subcommand(1);

    CommonArgs sim_args, sweep_args, cmp_args;
    std::string stop_text = "all-dead";
    std::string figure_text = "fig2";

    CLI::App* sim = app.add_subcommand("simulate", "run one simulation, print a trace CSV");
    add_common(sim, sim_args);
    sim->add_option("--stop", stop_text,
                    "all-dead | first-death | half-dead | max-rounds:N");

    CLI::App* sweep = app.add_subcommand("sweep", "run a packaged parameter study, print a CSV");
    add_common(sweep, sweep_args);
    sweep->add_option("--figure", figure_text,
                      "fig2 | fig3 | fig4 | fig5 | fig6 | lifetime");

    CLI::App* cmp = app.add_subcommand("compare", "head-set protocol vs single-head baseline, print a CSV");
    add_common(cmp, cmp_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (sim->parsed()) {
        cbhrp::NetworkConfig cfg;
        if (int rc = load_config(sim_args, cfg)) return rc;
        cbhrp::StopRule stop;
        try {
            stop = cbhrp::parse_stop_rule(stop_text);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        const std::uint64_t seed = sim_args.seed_given ? sim_args.seed : cfg.seed;
        const cbhrp::SimulationTrace tr = cbhrp::simulate(cfg, seed, stop);
        return emit(sim_args, [&tr](std::ostream& os) {
            cbhrp::write_trace_csv(os, tr);
        });
    }

    if (sweep->parsed()) {
        cbhrp::NetworkConfig cfg;
        if (int rc = load_config(sweep_args, cfg)) return rc;
        const auto fig = cbhrp::figure_from_string(figure_text);
        if (!fig) {
            std::cerr << "error: unknown figure '" << figure_text << "'\n";
            return 2;
        }
        const std::uint64_t seed =
            sweep_args.seed_given ? sweep_args.seed : cfg.seed;
        if (*fig == cbhrp::Figure::LifetimeCompare) {
            const auto rows = cbhrp::run_compare(cfg, seed, 20);
            return emit(sweep_args, [&rows](std::ostream& os) {
                cbhrp::write_compare_csv(os, rows);
            });
        }
        cbhrp::SweepSpec spec;
        spec.figure = *fig;
        spec.base = cfg;
        spec.base_seed = seed;
        const auto rows = cbhrp::run_sweep(spec);
        return emit(sweep_args, [&rows](std::ostream& os) {
            cbhrp::write_sweep_csv(os, rows);
        });
    }

    cbhrp::NetworkConfig cfg;
    if (int rc = load_config(cmp_args, cfg)) return rc;
    const std::uint64_t seed = cmp_args.seed_given ? cmp_args.seed : cfg.seed;
    const auto rows = cbhrp::run_compare(cfg, seed, 20);
    return emit(cmp_args, [&rows](std::ostream& os) {
        cbhrp::write_compare_csv(os, rows);
    });
}
