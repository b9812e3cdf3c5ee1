#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cspin/experiment.hpp"
#include "cspin/qasm.hpp"
#include "cspin/svg_plot.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out_path;
    std::string topology_path;
    std::string backend;
    std::int64_t seed = -1;
    int steps = -1;
    std::int64_t shots = -1;
};

cspin::ExperimentConfig resolve_config(const CommonFlags& f) {
    if (f.config_path.empty()) {
        throw std::runtime_error("--config is required");
    }
    cspin::ExperimentConfig cfg = cspin::load_config(f.config_path);
    if (!f.backend.empty()) cfg.backend = cspin::backend_from_name(f.backend);
    if (f.seed >= 0) cfg.seed = static_cast<std::uint64_t>(f.seed);
    if (f.steps >= 0) cfg.steps = f.steps;
    if (f.shots >= 0) cfg.shots = static_cast<std::size_t>(f.shots);
    if (!f.topology_path.empty()) cfg.topology_path = f.topology_path;
    cfg.check();
    return cfg;
}

void add_common(CLI::App* cmd, CommonFlags& f, bool need_out) {
    cmd->add_option("--config", f.config_path, "experiment config (JSON)")
        ->required();
    auto* out = cmd->add_option("--out", f.out_path, "output file path");
    if (need_out) out->required();
    cmd->add_option("--seed", f.seed, "override RNG seed");
    cmd->add_option("--backend", f.backend, "override backend (exact|trotter|noisy)");
    cmd->add_option("--steps", f.steps, "override Trotter step count");
    cmd->add_option("--shots", f.shots, "override shots (0 = expectation)");
    cmd->add_option("--topology", f.topology_path, "override topology file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"central-spin dynamics simulator and experiment harness"};
    app.require_subcommand(1);

    CommonFlags run_flags, oracle_flags, compare_flags, export_flags;
    std::string plot_csv, plot_out;
    double export_tau = 0.0, export_phase = 0.0;

    auto* cmd_run = app.add_subcommand(
        "run", "run a population-vs-tau sweep and write CSV");
    add_common(cmd_run, run_flags, true);

    auto* cmd_plot =
        app.add_subcommand("plot", "render a result CSV as an SVG line chart");
    cmd_plot->add_option("--csv", plot_csv, "input CSV from 'run'")->required();
    cmd_plot->add_option("--out", plot_out, "output SVG path")->required();

    auto* cmd_oracle = app.add_subcommand(
        "oracle", "write the closed-form population table for a config");
    add_common(cmd_oracle, oracle_flags, true);

    auto* cmd_compare = app.add_subcommand(
        "compare", "tabulate trotter-vs-exact deltas over the config grid");
    add_common(cmd_compare, compare_flags, true);

    auto* cmd_export = app.add_subcommand(
        "export-qasm", "compose and legalize one sweep point as OpenQASM 2.0");
    add_common(cmd_export, export_flags, true);
    cmd_export->add_option("--tau", export_tau, "evolution time")->required();
    cmd_export->add_option("--phase", export_phase,
                           "initial-state phase (ignored for excited runs)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_run->parsed()) {
            const auto cfg = resolve_config(run_flags);
            cspin::write_csv(cspin::run(cfg), run_flags.out_path);
            std::cout << "wrote " << run_flags.out_path << "\n";
        } else if (cmd_plot->parsed()) {
            cspin::emit_plot(plot_csv, plot_out);
            std::cout << "wrote " << plot_out << "\n";
        } else if (cmd_oracle->parsed()) {
            const auto cfg = resolve_config(oracle_flags);
            cspin::write_csv(cspin::closed_form_rows(cfg),
                             oracle_flags.out_path);
            std::cout << "wrote " << oracle_flags.out_path << "\n";
        } else if (cmd_compare->parsed()) {
            auto cfg = resolve_config(compare_flags);
            cfg.shots = 0;
            cfg.backend = cspin::Backend::Trotter;
            const auto trotter = cspin::run(cfg);
            cfg.backend = cspin::Backend::Exact;
            const auto exact = cspin::run(cfg);
            std::ofstream out(compare_flags.out_path, std::ios::binary);
            if (!out) {
                throw std::runtime_error("cannot write " +
                                         compare_flags.out_path);
            }
            out << "tau,phase,L,steps,trotter,exact,abs_delta\n";
            for (std::size_t i = 0; i < trotter.size(); ++i) {
                out << cspin::format_double(trotter[i].tau) << ','
                    << cspin::format_double(trotter[i].phase) << ','
                    << trotter[i].bath_size << ',' << trotter[i].steps << ','
                    << cspin::format_double(trotter[i].estimate) << ','
                    << cspin::format_double(exact[i].estimate) << ','
                    << cspin::format_double(
                           std::abs(trotter[i].estimate - exact[i].estimate))
                    << '\n';
            }
            std::cout << "wrote " << compare_flags.out_path << "\n";
        } else if (cmd_export->parsed()) {
            const auto cfg = resolve_config(export_flags);
            cspin::export_circuit(cfg, export_tau, export_phase,
                                  export_flags.out_path);
            std::cout << "wrote " << export_flags.out_path << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
