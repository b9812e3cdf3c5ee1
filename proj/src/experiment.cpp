#include "cspin/experiment.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cspin/exact_oracle.hpp"
#include "cspin/qasm.hpp"
#include "cspin/rng.hpp"
#include "cspin/state_prep.hpp"

namespace cspin {

using nlohmann::json;
using std::numbers::pi;

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::Exact:
            return "exact";
        case Backend::Trotter:
            return "trotter";
        case Backend::Noisy:
            return "noisy";
    }
    return "?";
}

Backend backend_from_name(const std::string& name) {
    if (name == "exact") return Backend::Exact;
    if (name == "trotter") return Backend::Trotter;
    if (name == "noisy") return Backend::Noisy;
    throw std::invalid_argument("unknown backend '" + name +
                                "' (want exact|trotter|noisy)");
}

double TauGrid::at(int i) const {
    if (points == 1) return start;
    return start + (stop - start) * static_cast<double>(i) /
                       static_cast<double>(points - 1);
}

void TauGrid::check() const {
    if (points < 1) throw std::invalid_argument("tau.points must be >= 1");
    if (stop < start) throw std::invalid_argument("tau.stop must be >= tau.start");
}

void ExperimentConfig::check() const {
    tau_grid.check();
    if (backend != Backend::Exact && steps < 1) {
        throw std::invalid_argument("steps must be >= 1");
    }
    if (init.kind == InitSpec::Kind::ExcitedCentral) {
        if (bath_sizes.empty()) {
            throw std::invalid_argument("bath_sizes must not be empty");
        }
        for (int L : bath_sizes) {
            if (L < 1 || L > 4) {
                throw std::invalid_argument("bath_sizes entries must be in 1..4");
            }
        }
    } else if (phases.empty()) {
        throw std::invalid_argument("phases must not be empty");
    }
    if (backend == Backend::Noisy) {
        noise.check();
        if (shots == 0) {
            throw std::invalid_argument(
                "noisy backend requires shots >= 1 (sampled estimates)");
        }
    }
}

DeviceTopology topology_for(const ExperimentConfig& cfg) {
    if (cfg.topology_path.empty()) return default_qx4_topology();
    return load_topology(cfg.topology_path);
}

std::vector<RolePairDemand> required_pairs(const InitSpec& init, int steps) {
    // Each pair interaction costs 4 CNOTs per step; prep adds its own.
    const int per_step = 4 * steps;
    std::vector<RolePairDemand> d;
    const Role c = Role::central();
    switch (init.kind) {
        case InitSpec::Kind::TwoPes:
            d.push_back({Role::bath(1), Role::bath(2), 1});
            d.push_back({c, Role::bath(1), per_step});
            d.push_back({c, Role::bath(2), per_step});
            break;
        case InitSpec::Kind::ThreePes:
            d.push_back({c, Role::bath(1), 2 + per_step});
            d.push_back({c, Role::bath(3), 1 + per_step});
            d.push_back({Role::bath(1), Role::bath(3), 1});
            d.push_back({c, Role::bath(2), 3 + per_step});  // SWAP transfer
            break;
        case InitSpec::Kind::ExcitedCentral:
            for (int j = 1; j <= init.bath_size(); ++j) {
                d.push_back({c, Role::bath(j), per_step});
            }
            break;
    }
    return d;
}

QubitAssignment assignment_for(const InitSpec& init, int steps,
                               const DeviceTopology& topo) {
    return choose_assignment(required_pairs(init, steps), topo);
}

Circuit compose_circuit(const InitSpec& init, double tau, int steps,
                        const QubitAssignment& assignment,
                        const DeviceTopology& topo) {
    Circuit c = prep_circuit(init, assignment);
    c.append(trotter_circuit(TrotterPlan::make(tau, steps, init.bath_size()),
                             assignment));
    Circuit legal = reverse_cnot_rewrite(expand_swaps(c), topo);
    const LegalityReport report = validate(legal, topo);
    if (!report.legal()) {
        throw std::runtime_error("legalized circuit still has violations: " +
                                 report.violations.front().describe());
    }
    return legal;
}

namespace {

struct PointResult {
    double estimate = 0.0;
    double stderr_est = 0.0;
};

PointResult estimate_from_counts(const MeasurementCounts& counts, int qubit) {
    std::size_t excited = 0;
    for (const auto& [idx, n] : counts.counts) {
        if (idx & (std::size_t{1} << qubit)) excited += n;
    }
    PointResult r;
    const double p = static_cast<double>(excited) /
                     static_cast<double>(counts.shots);
    r.estimate = p;
    r.stderr_est = std::sqrt(p * (1.0 - p) /
                             static_cast<double>(counts.shots));
    return r;
}

PointResult run_point(const ExperimentConfig& cfg, const InitSpec& init,
                      double tau, const QubitAssignment* assignment,
                      const DeviceTopology* topo, const ExactEvolver* evolver,
                      std::uint64_t point_seed) {
    PointResult out;
    if (cfg.backend == Backend::Exact) {
        const StateVector evolved = evolver->evolve(target_state(init), tau);
        if (cfg.shots == 0) {
            out.estimate = evolved.excited_population(0);
            return out;
        }
        SplitMix64 rng(mix_seed(point_seed, 0));
        return estimate_from_counts(
            sample_counts_with(evolved, cfg.shots, rng), 0);
    }

    const Circuit circuit =
        compose_circuit(init, tau, cfg.steps, *assignment, *topo);
    const int central = assignment->at(Role::central());

    if (cfg.backend == Backend::Trotter) {
        const StateVector final_state = simulate(circuit);
        if (cfg.shots == 0) {
            out.estimate = final_state.excited_population(central);
            return out;
        }
        SplitMix64 rng(mix_seed(point_seed, 0));
        return estimate_from_counts(
            sample_counts_with(final_state, cfg.shots, rng), central);
    }

    return estimate_from_counts(
        noisy_run(circuit, cfg.noise, cfg.shots, point_seed), central);
}

}  // namespace

std::vector<ResultRow> run(const ExperimentConfig& cfg) {
    cfg.check();
    std::vector<ResultRow> rows;
    const bool excited = cfg.init.kind == InitSpec::Kind::ExcitedCentral;
    const std::size_t n_curves =
        excited ? cfg.bath_sizes.size() : cfg.phases.size();

    DeviceTopology topo;
    if (cfg.backend != Backend::Exact) topo = topology_for(cfg);

    std::uint64_t point_index = 0;
    for (std::size_t ci = 0; ci < n_curves; ++ci) {
        const InitSpec init =
            excited ? InitSpec::excited_central(cfg.bath_sizes[ci])
                    : cfg.init.with_phase(cfg.phases[ci]);

        // Per-curve device placement and exact propagator, reused over tau.
        QubitAssignment assignment;
        ExactEvolver* evolver = nullptr;
        std::unique_ptr<ExactEvolver> evolver_holder;
        if (cfg.backend == Backend::Exact) {
            evolver_holder = std::make_unique<ExactEvolver>(
                build_hamiltonian(init.bath_size()));
            evolver = evolver_holder.get();
        } else {
            assignment = assignment_for(init, cfg.steps, topo);
        }

        for (int ti = 0; ti < cfg.tau_grid.points; ++ti, ++point_index) {
            const double tau = cfg.tau_grid.at(ti);
            const PointResult pr =
                run_point(cfg, init, tau,
                          cfg.backend == Backend::Exact ? nullptr : &assignment,
                          cfg.backend == Backend::Exact ? nullptr : &topo,
                          evolver, mix_seed(cfg.seed, point_index));
            ResultRow row;
            row.tau = tau;
            row.phase = excited ? 0.0 : cfg.phases[ci];
            row.bath_size = init.bath_size();
            row.steps = cfg.backend == Backend::Exact ? 0 : cfg.steps;
            row.backend = cfg.backend;
            row.estimate = pr.estimate;
            row.stderr_est = cfg.shots == 0 ? 0.0 : pr.stderr_est;
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<ResultRow> closed_form_rows(const ExperimentConfig& cfg) {
    cfg.check();
    std::vector<ResultRow> rows;
    const bool excited = cfg.init.kind == InitSpec::Kind::ExcitedCentral;
    const std::size_t n_curves =
        excited ? cfg.bath_sizes.size() : cfg.phases.size();
    for (std::size_t ci = 0; ci < n_curves; ++ci) {
        const InitSpec init =
            excited ? InitSpec::excited_central(cfg.bath_sizes[ci])
                    : cfg.init.with_phase(cfg.phases[ci]);
        for (int ti = 0; ti < cfg.tau_grid.points; ++ti) {
            ResultRow row;
            row.tau = cfg.tau_grid.at(ti);
            row.phase = excited ? 0.0 : init.phase;
            row.bath_size = init.bath_size();
            row.steps = 0;
            row.backend = Backend::Exact;
            row.estimate = population_closed_form(init, row.tau);
            rows.push_back(row);
        }
    }
    return rows;
}

double contrast(const ExperimentConfig& cfg, double phase_a, double phase_b,
                double tau) {
    ExperimentConfig point = cfg;
    point.tau_grid = {tau, tau, 1};
    point.phases = {phase_a};
    const double pa = run(point).front().estimate;
    point.phases = {phase_b};
    const double pb = run(point).front().estimate;
    return pa - pb;
}

// --- CSV ---------------------------------------------------------------

std::string csv_text(const std::vector<ResultRow>& rows) {
    std::ostringstream os;
    os << "tau,phase,L,steps,backend,estimate,stderr\n";
    for (const ResultRow& r : rows) {
        os << format_double(r.tau) << ',' << format_double(r.phase) << ','
           << r.bath_size << ',' << r.steps << ',' << backend_name(r.backend)
           << ',' << format_double(r.estimate) << ','
           << format_double(r.stderr_est) << '\n';
    }
    return os.str();
}

void write_csv(const std::vector<ResultRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write CSV file: " + path);
    out << csv_text(rows);
    if (!out) throw std::runtime_error("I/O error writing CSV file: " + path);
}

namespace {

double parse_csv_double(const std::string& tok, int line_no) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + tok.size() || tok.empty()) {
        throw std::runtime_error("CSV line " + std::to_string(line_no) +
                                 ": bad number '" + tok + "'");
    }
    return v;
}

}  // namespace

std::vector<ResultRow> parse_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    std::vector<ResultRow> rows;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1) {
            if (line != "tau,phase,L,steps,backend,estimate,stderr") {
                throw std::runtime_error("CSV line 1: unexpected header");
            }
            continue;
        }
        std::vector<std::string> fields;
        std::string cur;
        std::istringstream ls(line);
        while (std::getline(ls, cur, ',')) fields.push_back(cur);
        if (fields.size() != 7) {
            throw std::runtime_error("CSV line " + std::to_string(line_no) +
                                     ": expected 7 fields, got " +
                                     std::to_string(fields.size()));
        }
        ResultRow r;
        r.tau = parse_csv_double(fields[0], line_no);
        r.phase = parse_csv_double(fields[1], line_no);
        r.bath_size = static_cast<int>(parse_csv_double(fields[2], line_no));
        r.steps = static_cast<int>(parse_csv_double(fields[3], line_no));
        r.backend = backend_from_name(fields[4]);
        r.estimate = parse_csv_double(fields[5], line_no);
        r.stderr_est = parse_csv_double(fields[6], line_no);
        rows.push_back(r);
    }
    return rows;
}

void export_circuit(const ExperimentConfig& cfg, double tau, double phase,
                    const std::string& path) {
    const InitSpec init = cfg.init.kind == InitSpec::Kind::ExcitedCentral
                              ? cfg.init
                              : cfg.init.with_phase(phase);
    const DeviceTopology topo = topology_for(cfg);
    const int steps = cfg.backend == Backend::Exact ? 1 : cfg.steps;
    const QubitAssignment assignment = assignment_for(init, steps, topo);
    const Circuit circuit = compose_circuit(init, tau, steps, assignment, topo);
    write_qasm_file(circuit, path);
}

// --- config files ------------------------------------------------------

namespace {

const json& require_field(const json& j, const std::string& key,
                          const std::string& origin) {
    if (!j.contains(key)) {
        throw std::runtime_error(origin + ": missing field '" + key + "'");
    }
    return j.at(key);
}

std::vector<double> default_phase_grid() {
    return {0.0, pi / 4.0, pi / 2.0, 3.0 * pi / 4.0, pi};
}

}  // namespace

ExperimentConfig config_from_json_text(const std::string& text,
                                       const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(origin + ": " + e.what());
    }

    ExperimentConfig cfg;
    const json& init = require_field(j, "init", origin);
    const std::string kind = require_field(init, "kind", origin + ".init")
                                 .get<std::string>();
    if (kind == "2pes") {
        cfg.init = InitSpec::two_pes(init.value("phase", 0.0));
    } else if (kind == "3pes") {
        cfg.init = InitSpec::three_pes(init.value("phase", 0.0));
    } else if (kind == "excited") {
        cfg.init = InitSpec::excited_central(init.value("L", 1));
    } else {
        throw std::runtime_error(origin +
                                 ".init.kind: want 2pes|3pes|excited, got '" +
                                 kind + "'");
    }

    if (j.contains("phases")) {
        cfg.phases = j.at("phases").get<std::vector<double>>();
    } else if (init.contains("phase")) {
        cfg.phases = {init.at("phase").get<double>()};
    } else {
        cfg.phases = default_phase_grid();
    }

    if (j.contains("bath_sizes")) {
        cfg.bath_sizes = j.at("bath_sizes").get<std::vector<int>>();
    } else if (init.contains("L")) {
        cfg.bath_sizes = {init.at("L").get<int>()};
    }

    if (j.contains("tau")) {
        const json& tau = j.at("tau");
        cfg.tau_grid.start = require_field(tau, "start", origin + ".tau").get<double>();
        cfg.tau_grid.stop = require_field(tau, "stop", origin + ".tau").get<double>();
        cfg.tau_grid.points = require_field(tau, "points", origin + ".tau").get<int>();
    }

    cfg.steps = j.value("steps", 1);
    if (j.contains("backend")) {
        cfg.backend = backend_from_name(j.at("backend").get<std::string>());
    }
    cfg.shots = j.value("shots", std::size_t{0});
    cfg.seed = j.value("seed", std::uint64_t{12345});
    cfg.topology_path = j.value("topology", std::string{});

    if (j.contains("noise")) {
        const json& n = j.at("noise");
        cfg.noise.p2 = n.value("p2", cfg.noise.p2);
        cfg.noise.p1 = n.value("p1", cfg.noise.p1);
        cfg.noise.readout_flip_0to1 =
            n.value("readout01", cfg.noise.readout_flip_0to1);
        cfg.noise.readout_flip_1to0 =
            n.value("readout10", cfg.noise.readout_flip_1to0);
        cfg.noise.trajectories =
            n.value("trajectories", cfg.noise.trajectories);
    }

    try {
        cfg.check();
    } catch (const std::exception& e) {
        throw std::runtime_error(origin + ": " + e.what());
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return config_from_json_text(ss.str(), path);
}

}  // namespace cspin
