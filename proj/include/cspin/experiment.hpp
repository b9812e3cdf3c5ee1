#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cspin/circuit.hpp"
#include "cspin/init_spec.hpp"
#include "cspin/noise.hpp"
#include "cspin/topology.hpp"
#include "cspin/transpile.hpp"
#include "cspin/trotter.hpp"

namespace cspin {

enum class Backend { Exact, Trotter, Noisy };

std::string backend_name(Backend b);
Backend backend_from_name(const std::string& name);

struct TauGrid {
    double start = 0.0;
    double stop = 3.0;
    int points = 31;

    double at(int i) const;
    void check() const;
};

// Full description of one population-vs-time sweep. For the entangled-bath
// initial conditions the sweep runs over `phases`; for the excited-central
// condition it runs over `bath_sizes`.
struct ExperimentConfig {
    InitSpec init = InitSpec::two_pes(0.0);
    std::vector<double> phases = {0.0};
    std::vector<int> bath_sizes = {1, 2, 3, 4};
    TauGrid tau_grid;
    int steps = 1;
    Backend backend = Backend::Exact;
    std::size_t shots = 0;  // 0 = exact expectation (no sampling)
    NoiseParams noise;
    std::uint64_t seed = 12345;
    std::string topology_path;  // empty = built-in default

    void check() const;  // throws with the offending field name
};

struct ResultRow {
    double tau = 0.0;
    double phase = 0.0;
    int bath_size = 0;
    int steps = 0;
    Backend backend = Backend::Exact;
    double estimate = 0.0;
    double stderr_est = 0.0;
};

ExperimentConfig load_config(const std::string& path);
ExperimentConfig config_from_json_text(const std::string& text,
                                       const std::string& origin);

DeviceTopology topology_for(const ExperimentConfig& cfg);

// CNOT demands of the composed prep+evolution circuit, used to pick the
// error-minimizing qubit placement.
std::vector<RolePairDemand> required_pairs(const InitSpec& init, int steps);

QubitAssignment assignment_for(const InitSpec& init, int steps,
                               const DeviceTopology& topo);

// Composes prep + evolution for one sweep point and legalizes it against the
// device (SWAP expansion + CNOT direction rewrite). The result validates
// cleanly; a RewriteError propagates otherwise.
Circuit compose_circuit(const InitSpec& init, double tau, int steps,
                        const QubitAssignment& assignment,
                        const DeviceTopology& topo);

// Runs the full sweep; rows are ordered (curve parameter, tau).
std::vector<ResultRow> run(const ExperimentConfig& cfg);

// Closed-form reference table on the same grid (backend column
// "closed-form").
std::vector<ResultRow> closed_form_rows(const ExperimentConfig& cfg);

// Signed difference of estimated central populations between two phases at
// one tau, using the config's backend.
double contrast(const ExperimentConfig& cfg, double phase_a, double phase_b,
                double tau);

// CSV with header tau,phase,L,steps,backend,estimate,stderr; floats printed
// with shortest round-trip precision; LF line endings.
void write_csv(const std::vector<ResultRow>& rows, const std::string& path);
std::string csv_text(const std::vector<ResultRow>& rows);
std::vector<ResultRow> parse_csv(const std::string& text);

// Composes, legalizes and writes the circuit for one sweep point.
void export_circuit(const ExperimentConfig& cfg, double tau, double phase,
                    const std::string& path);

}  // namespace cspin
