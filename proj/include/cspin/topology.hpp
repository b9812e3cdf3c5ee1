#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cspin {

struct CouplingEdge {
    int control = 0;
    int target = 0;
    double error = 0.0;  // two-qubit gate error probability for this edge
};

// Directed, error-weighted coupling graph of a device. Directions are data:
// algorithms never assume a particular orientation and instead route CNOTs
// through the reversal rewrite.
struct DeviceTopology {
    std::string name;
    int n_qubits = 0;
    std::vector<CouplingEdge> edges;
    std::vector<double> readout_error;  // per qubit

    bool has_directed(int control, int target) const;
    bool has_coupling(int a, int b) const;  // either direction
    // Error weight of the (undirected) coupling, if present.
    std::optional<double> coupling_error(int a, int b) const;

    void validate_fields() const;  // throws on malformed data
};

// The five-qubit star-plus-two-chords layout used throughout: hub qubit 2
// coupled to 0, 1, 3, 4, plus chords 0-1 and 3-4. Edge directions and error
// weights here are a declared convention shipped with the project.
DeviceTopology default_qx4_topology();

DeviceTopology load_topology(const std::string& path);
std::string topology_to_json(const DeviceTopology& topo);
void save_topology(const DeviceTopology& topo, const std::string& path);

}  // namespace cspin
