#include "cspin/topology.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace cspin {

using nlohmann::json;

bool DeviceTopology::has_directed(int control, int target) const {
    for (const auto& e : edges) {
        if (e.control == control && e.target == target) return true;
    }
    return false;
}

bool DeviceTopology::has_coupling(int a, int b) const {
    return has_directed(a, b) || has_directed(b, a);
}

std::optional<double> DeviceTopology::coupling_error(int a, int b) const {
    std::optional<double> best;
    for (const auto& e : edges) {
        if ((e.control == a && e.target == b) ||
            (e.control == b && e.target == a)) {
            if (!best || e.error < *best) best = e.error;
        }
    }
    return best;
}

void DeviceTopology::validate_fields() const {
    if (n_qubits < 1) throw std::invalid_argument("topology: n_qubits < 1");
    for (const auto& e : edges) {
        if (e.control == e.target) {
            throw std::invalid_argument("topology: self-edge on qubit " +
                                        std::to_string(e.control));
        }
        if (e.control < 0 || e.control >= n_qubits || e.target < 0 ||
            e.target >= n_qubits) {
            throw std::invalid_argument("topology: edge endpoint out of range");
        }
        if (e.error < 0.0 || e.error > 1.0) {
            throw std::invalid_argument("topology: edge error outside [0,1]");
        }
    }
    if (!readout_error.empty() &&
        readout_error.size() != static_cast<std::size_t>(n_qubits)) {
        throw std::invalid_argument("topology: readout list length mismatch");
    }
    for (double r : readout_error) {
        if (r < 0.0 || r > 1.0) {
            throw std::invalid_argument("topology: readout error outside [0,1]");
        }
    }
}

DeviceTopology default_qx4_topology() {
    DeviceTopology t;
    t.name = "ibmqx4";
    t.n_qubits = 5;
    t.edges = {
        {1, 0, 0.0279}, {2, 0, 0.0245}, {2, 1, 0.0356},
        {3, 2, 0.0268}, {3, 4, 0.0317}, {2, 4, 0.0292},
    };
    t.readout_error = {0.051, 0.033, 0.042, 0.046, 0.059};
    return t;
}

std::string topology_to_json(const DeviceTopology& topo) {
    json j;
    j["name"] = topo.name;
    j["n_qubits"] = topo.n_qubits;
    j["edges"] = json::array();
    for (const auto& e : topo.edges) {
        j["edges"].push_back(
            {{"control", e.control}, {"target", e.target}, {"error", e.error}});
    }
    j["readout"] = topo.readout_error;
    return j.dump(2) + "\n";
}

DeviceTopology load_topology(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open topology file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("topology file " + path + ": " + e.what());
    }
    DeviceTopology t;
    if (!j.contains("n_qubits")) {
        throw std::runtime_error("topology file " + path +
                                 ": missing field 'n_qubits'");
    }
    t.name = j.value("name", "");
    t.n_qubits = j.at("n_qubits").get<int>();
    if (j.contains("edges")) {
        for (const auto& je : j.at("edges")) {
            CouplingEdge e;
            e.control = je.at("control").get<int>();
            e.target = je.at("target").get<int>();
            e.error = je.value("error", 0.0);
            t.edges.push_back(e);
        }
    }
    if (j.contains("readout")) {
        t.readout_error = j.at("readout").get<std::vector<double>>();
    }
    t.validate_fields();
    return t;
}

void save_topology(const DeviceTopology& topo, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write topology file: " + path);
    out << topology_to_json(topo);
}

}  // namespace cspin
