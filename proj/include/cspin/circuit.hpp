#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "cspin/gates.hpp"
#include "cspin/state_vector.hpp"

namespace cspin {

// Logical role of a qubit in the modeled system. The central spin is always
// role index 0; bath spins are numbered from 1.
struct Role {
    enum class Kind { Central, Bath, Ancilla };
    Kind kind = Kind::Central;
    int index = 0;  // bath/ancilla number; 0 for central

    static Role central() { return {Kind::Central, 0}; }
    static Role bath(int j) { return {Kind::Bath, j}; }
    static Role ancilla(int j) { return {Kind::Ancilla, j}; }

    auto operator<=>(const Role&) const = default;
    std::string name() const;
};

using RoleMap = std::map<Role, int>;  // role -> physical qubit index

// One gate application. q1 is -1 for single-qubit gates. For CNOT, q0 is the
// control and q1 the target.
struct Op {
    Gate gate;
    int q0 = 0;
    int q1 = -1;

    bool two_qubit() const { return gate.is_two_qubit(); }
    bool operator==(const Op&) const = default;
};

struct Circuit {
    int n_qubits = 0;
    std::vector<Op> ops;
    RoleMap role_map;

    Circuit() = default;
    explicit Circuit(int n) : n_qubits(n) {}

    Circuit& add(const Gate& g, int q);
    Circuit& add(const Gate& g, int q0, int q1);
    void append(const Circuit& other);

    int count_cnots() const;  // SWAP counts as 3

    bool same_ops(const Circuit& other) const {
        return n_qubits == other.n_qubits && ops == other.ops;
    }
};

// Applies the circuit's gates in order to the state.
void apply_circuit(const Circuit& c, StateVector& state);

// Runs the circuit on |0...0>.
StateVector simulate(const Circuit& c);

}  // namespace cspin
