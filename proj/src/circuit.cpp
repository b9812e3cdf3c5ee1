#include "cspin/circuit.hpp"

#include <stdexcept>

namespace cspin {

std::string Role::name() const {
    switch (kind) {
        case Kind::Central:
            return "central";
        case Kind::Bath:
            return "bath" + std::to_string(index);
        case Kind::Ancilla:
            return "ancilla" + std::to_string(index);
    }
    return "?";
}

Circuit& Circuit::add(const Gate& g, int q) {
    if (g.is_two_qubit()) {
        throw std::invalid_argument("two-qubit gate added with one qubit");
    }
    if (q < 0 || q >= n_qubits) {
        throw std::invalid_argument("qubit index out of range");
    }
    ops.push_back({g, q, -1});
    return *this;
}

Circuit& Circuit::add(const Gate& g, int q0, int q1) {
    if (!g.is_two_qubit()) {
        throw std::invalid_argument("one-qubit gate added with two qubits");
    }
    if (q0 < 0 || q0 >= n_qubits || q1 < 0 || q1 >= n_qubits) {
        throw std::invalid_argument("qubit index out of range");
    }
    if (q0 == q1) {
        throw std::invalid_argument("two-qubit gate needs distinct qubits");
    }
    ops.push_back({g, q0, q1});
    return *this;
}

void Circuit::append(const Circuit& other) {
    if (other.n_qubits != n_qubits) {
        throw std::invalid_argument("appending circuit of different width");
    }
    ops.insert(ops.end(), other.ops.begin(), other.ops.end());
    for (const auto& [role, q] : other.role_map) role_map[role] = q;
}

int Circuit::count_cnots() const {
    int n = 0;
    for (const Op& op : ops) {
        if (op.gate.type == GateType::Cnot) ++n;
        if (op.gate.type == GateType::Swap) n += 3;
    }
    return n;
}

void apply_circuit(const Circuit& c, StateVector& state) {
    if (state.n_qubits() != c.n_qubits) {
        throw std::invalid_argument("state width does not match circuit");
    }
    for (const Op& op : c.ops) {
        if (op.two_qubit()) {
            state.apply_2q(matrix_2q(op.gate), op.q0, op.q1);
        } else {
            state.apply_1q(matrix_1q(op.gate), op.q0);
        }
    }
}

StateVector simulate(const Circuit& c) {
    StateVector sv(c.n_qubits);
    apply_circuit(c, sv);
    return sv;
}

}  // namespace cspin
