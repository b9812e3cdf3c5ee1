#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cspin/circuit.hpp"
#include "cspin/topology.hpp"

namespace cspin {

// --- legality ---------------------------------------------------------------

struct Violation {
    enum class Kind { WrongDirection, NoCoupling };
    std::size_t op_index = 0;
    int q0 = 0;
    int q1 = 0;
    Kind kind = Kind::NoCoupling;
    std::string describe() const;
};

struct LegalityReport {
    std::vector<Violation> violations;
    bool legal() const { return violations.empty(); }
};

// Checks every CNOT against the directed edge set and every SWAP against the
// undirected coupling set.
LegalityReport validate(const Circuit& c, const DeviceTopology& topo);

struct RewriteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Replaces each wrong-direction CNOT(a->b) with H,H CNOT(b->a) H,H. The
// whole-circuit unitary is unchanged (exact identity). Throws RewriteError
// naming the pair if a CNOT touches an uncoupled pair. SWAPs on coupled
// pairs pass through untouched.
Circuit reverse_cnot_rewrite(const Circuit& c, const DeviceTopology& topo);

// Expands each SWAP into the canonical three CNOTs with alternating
// directions; reverse_cnot_rewrite then legalizes them against a device.
Circuit expand_swaps(const Circuit& c);

// --- qubit assignment -------------------------------------------------------

struct RolePairDemand {
    Role a;
    Role b;
    int cnot_count = 1;
};

struct QubitAssignment {
    RoleMap mapping;
    double total_cost = 0.0;
    int device_qubits = 0;

    int at(const Role& r) const;  // throws on missing role
    bool has(const Role& r) const { return mapping.count(r) > 0; }
};

struct AssignmentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Minimizes sum(cnot_count * coupling error) over all injective role->qubit
// maps (exhaustive; fine at device scale). Ties break toward the
// lexicographically smallest physical-index tuple in canonical role order
// (central, bath1, bath2, ..., ancillas). Throws AssignmentError naming the
// blocking pair when no feasible map exists.
QubitAssignment choose_assignment(const std::vector<RolePairDemand>& demands,
                                  const DeviceTopology& topo);

// Identity assignment on L+1 logical qubits: central -> 0, bath j -> j.
// Used for device-free circuit construction and oracle comparisons.
QubitAssignment logical_assignment(int bath_size);

}  // namespace cspin
