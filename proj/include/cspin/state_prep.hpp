#pragma once

#include "cspin/circuit.hpp"
#include "cspin/init_spec.hpp"
#include "cspin/transpile.hpp"

namespace cspin {

// Analytic target amplitudes of the initial condition, laid out logically:
// qubit 0 is the central spin, qubit j (1..L) is bath spin j. |1> = excited.
//
//   TwoPes(phi):   (|bath2 up> + e^{i phi} |bath1 up>) / sqrt(2), central |0>
//   ThreePes(chi): (|bath3 up> - 2 e^{i chi} |bath2 up> + |bath1 up>) / sqrt(6)
//   ExcitedCentral(L): central |1>, bath |0...0>
StateVector target_state(const InitSpec& spec);

// Preparation gate splitting |0> into amplitudes (1/sqrt(3), sqrt(2/3)) with
// a tunable phase on the excited branch: U3(2 arccos(1/sqrt 3), phi, 0).
Gate a_phi_gate(double phi);

// Builds the state-preparation circuit on physical qubits. Applying it to
// |0...0> reproduces target_state under the role map exactly. The three-spin
// prep entangles the hub with two periphery qubits and then SWAPs the hub's
// bath state onto the bath2 qubit, freeing the hub for the central role.
Circuit prep_circuit(const InitSpec& spec, const QubitAssignment& assignment);

// Places the logical target amplitudes onto physical qubit positions; all
// unassigned device qubits stay |0>. Used to check prep circuits.
StateVector embed_logical(const StateVector& logical, const RoleMap& roles,
                          int device_qubits);

// Squared overlap of the bath part with the equal-amplitude single-excitation
// combination: cos^2(phi/2) for TwoPes, (8/9) sin^2(chi/2) for ThreePes and
// 0 for ExcitedCentral (bath starts empty). This weight drives the dynamics.
double bright_weight(const InitSpec& spec);

}  // namespace cspin
