#pragma once

#include <Eigen/Dense>

#include "cspin/circuit.hpp"

namespace cspin {

// Embeds a 2x2 gate acting on `qubit` into the full 2^n space.
Eigen::MatrixXcd embed_1q(const Eigen::Matrix2cd& g, int qubit, int n_qubits);

// Embeds a 4x4 gate whose local bit 0 addresses q_first and local bit 1
// addresses q_second.
Eigen::MatrixXcd embed_2q(const Eigen::Matrix4cd& g, int q_first, int q_second,
                          int n_qubits);

// Ordered product of all embedded gate matrices (first op rightmost).
// Supports up to 6 qubits; throws beyond that.
Eigen::MatrixXcd unitary_of(const Circuit& c);

}  // namespace cspin
