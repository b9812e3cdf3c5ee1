#include "cspin/unitary.hpp"

#include <stdexcept>

namespace cspin {

Eigen::MatrixXcd embed_1q(const Eigen::Matrix2cd& g, int qubit, int n_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    const std::size_t mask = std::size_t{1} << qubit;
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t col = 0; col < static_cast<std::size_t>(dim); ++col) {
        const int b = (col & mask) ? 1 : 0;
        for (int r = 0; r < 2; ++r) {
            const std::size_t row = (col & ~mask) | (r ? mask : 0u);
            full(static_cast<Eigen::Index>(row),
                 static_cast<Eigen::Index>(col)) = g(r, b);
        }
    }
    return full;
}

Eigen::MatrixXcd embed_2q(const Eigen::Matrix4cd& g, int q_first, int q_second,
                          int n_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    const std::size_t m0 = std::size_t{1} << q_first;
    const std::size_t m1 = std::size_t{1} << q_second;
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t col = 0; col < static_cast<std::size_t>(dim); ++col) {
        const int local = ((col & m0) ? 1 : 0) | ((col & m1) ? 2 : 0);
        const std::size_t base = col & ~(m0 | m1);
        for (int r = 0; r < 4; ++r) {
            const std::size_t row = base | ((r & 1) ? m0 : 0u) | ((r & 2) ? m1 : 0u);
            full(static_cast<Eigen::Index>(row),
                 static_cast<Eigen::Index>(col)) = g(r, local);
        }
    }
    return full;
}

Eigen::MatrixXcd unitary_of(const Circuit& c) {
    if (c.n_qubits < 1 || c.n_qubits > 6) {
        throw std::invalid_argument(
            "unitary_of supports 1..6 qubits, circuit has " +
            std::to_string(c.n_qubits));
    }
    const Eigen::Index dim = Eigen::Index{1} << c.n_qubits;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const Op& op : c.ops) {
        if (op.two_qubit()) {
            u = embed_2q(matrix_2q(op.gate), op.q0, op.q1, c.n_qubits) * u;
        } else {
            u = embed_1q(matrix_1q(op.gate), op.q0, c.n_qubits) * u;
        }
    }
    return u;
}

}  // namespace cspin
