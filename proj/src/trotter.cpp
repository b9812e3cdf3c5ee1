#include "cspin/trotter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cspin/exact_oracle.hpp"
#include "cspin/unitary.hpp"

namespace cspin {

TrotterPlan TrotterPlan::make(double tau, int steps, int bath_size) {
    TrotterPlan p;
    p.tau = tau;
    p.steps = steps;
    p.pair_order.resize(static_cast<std::size_t>(bath_size));
    std::iota(p.pair_order.begin(), p.pair_order.end(), 1);
    p.check(bath_size);
    return p;
}

void TrotterPlan::check(int bath_size) const {
    if (steps < 1) throw std::invalid_argument("trotter steps must be >= 1");
    if (!std::isfinite(tau)) throw std::invalid_argument("tau must be finite");
    std::vector<int> sorted = pair_order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(static_cast<std::size_t>(bath_size));
    std::iota(expect.begin(), expect.end(), 1);
    if (sorted != expect) {
        throw std::invalid_argument(
            "pair_order must be a permutation of 1..bath_size");
    }
}

Circuit pair_circuit(double tau, const Role& central, const Role& bath_j,
                     const QubitAssignment& assignment) {
    const int qc = assignment.at(central);
    const int qj = assignment.at(bath_j);
    Circuit c(assignment.device_qubits);
    c.role_map[central] = qc;
    c.role_map[bath_j] = qj;

    auto add_core = [&](Axis axis) {
        const BasisChange bc = basis_change_for_axis(axis);
        for (const Gate& g : bc.pre) {
            c.add(g, qc);
            c.add(g, qj);
        }
        c.add(Gate::cnot(), qc, qj);
        for (const Gate& g : rz_synthesis(tau)) c.add(g, qj);
        c.add(Gate::cnot(), qc, qj);
        for (const Gate& g : bc.post) {
            c.add(g, qc);
            c.add(g, qj);
        }
    };
    // The two axis factors commute; putting yy first in time makes the
    // matrix product read xx * yy.
    add_core(Axis::Y);
    add_core(Axis::X);
    return c;
}

Circuit trotter_circuit(const TrotterPlan& plan,
                        const QubitAssignment& assignment) {
    plan.check(static_cast<int>(plan.pair_order.size()));
    Circuit c(assignment.device_qubits);
    const double dt = plan.tau / plan.steps;
    for (int s = 0; s < plan.steps; ++s) {
        for (int j : plan.pair_order) {
            c.append(pair_circuit(dt, Role::central(), Role::bath(j),
                                  assignment));
        }
    }
    if (c.ops.empty()) {
        // Degenerate bath-free plan still needs the role map.
        c.role_map[Role::central()] = assignment.at(Role::central());
    }
    return c;
}

Eigen::MatrixXcd trotter_product_matrix(const TrotterPlan& plan,
                                        int bath_size) {
    plan.check(bath_size);
    const int n = bath_size + 1;
    const Eigen::Index dim = Eigen::Index{1} << n;
    const double dt = plan.tau / plan.steps;

    // exp(-i dt/2 P) for a Hermitian involution P embeds as
    // cos(dt/2) I - i sin(dt/2) P; built here from the dense pair terms.
    auto pair_exponential = [&](int j, const Gate& pauli) {
        const Eigen::MatrixXcd p =
            embed_1q(matrix_1q(pauli), 0, n) * embed_1q(matrix_1q(pauli), j, n);
        const Complex i(0.0, 1.0);
        return std::cos(dt / 2.0) * Eigen::MatrixXcd::Identity(dim, dim) -
               i * std::sin(dt / 2.0) * p;
    };

    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (int s = 0; s < plan.steps; ++s) {
        for (int j : plan.pair_order) {
            const Eigen::MatrixXcd yy = pair_exponential(j, Gate::y());
            const Eigen::MatrixXcd xx = pair_exponential(j, Gate::x());
            u = (xx * yy) * u;
        }
    }
    return u;
}

double trotter_error(const TrotterPlan& plan, int bath_size) {
    if (bath_size < 1 || bath_size > 4) {
        throw std::invalid_argument("trotter_error supports bath sizes 1..4");
    }
    const Eigen::MatrixXcd u_trot =
        unitary_of(trotter_circuit(plan, logical_assignment(bath_size)));
    const Eigen::MatrixXcd u_exact =
        ExactEvolver(build_hamiltonian(bath_size)).propagator(plan.tau);

    // Align global phase on the first significant entry before taking the
    // spectral norm of the difference.
    Eigen::MatrixXcd aligned = u_trot;
    for (Eigen::Index r = 0; r < u_exact.rows(); ++r) {
        bool done = false;
        for (Eigen::Index c = 0; c < u_exact.cols(); ++c) {
            if (std::abs(u_exact(r, c)) > 1e-8 &&
                std::abs(u_trot(r, c)) > 1e-300) {
                Complex phase = u_exact(r, c) / u_trot(r, c);
                phase /= std::abs(phase);
                aligned = phase * u_trot;
                done = true;
                break;
            }
        }
        if (done) break;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(aligned - u_exact);
    return svd.singularValues()(0);
}

}  // namespace cspin
