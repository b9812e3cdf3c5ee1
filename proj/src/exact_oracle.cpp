#include "cspin/exact_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace cspin {

SpinHamiltonian build_hamiltonian(int bath_size) {
    if (bath_size < 1 || bath_size > 6) {
        throw std::invalid_argument("bath size must be in 1..6, got " +
                                    std::to_string(bath_size));
    }
    const int n = bath_size + 1;
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    // (1/2)(XX + YY) on (central, j) hops the excitation between the two
    // qubits: it connects indices that differ exactly by those two bits.
    for (int j = 1; j <= bath_size; ++j) {
        const std::size_t mc = 1u;
        const std::size_t mj = std::size_t{1} << j;
        for (std::size_t idx = 0; idx < static_cast<std::size_t>(dim); ++idx) {
            const bool c_up = idx & mc;
            const bool j_up = idx & mj;
            if (c_up == j_up) continue;
            const std::size_t flipped = idx ^ (mc | mj);
            h(static_cast<Eigen::Index>(flipped),
              static_cast<Eigen::Index>(idx)) += 1.0;
        }
    }
    return {bath_size, std::move(h)};
}

ExactEvolver::ExactEvolver(const SpinHamiltonian& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

Eigen::MatrixXcd ExactEvolver::propagator(double tau) const {
    const Complex i(0.0, 1.0);
    Eigen::VectorXcd phases(eigenvalues_.size());
    for (Eigen::Index k = 0; k < eigenvalues_.size(); ++k) {
        phases[k] = std::exp(-i * eigenvalues_[k] * tau);
    }
    return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

StateVector ExactEvolver::evolve(const StateVector& state, double tau) const {
    if (static_cast<Eigen::Index>(state.dim()) != eigenvalues_.size()) {
        throw std::invalid_argument("state dimension does not match H");
    }
    const Complex i(0.0, 1.0);
    Eigen::VectorXcd v = eigenvectors_.adjoint() * state.to_eigen();
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        v[k] *= std::exp(-i * eigenvalues_[k] * tau);
    }
    return StateVector::from_eigen(eigenvectors_ * v);
}

StateVector exact_evolve(const StateVector& state, double tau,
                         const SpinHamiltonian& h) {
    return ExactEvolver(h).evolve(state, tau);
}

double population_closed_form(const InitSpec& spec, double tau) {
    switch (spec.kind) {
        case InitSpec::Kind::ExcitedCentral: {
            const double c = std::cos(std::sqrt(spec.bath_size()) * tau);
            return c * c;
        }
        case InitSpec::Kind::TwoPes: {
            const double s = std::sin(std::sqrt(2.0) * tau);
            const double w = std::cos(spec.phase / 2.0);
            return w * w * s * s;
        }
        case InitSpec::Kind::ThreePes: {
            const double s = std::sin(std::sqrt(3.0) * tau);
            const double w = std::sin(spec.phase / 2.0);
            return (8.0 / 9.0) * w * w * s * s;
        }
    }
    return 0.0;
}

double dark_residual(const StateVector& state, const SpinHamiltonian& h) {
    if (static_cast<Eigen::Index>(state.dim()) != h.matrix.rows()) {
        throw std::invalid_argument("state dimension does not match H");
    }
    return (h.matrix * state.to_eigen()).norm();
}

Eigen::MatrixXcd single_excitation_block(int bath_size) {
    const SpinHamiltonian h = build_hamiltonian(bath_size);
    // Sector basis: bath j excited (index 2^j), then central excited (1).
    std::vector<std::size_t> basis;
    for (int j = 1; j <= bath_size; ++j) basis.push_back(std::size_t{1} << j);
    basis.push_back(1);
    const Eigen::Index d = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXcd block(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            block(r, c) = h.matrix(
                static_cast<Eigen::Index>(basis[static_cast<std::size_t>(r)]),
                static_cast<Eigen::Index>(basis[static_cast<std::size_t>(c)]));
        }
    }
    return block;
}

Eigen::MatrixXcd boson_sector_matrix(int bath_size) {
    if (bath_size < 1 || bath_size > 6) {
        throw std::invalid_argument("bath size must be in 1..6");
    }
    const int L = bath_size;
    // Full space: boson occupation (0 or 1) tensor L spins; build
    // g sum_j (a^dag sigma_j^- + a sigma_j^+) from the truncated ladder
    // operators, then cut out the one-excitation block.
    const Eigen::Index spin_dim = Eigen::Index{1} << L;
    const Eigen::Index dim = 2 * spin_dim;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    // Index layout: idx = nb * spin_dim + s, spin j = bit j of s.
    for (int j = 0; j < L; ++j) {
        const std::size_t mj = std::size_t{1} << j;
        for (std::size_t s = 0; s < static_cast<std::size_t>(spin_dim); ++s) {
            if (s & mj) {
                // a^dag sigma_j^- : (nb=0, j up) -> (nb=1, j down)
                h(static_cast<Eigen::Index>(spin_dim + (s ^ mj)),
                  static_cast<Eigen::Index>(s)) += 1.0;
            } else {
                // a sigma_j^+ : (nb=1, j down) -> (nb=0, j up)
                h(static_cast<Eigen::Index>(s ^ mj),
                  static_cast<Eigen::Index>(spin_dim + s)) += 1.0;
            }
        }
    }
    // One-excitation basis: (0 bosons, spin j up) for j=1..L, then
    // (1 boson, all spins down) — matching single_excitation_block's order.
    std::vector<Eigen::Index> basis;
    for (int j = 0; j < L; ++j) basis.push_back(Eigen::Index{1} << j);
    basis.push_back(spin_dim);
    const Eigen::Index d = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXcd block(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            block(r, c) = h(basis[static_cast<std::size_t>(r)],
                            basis[static_cast<std::size_t>(c)]);
        }
    }
    return block;
}

double dicke_equivalence(int bath_size) {
    const Eigen::MatrixXcd a = boson_sector_matrix(bath_size);
    const Eigen::MatrixXcd b = single_excitation_block(bath_size);
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace cspin
