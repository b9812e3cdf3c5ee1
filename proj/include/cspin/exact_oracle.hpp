#pragma once

#include <Eigen/Dense>

#include "cspin/init_spec.hpp"
#include "cspin/state_vector.hpp"

namespace cspin {

// The rotating-frame spin Hamiltonian (1/2) sum_j (Xc Xj + Yc Yj) on the
// full 2^(L+1) space, with the coupling set to 1 so time is dimensionless.
// Central spin = qubit 0, bath spin j = qubit j.
struct SpinHamiltonian {
    int bath_size = 0;
    Eigen::MatrixXcd matrix;
};

SpinHamiltonian build_hamiltonian(int bath_size);  // 1 <= L <= 6

// Reusable eigendecomposition of a Hermitian matrix for repeated evolution.
class ExactEvolver {
public:
    explicit ExactEvolver(const SpinHamiltonian& h);

    StateVector evolve(const StateVector& state, double tau) const;
    Eigen::MatrixXcd propagator(double tau) const;  // exp(-i H tau)

private:
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXcd eigenvectors_;
};

// exp(-i H tau) |state> via Hermitian eigendecomposition.
StateVector exact_evolve(const StateVector& state, double tau,
                         const SpinHamiltonian& h);

// Central-spin excited population from the bright/dark decomposition of the
// single-excitation sector:
//   ExcitedCentral(L): cos^2(sqrt(L) tau)
//   TwoPes(phi):       cos^2(phi/2) sin^2(sqrt(2) tau)
//   ThreePes(chi):     (8/9) sin^2(chi/2) sin^2(sqrt(3) tau)
double population_closed_form(const InitSpec& spec, double tau);

// ||H state||; zero exactly when the state is a zero-energy eigenstate.
double dark_residual(const StateVector& state, const SpinHamiltonian& h);

// Builds the boson-truncated collective Hamiltonian on its (L+1)-dim
// one-excitation basis and the spin Hamiltonian restricted to the same
// sector (central spin playing the boson), and returns the max entrywise
// difference. The two constructions must coincide.
double dicke_equivalence(int bath_size);

// One-excitation-sector matrix of the spin Hamiltonian in the basis
// (bath1..bathL excited, central excited). Exposed for spectrum checks.
Eigen::MatrixXcd single_excitation_block(int bath_size);

// Same sector built from truncated boson raising/lowering operators.
Eigen::MatrixXcd boson_sector_matrix(int bath_size);

}  // namespace cspin
