#pragma once

#include <vector>

#include "cspin/circuit.hpp"
#include "cspin/transpile.hpp"

namespace cspin {

// A digitized evolution plan: total dimensionless time tau, number of
// first-order product steps, and the order in which the central spin is
// coupled to each bath spin within a step.
struct TrotterPlan {
    double tau = 0.0;
    int steps = 1;
    std::vector<int> pair_order;  // permutation of 1..L

    static TrotterPlan make(double tau, int steps, int bath_size);
    void check(int bath_size) const;  // throws on malformed plans
};

// Circuit for exp(-i tau/2 XX) exp(-i tau/2 YY) on (central, bath_j): two
// CNOT-Rz-CNOT cores conjugated into the y and x bases. The two factors
// commute, so the pair gate equals the exact two-spin evolution.
Circuit pair_circuit(double tau, const Role& central, const Role& bath_j,
                     const QubitAssignment& assignment);

// Concatenates pair circuits over pair_order, `steps` times at tau/steps
// each: the first-order product approximation of the full evolution.
Circuit trotter_circuit(const TrotterPlan& plan,
                        const QubitAssignment& assignment);

// The same ordered product built directly from matrix exponentials of the
// embedded pair terms (no gates). Oracle side of the decomposition check.
Eigen::MatrixXcd trotter_product_matrix(const TrotterPlan& plan, int bath_size);

// Largest singular value of U_trotter - U_exact after global-phase
// alignment, with U_trotter taken from the gate-level circuit.
double trotter_error(const TrotterPlan& plan, int bath_size);

}  // namespace cspin
