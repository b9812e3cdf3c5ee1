#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

namespace cspin {

using Complex = std::complex<double>;

// Bit convention used everywhere in this project: qubit 0 is the least
// significant bit of a basis index, so |q1 q0> = |10> has index 2.

// Measurement record: basis index -> number of times observed.
struct MeasurementCounts {
    std::size_t shots = 0;
    std::map<std::size_t, std::size_t> counts;
};

// Dense statevector over n qubits (1..12), 2^n complex amplitudes.
class StateVector {
public:
    explicit StateVector(int n_qubits);
    static StateVector basis_state(int n_qubits, std::size_t basis_index);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }

    Complex& amp(std::size_t i) { return amps_[i]; }
    const Complex& amp(std::size_t i) const { return amps_[i]; }
    const std::vector<Complex>& amplitudes() const { return amps_; }

    double norm() const;

    // Applies a 2x2 unitary to the given qubit. Throws std::invalid_argument
    // if the matrix is not unitary within 1e-10 or the qubit is out of range.
    void apply_1q(const Eigen::Matrix2cd& gate, int qubit);

    // Applies a 4x4 unitary to a pair of distinct qubits. The local index of
    // the 4x4 is bit0 <-> q_first, bit1 <-> q_second.
    void apply_2q(const Eigen::Matrix4cd& gate, int q_first, int q_second);

    // Probability of measuring |1> on the given qubit.
    double excited_population(int qubit) const;

    Eigen::VectorXcd to_eigen() const;
    static StateVector from_eigen(const Eigen::VectorXcd& v);

private:
    int n_qubits_;
    std::vector<Complex> amps_;
};

// Draws `shots` i.i.d. samples from |amplitude|^2. Deterministic for a fixed
// seed (inverse-CDF sampling over an explicit cumulative table).
MeasurementCounts sample_counts(const StateVector& state, std::size_t shots,
                                std::uint64_t seed);

// Same, drawing from a caller-owned stream (lets callers interleave sampling
// with other draws while keeping one stream per unit of work).
class SplitMix64;
MeasurementCounts sample_counts_with(const StateVector& state,
                                     std::size_t shots, SplitMix64& rng);

}  // namespace cspin
