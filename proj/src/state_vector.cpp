#include "cspin/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cspin/rng.hpp"

namespace cspin {

namespace {

constexpr double kUnitaryTol = 1e-10;

void check_unitary(const Eigen::MatrixXcd& g) {
    Eigen::MatrixXcd d = g.adjoint() * g -
                         Eigen::MatrixXcd::Identity(g.rows(), g.cols());
    if (d.cwiseAbs().maxCoeff() > kUnitaryTol) {
        throw std::invalid_argument("gate matrix is not unitary within 1e-10");
    }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 12) {
        throw std::invalid_argument("n_qubits must be in 1..12, got " +
                                    std::to_string(n_qubits));
    }
    amps_.assign(std::size_t{1} << n_qubits, Complex(0.0, 0.0));
    amps_[0] = Complex(1.0, 0.0);
}

StateVector StateVector::basis_state(int n_qubits, std::size_t basis_index) {
    StateVector sv(n_qubits);
    if (basis_index >= sv.dim()) {
        throw std::invalid_argument("basis index " +
                                    std::to_string(basis_index) +
                                    " out of range for " +
                                    std::to_string(n_qubits) + " qubits");
    }
    sv.amps_[0] = Complex(0.0, 0.0);
    sv.amps_[basis_index] = Complex(1.0, 0.0);
    return sv;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const Complex& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::apply_1q(const Eigen::Matrix2cd& gate, int qubit) {
    if (qubit < 0 || qubit >= n_qubits_) {
        throw std::invalid_argument("qubit index out of range");
    }
    check_unitary(gate);
    const std::size_t stride = std::size_t{1} << qubit;
    const std::size_t dim = amps_.size();
    const Complex g00 = gate(0, 0), g01 = gate(0, 1);
    const Complex g10 = gate(1, 0), g11 = gate(1, 1);
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex a0 = amps_[i];
            const Complex a1 = amps_[i + stride];
            amps_[i] = g00 * a0 + g01 * a1;
            amps_[i + stride] = g10 * a0 + g11 * a1;
        }
    }
}

void StateVector::apply_2q(const Eigen::Matrix4cd& gate, int q_first,
                           int q_second) {
    if (q_first < 0 || q_first >= n_qubits_ || q_second < 0 ||
        q_second >= n_qubits_) {
        throw std::invalid_argument("qubit index out of range");
    }
    if (q_first == q_second) {
        throw std::invalid_argument("two-qubit gate needs distinct qubits");
    }
    check_unitary(gate);
    const std::size_t s0 = std::size_t{1} << q_first;
    const std::size_t s1 = std::size_t{1} << q_second;
    const std::size_t dim = amps_.size();
    // Iterate over all indices with both addressed bits clear.
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & s0) || (i & s1)) continue;
        const std::size_t i00 = i;
        const std::size_t i01 = i | s0;   // local index 1: q_first set
        const std::size_t i10 = i | s1;   // local index 2: q_second set
        const std::size_t i11 = i | s0 | s1;
        const Complex a0 = amps_[i00], a1 = amps_[i01];
        const Complex a2 = amps_[i10], a3 = amps_[i11];
        amps_[i00] = gate(0, 0) * a0 + gate(0, 1) * a1 + gate(0, 2) * a2 + gate(0, 3) * a3;
        amps_[i01] = gate(1, 0) * a0 + gate(1, 1) * a1 + gate(1, 2) * a2 + gate(1, 3) * a3;
        amps_[i10] = gate(2, 0) * a0 + gate(2, 1) * a1 + gate(2, 2) * a2 + gate(2, 3) * a3;
        amps_[i11] = gate(3, 0) * a0 + gate(3, 1) * a1 + gate(3, 2) * a2 + gate(3, 3) * a3;
    }
}

double StateVector::excited_population(int qubit) const {
    if (qubit < 0 || qubit >= n_qubits_) {
        throw std::invalid_argument("qubit index out of range");
    }
    const std::size_t mask = std::size_t{1} << qubit;
    double p = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & mask) p += std::norm(amps_[i]);
    }
    return p;
}

Eigen::VectorXcd StateVector::to_eigen() const {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(amps_.size()));
    for (std::size_t i = 0; i < amps_.size(); ++i) v[static_cast<Eigen::Index>(i)] = amps_[i];
    return v;
}

StateVector StateVector::from_eigen(const Eigen::VectorXcd& v) {
    int n = 0;
    while ((Eigen::Index{1} << n) < v.size()) ++n;
    if ((Eigen::Index{1} << n) != v.size()) {
        throw std::invalid_argument("vector length is not a power of two");
    }
    StateVector sv(n);
    for (Eigen::Index i = 0; i < v.size(); ++i) sv.amps_[static_cast<std::size_t>(i)] = v[i];
    return sv;
}

MeasurementCounts sample_counts_with(const StateVector& state,
                                     std::size_t shots, SplitMix64& rng) {
    std::vector<double> cdf(state.dim());
    double acc = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        acc += std::norm(state.amp(i));
        cdf[i] = acc;
    }
    // Guard against roundoff leaving the last bin slightly below 1.
    cdf.back() = std::max(cdf.back(), 1.0);

    MeasurementCounts out;
    out.shots = shots;
    for (std::size_t s = 0; s < shots; ++s) {
        const double u = rng.uniform();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t idx =
            static_cast<std::size_t>(std::distance(cdf.begin(), it));
        ++out.counts[std::min(idx, state.dim() - 1)];
    }
    return out;
}

MeasurementCounts sample_counts(const StateVector& state, std::size_t shots,
                                std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");
    SplitMix64 rng(mix_seed(seed, 0));
    return sample_counts_with(state, shots, rng);
}

}  // namespace cspin
