#include "cspin/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "cspin/rng.hpp"

namespace cspin {

void NoiseParams::check() const {
    for (double p : {p2, p1, readout_flip_0to1, readout_flip_1to0}) {
        if (!(p >= 0.0 && p <= 0.5)) {
            throw std::invalid_argument(
                "noise probabilities must lie in [0, 0.5]");
        }
    }
    if (trajectories < 1) {
        throw std::invalid_argument("trajectories must be >= 1");
    }
}

namespace {

const Eigen::Matrix2cd& pauli_matrix(int which) {
    static const Eigen::Matrix2cd x = matrix_1q(Gate::x());
    static const Eigen::Matrix2cd y = matrix_1q(Gate::y());
    static const Eigen::Matrix2cd z = matrix_1q(Gate::z());
    switch (which) {
        case 1:
            return x;
        case 2:
            return y;
        default:
            return z;
    }
}

// Applies one noisy replay of the circuit to a fresh |0..0> state.
StateVector run_trajectory(const Circuit& c, const NoiseParams& noise,
                           SplitMix64& rng) {
    StateVector sv(c.n_qubits);
    for (const Op& op : c.ops) {
        if (op.two_qubit()) {
            sv.apply_2q(matrix_2q(op.gate), op.q0, op.q1);
            if (noise.p2 > 0.0 && rng.uniform() < noise.p2) {
                // Uniform over the 15 non-identity two-qubit Paulis,
                // encoded as a pair (pa, pb) != (I, I).
                const std::uint64_t k = rng.below(15) + 1;
                const int pa = static_cast<int>(k % 4);
                const int pb = static_cast<int>(k / 4);
                if (pa != 0) sv.apply_1q(pauli_matrix(pa), op.q0);
                if (pb != 0) sv.apply_1q(pauli_matrix(pb), op.q1);
            }
        } else {
            sv.apply_1q(matrix_1q(op.gate), op.q0);
            if (noise.p1 > 0.0 && rng.uniform() < noise.p1) {
                const int p = static_cast<int>(rng.below(3)) + 1;
                sv.apply_1q(pauli_matrix(p), op.q0);
            }
        }
    }
    return sv;
}

}  // namespace

MeasurementCounts noisy_run(const Circuit& circuit, const NoiseParams& noise,
                            std::size_t shots, std::uint64_t seed) {
    noise.check();
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");

    const std::size_t n_traj = std::min(noise.trajectories, shots);
    MeasurementCounts pooled;
    pooled.shots = shots;

    const bool flips = noise.readout_flip_0to1 > 0.0 ||
                       noise.readout_flip_1to0 > 0.0;

    for (std::size_t t = 0; t < n_traj; ++t) {
        SplitMix64 rng(mix_seed(seed, t));
        const StateVector sv = run_trajectory(circuit, noise, rng);
        // Spread shots as evenly as possible across trajectories.
        const std::size_t share =
            shots / n_traj + (t < shots % n_traj ? 1 : 0);
        if (share == 0) continue;
        const MeasurementCounts raw = sample_counts_with(sv, share, rng);
        for (const auto& [idx, count] : raw.counts) {
            if (!flips) {
                pooled.counts[idx] += count;
                continue;
            }
            for (std::size_t rep = 0; rep < count; ++rep) {
                std::size_t readout = idx;
                for (int q = 0; q < circuit.n_qubits; ++q) {
                    const std::size_t mask = std::size_t{1} << q;
                    const double u = rng.uniform();
                    const double p = (readout & mask)
                                         ? noise.readout_flip_1to0
                                         : noise.readout_flip_0to1;
                    if (u < p) readout ^= mask;
                }
                ++pooled.counts[readout];
            }
        }
    }
    return pooled;
}

TrajectoryEstimate noisy_population(const Circuit& circuit, int qubit,
                                    const NoiseParams& noise,
                                    std::uint64_t seed) {
    noise.check();
    double sum = 0.0;
    double sum_sq = 0.0;
    const std::size_t n = noise.trajectories;
    for (std::size_t t = 0; t < n; ++t) {
        SplitMix64 rng(mix_seed(seed, t));
        const StateVector sv = run_trajectory(circuit, noise, rng);
        const double p = sv.excited_population(qubit);
        sum += p;
        sum_sq += p * p;
    }
    TrajectoryEstimate est;
    est.mean = sum / static_cast<double>(n);
    if (n > 1) {
        const double var =
            (sum_sq - sum * sum / static_cast<double>(n)) /
            static_cast<double>(n - 1);
        est.stderr_mean = std::sqrt(std::max(0.0, var) / static_cast<double>(n));
    }
    return est;
}

}  // namespace cspin
