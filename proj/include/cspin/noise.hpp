#pragma once

#include <cstdint>

#include "cspin/circuit.hpp"

namespace cspin {

// Stochastic device-imperfection model: a depolarizing Pauli channel after
// every gate plus asymmetric classical readout flips. Magnitudes are
// configuration, not device data.
struct NoiseParams {
    double p2 = 0.03;            // per two-qubit gate
    double p1 = 0.003;           // per single-qubit gate
    double readout_flip_0to1 = 0.03;
    double readout_flip_1to0 = 0.05;
    std::size_t trajectories = 256;

    void check() const;  // throws when probabilities leave [0, 0.5]

    static NoiseParams off() { return {0.0, 0.0, 0.0, 0.0, 1}; }
};

// Monte-Carlo trajectory sampler. Each trajectory replays the circuit,
// injecting a uniformly random non-identity Pauli on a gate's qubits with
// probability p2 (two-qubit gates) or p1 (single-qubit gates), samples its
// share of the shots, then applies per-bit readout flips. Trajectory t draws
// from an independent stream derived from (seed, t), so pooled counts do not
// depend on evaluation order.
MeasurementCounts noisy_run(const Circuit& circuit, const NoiseParams& noise,
                            std::size_t shots, std::uint64_t seed);

// Trajectory-averaged excited population of one qubit with no shot noise
// (the Pauli insertions are still stochastic). Returns (mean, standard error
// of the mean over trajectories).
struct TrajectoryEstimate {
    double mean = 0.0;
    double stderr_mean = 0.0;
};
TrajectoryEstimate noisy_population(const Circuit& circuit, int qubit,
                                    const NoiseParams& noise,
                                    std::uint64_t seed);

}  // namespace cspin
