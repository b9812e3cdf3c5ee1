#pragma once

#include <vector>

#include <Eigen/Dense>

namespace cspin {

enum class GateType { H, X, Y, Z, Phase, U3, Rz, Rx, Cnot, Swap };

// A gate kind plus its parameters. Parameter use by type:
//   Phase(phi)            -> phi
//   U3(theta,phi,lambda)  -> theta, phi, lambda
//   Rz(tau)               -> theta
//   Rx(angle)             -> theta
// All other types are parameter-free.
struct Gate {
    GateType type = GateType::H;
    double theta = 0.0;
    double phi = 0.0;
    double lambda = 0.0;

    static Gate h() { return {GateType::H}; }
    static Gate x() { return {GateType::X}; }
    static Gate y() { return {GateType::Y}; }
    static Gate z() { return {GateType::Z}; }
    static Gate phase(double phi) { return {GateType::Phase, 0.0, phi, 0.0}; }
    static Gate u3(double theta, double phi, double lambda) {
        return {GateType::U3, theta, phi, lambda};
    }
    static Gate rz(double tau) { return {GateType::Rz, tau, 0.0, 0.0}; }
    static Gate rx(double angle) { return {GateType::Rx, angle, 0.0, 0.0}; }
    static Gate cnot() { return {GateType::Cnot}; }
    static Gate swap() { return {GateType::Swap}; }

    bool is_two_qubit() const {
        return type == GateType::Cnot || type == GateType::Swap;
    }
    bool operator==(const Gate&) const = default;
};

// Matrix of a single-qubit gate; throws for two-qubit types.
Eigen::Matrix2cd matrix_1q(const Gate& g);

// Matrix of a two-qubit gate in the local basis where bit 0 is the first
// operand qubit (the CNOT control) and bit 1 the second (the target).
Eigen::Matrix4cd matrix_2q(const Gate& g);

// 2x2 or 4x4 matrix depending on arity.
Eigen::MatrixXcd matrix_of(const Gate& g);

// The z-rotation exp(-i tau/2 sigma_z) written in the device-native form
// [H, U3(tau, -pi/2, pi/2), H]. The composed product equals Rz(tau) exactly.
std::vector<Gate> rz_synthesis(double tau);

enum class Axis { X, Y };

struct BasisChange {
    std::vector<Gate> pre;   // applied before the Rz core
    std::vector<Gate> post;  // applied after the Rz core
};

// Conjugating gates C with C^dag sigma_z C = sigma_axis, so that wrapping an
// Rz(tau) core turns it into exp(-i tau/2 sigma_axis). For X the pair is
// (H, H); for Y it is (Rx(pi/2), Rx(-pi/2)).
BasisChange basis_change_for_axis(Axis axis);

// Expresses a single-qubit gate as one exact U3 (or, for Rz, the H-U3-H
// triple of rz_synthesis). No global-phase slack is introduced.
std::vector<Gate> lower_1q_to_u3(const Gate& g);

// --- global-phase helpers -------------------------------------------------

// Max |a - phase*b| after aligning b's global phase to a on the first entry
// of a with magnitude above 1e-8. Works for vectors too (n x 1 matrices).
double max_diff_phase_aligned(const Eigen::MatrixXcd& a,
                              const Eigen::MatrixXcd& b);

}  // namespace cspin
