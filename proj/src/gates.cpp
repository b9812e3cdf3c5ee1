#include "cspin/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cspin {

using std::numbers::pi;

Eigen::Matrix2cd matrix_1q(const Gate& g) {
    using C = std::complex<double>;
    const C i(0.0, 1.0);
    Eigen::Matrix2cd m;
    switch (g.type) {
        case GateType::H: {
            const double s = 1.0 / std::sqrt(2.0);
            m << s, s, s, -s;
            return m;
        }
        case GateType::X:
            m << 0, 1, 1, 0;
            return m;
        case GateType::Y:
            m << C(0, 0), -i, i, C(0, 0);
            return m;
        case GateType::Z:
            m << 1, 0, 0, -1;
            return m;
        case GateType::Phase:
            m << 1, 0, 0, std::exp(i * g.phi);
            return m;
        case GateType::U3: {
            const double c = std::cos(g.theta / 2.0);
            const double s = std::sin(g.theta / 2.0);
            m << C(c, 0), -std::exp(i * g.lambda) * s,
                std::exp(i * g.phi) * s, std::exp(i * (g.lambda + g.phi)) * c;
            return m;
        }
        case GateType::Rz:
            m << std::exp(-i * (g.theta / 2.0)), 0, 0,
                std::exp(i * (g.theta / 2.0));
            return m;
        case GateType::Rx: {
            const double c = std::cos(g.theta / 2.0);
            const double s = std::sin(g.theta / 2.0);
            m << C(c, 0), -i * s, -i * s, C(c, 0);
            return m;
        }
        default:
            throw std::invalid_argument("matrix_1q called with two-qubit gate");
    }
}

Eigen::Matrix4cd matrix_2q(const Gate& g) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    switch (g.type) {
        case GateType::Cnot:
            // Local bit 0 = control, bit 1 = target.
            m(0, 0) = 1;  // |00> -> |00>
            m(3, 1) = 1;  // |01> (control set) -> |11>
            m(2, 2) = 1;  // |10> -> |10>
            m(1, 3) = 1;  // |11> -> |01>
            return m;
        case GateType::Swap:
            m(0, 0) = 1;
            m(2, 1) = 1;
            m(1, 2) = 1;
            m(3, 3) = 1;
            return m;
        default:
            throw std::invalid_argument("matrix_2q called with one-qubit gate");
    }
}

Eigen::MatrixXcd matrix_of(const Gate& g) {
    if (g.is_two_qubit()) return matrix_2q(g);
    return matrix_1q(g);
}

std::vector<Gate> rz_synthesis(double tau) {
    return {Gate::h(), Gate::u3(tau, -pi / 2.0, pi / 2.0), Gate::h()};
}

BasisChange basis_change_for_axis(Axis axis) {
    switch (axis) {
        case Axis::X:
            return {{Gate::h()}, {Gate::h()}};
        case Axis::Y:
            return {{Gate::rx(pi / 2.0)}, {Gate::rx(-pi / 2.0)}};
    }
    throw std::invalid_argument("unknown axis");
}

std::vector<Gate> lower_1q_to_u3(const Gate& g) {
    switch (g.type) {
        case GateType::H:
            return {Gate::u3(pi / 2.0, 0.0, pi)};
        case GateType::X:
            return {Gate::u3(pi, 0.0, pi)};
        case GateType::Y:
            return {Gate::u3(pi, pi / 2.0, pi / 2.0)};
        case GateType::Z:
            return {Gate::u3(0.0, 0.0, pi)};
        case GateType::Phase:
            return {Gate::u3(0.0, 0.0, g.phi)};
        case GateType::Rx:
            return {Gate::u3(g.theta, -pi / 2.0, pi / 2.0)};
        case GateType::Rz:
            // H U3(tau,-pi/2,pi/2) H equals Rz(tau) exactly, so recurse on
            // the H's to stay within {U3}.
            return {Gate::u3(pi / 2.0, 0.0, pi),
                    Gate::u3(g.theta, -pi / 2.0, pi / 2.0),
                    Gate::u3(pi / 2.0, 0.0, pi)};
        case GateType::U3:
            return {g};
        default:
            throw std::invalid_argument("lower_1q_to_u3: two-qubit gate");
    }
}

double max_diff_phase_aligned(const Eigen::MatrixXcd& a,
                              const Eigen::MatrixXcd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("shape mismatch in phase-aligned compare");
    }
    std::complex<double> phase(1.0, 0.0);
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        bool found = false;
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            if (std::abs(a(r, c)) > 1e-8) {
                if (std::abs(b(r, c)) < 1e-300) return 1.0;  // cannot align
                phase = a(r, c) / b(r, c);
                phase /= std::abs(phase);
                found = true;
                break;
            }
        }
        if (found) break;
    }
    return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace cspin
