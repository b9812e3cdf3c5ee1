#include "catch_amalgamated.hpp"

#include <cmath>
#include <numbers>

#include "cspin/gates.hpp"
#include "cspin/rng.hpp"
#include "test_helpers.hpp"

using namespace cspin;
using std::numbers::pi;

namespace {

Eigen::Matrix2cd analytic_rz(double tau) {
    const Complex i(0.0, 1.0);
    Eigen::Matrix2cd m;
    m << std::exp(-i * tau / 2.0), 0, 0, std::exp(i * tau / 2.0);
    return m;
}

Eigen::Matrix2cd analytic_axis_rotation(Axis axis, double tau) {
    const Complex i(0.0, 1.0);
    const double c = std::cos(tau / 2.0), s = std::sin(tau / 2.0);
    Eigen::Matrix2cd m;
    if (axis == Axis::X) {
        m << Complex(c, 0), -i * s, -i * s, Complex(c, 0);
    } else {
        m << Complex(c, 0), Complex(-s, 0), Complex(s, 0), Complex(c, 0);
    }
    return m;
}

Eigen::Matrix2cd product_of(const std::vector<Gate>& gates) {
    Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
    for (const Gate& g : gates) u = matrix_1q(g) * u;
    return u;
}

}  // namespace

TEST_CASE("named gate matrices") {
    SECTION("B = U3(pi/4,0,0) is the pi/8 rotation") {
        const Eigen::Matrix2cd b = matrix_1q(Gate::u3(pi / 4.0, 0, 0));
        CHECK(std::abs(b(0, 0) - Complex(std::cos(pi / 8.0), 0)) < 1e-15);
        CHECK(std::abs(b(0, 1) - Complex(-std::sin(pi / 8.0), 0)) < 1e-15);
        CHECK(std::abs(b(1, 0) - Complex(std::sin(pi / 8.0), 0)) < 1e-15);
        CHECK(std::abs(b(1, 1) - Complex(std::cos(pi / 8.0), 0)) < 1e-15);
    }
    SECTION("U3(pi,0,pi) equals X up to global phase") {
        CHECK(max_diff_phase_aligned(matrix_1q(Gate::x()),
                                     matrix_1q(Gate::u3(pi, 0, pi))) < 1e-15);
    }
    SECTION("Phase(pi) equals Z") {
        CHECK((matrix_1q(Gate::phase(pi)) - matrix_1q(Gate::z()))
                  .cwiseAbs()
                  .maxCoeff() < 1e-15);
    }
    SECTION("U3(theta,-pi/2,pi/2) equals Rx(theta) entrywise") {
        for (double theta : {0.0, 0.3, 1.0, -2.5, pi}) {
            CHECK((matrix_1q(Gate::u3(theta, -pi / 2.0, pi / 2.0)) -
                   matrix_1q(Gate::rx(theta)))
                      .cwiseAbs()
                      .maxCoeff() < 1e-15);
        }
    }
}

TEST_CASE("every gate matrix is unitary") {
    SplitMix64 rng(31337);
    std::vector<Gate> gates = {Gate::h(), Gate::x(), Gate::y(), Gate::z(),
                               Gate::cnot(), Gate::swap()};
    for (int k = 0; k < 30; ++k) gates.push_back(test_helpers::random_1q_gate(rng));
    for (const Gate& g : gates) {
        const Eigen::MatrixXcd m = matrix_of(g);
        const Eigen::MatrixXcd d =
            m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols());
        CHECK(d.cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("rz synthesis") {
    SECTION("returns the H / U3 / H triple") {
        const std::vector<Gate> seq = rz_synthesis(0.3);
        REQUIRE(seq.size() == 3);
        CHECK(seq[0] == Gate::h());
        CHECK(seq[1] == Gate::u3(0.3, -pi / 2.0, pi / 2.0));
        CHECK(seq[2] == Gate::h());
    }
    SECTION("tau=0 composes to the identity up to phase") {
        CHECK(max_diff_phase_aligned(Eigen::Matrix2cd::Identity(),
                                     product_of(rz_synthesis(0.0))) < 1e-15);
    }
    SECTION("tau=pi composes to Z up to phase") {
        CHECK(max_diff_phase_aligned(matrix_1q(Gate::z()),
                                     product_of(rz_synthesis(pi))) < 1e-14);
    }
    SECTION("tau=0.3 matches the analytic rotation") {
        CHECK(max_diff_phase_aligned(analytic_rz(0.3),
                                     product_of(rz_synthesis(0.3))) < 1e-12);
    }
    SECTION("100 random angles") {
        SplitMix64 rng(4242);
        for (int k = 0; k < 100; ++k) {
            const double tau = (2.0 * rng.uniform() - 1.0) * 2.0 * pi;
            CHECK(max_diff_phase_aligned(analytic_rz(tau),
                                         product_of(rz_synthesis(tau))) <
                  1e-12);
        }
    }
}

TEST_CASE("axis basis changes") {
    SECTION("x pair is (H, H)") {
        const BasisChange bc = basis_change_for_axis(Axis::X);
        REQUIRE(bc.pre.size() == 1);
        REQUIRE(bc.post.size() == 1);
        CHECK(bc.pre[0] == Gate::h());
        CHECK(bc.post[0] == Gate::h());
    }
    SECTION("conjugated Rz equals the axis rotation") {
        for (Axis axis : {Axis::X, Axis::Y}) {
            for (double tau : {0.0, 0.7, -1.3, 2.9}) {
                const BasisChange bc = basis_change_for_axis(axis);
                Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
                for (const Gate& g : bc.pre) u = matrix_1q(g) * u;
                u = analytic_rz(tau) * u;
                for (const Gate& g : bc.post) u = matrix_1q(g) * u;
                CHECK(max_diff_phase_aligned(analytic_axis_rotation(axis, tau),
                                             u) < 1e-12);
            }
        }
    }
}

TEST_CASE("single-qubit lowering to U3 is exact") {
    SplitMix64 rng(5150);
    std::vector<Gate> gates = {Gate::h(), Gate::x(), Gate::y(), Gate::z()};
    for (int k = 0; k < 20; ++k) gates.push_back(test_helpers::random_1q_gate(rng));
    for (const Gate& g : gates) {
        Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
        for (const Gate& l : lower_1q_to_u3(g)) {
            CHECK(l.type == GateType::U3);
            u = matrix_1q(l) * u;
        }
        // Entrywise equality: the chosen forms carry no global-phase slack.
        CHECK((u - matrix_1q(g)).cwiseAbs().maxCoeff() < 1e-12);
    }
}
