#include "catch_amalgamated.hpp"

#include <cmath>
#include <numbers>

#include "cspin/state_prep.hpp"
#include "cspin/topology.hpp"
#include "cspin/experiment.hpp"
#include "test_helpers.hpp"

using namespace cspin;
using std::numbers::pi;

namespace {

double max_amp_diff(const StateVector& a, const StateVector& b) {
    return max_diff_phase_aligned(a.to_eigen(), b.to_eigen());
}

// Assignment + prep on the default device, then the legalizing rewrite.
StateVector prepared_state(const InitSpec& spec, RoleMap* roles_out = nullptr) {
    const DeviceTopology topo = default_qx4_topology();
    const QubitAssignment a = assignment_for(spec, 1, topo);
    const Circuit prep = reverse_cnot_rewrite(expand_swaps(prep_circuit(spec, a)), topo);
    if (roles_out) *roles_out = prep.role_map;
    return simulate(prep);
}

}  // namespace

TEST_CASE("target state amplitudes") {
    SECTION("two-spin bath at phase 0 is the symmetric split") {
        const StateVector t = target_state(InitSpec::two_pes(0.0));
        const double r = 1.0 / std::sqrt(2.0);
        CHECK(std::abs(t.amp(2) - Complex(r, 0)) < 1e-15);  // bath1 up
        CHECK(std::abs(t.amp(4) - Complex(r, 0)) < 1e-15);  // bath2 up
        CHECK(std::abs(t.amp(0)) < 1e-15);
        CHECK(std::abs(t.amp(1)) < 1e-15);  // central unexcited
    }
    SECTION("two-spin bath at phase pi is the antisymmetric split") {
        const StateVector t = target_state(InitSpec::two_pes(pi));
        const double r = 1.0 / std::sqrt(2.0);
        CHECK(std::abs(t.amp(2) - Complex(-r, 0)) < 1e-15);
        CHECK(std::abs(t.amp(4) - Complex(r, 0)) < 1e-15);
    }
    SECTION("three-spin bath carries the heavy middle term") {
        for (double chi : {0.0, 0.9, pi}) {
            const StateVector t = target_state(InitSpec::three_pes(chi));
            const double r = 1.0 / std::sqrt(6.0);
            const Complex expect =
                -2.0 * r * std::exp(Complex(0, 1) * chi);
            CHECK(std::abs(t.amp(4) - expect) < 1e-15);  // bath2 up
            CHECK(std::abs(t.amp(2) - Complex(r, 0)) < 1e-15);
            CHECK(std::abs(t.amp(8) - Complex(r, 0)) < 1e-15);
            CHECK_THAT(t.norm(), Catch::Matchers::WithinAbs(1.0, 1e-15));
        }
    }
    SECTION("excited central spin is a basis state") {
        const StateVector t = target_state(InitSpec::excited_central(4));
        CHECK(std::abs(t.amp(1) - Complex(1, 0)) < 1e-15);
        CHECK_THAT(t.norm(), Catch::Matchers::WithinAbs(1.0, 1e-15));
    }
}

TEST_CASE("A-phi gate") {
    SECTION("phi=0 splits |0> as (1/sqrt 3, sqrt(2/3))") {
        const Eigen::Matrix2cd m = matrix_1q(a_phi_gate(0.0));
        CHECK(std::abs(m(0, 0) - Complex(1.0 / std::sqrt(3.0), 0)) < 1e-15);
        CHECK(std::abs(m(1, 0) - Complex(std::sqrt(2.0 / 3.0), 0)) < 1e-15);
    }
    SECTION("columns are normalized") {
        const Eigen::Matrix2cd m = matrix_1q(a_phi_gate(1.1));
        CHECK_THAT(m.col(0).norm(), Catch::Matchers::WithinAbs(1.0, 1e-14));
        CHECK_THAT(m.col(1).norm(), Catch::Matchers::WithinAbs(1.0, 1e-14));
    }
    SECTION("phi=pi flips the sign of the upper-right entry's partner") {
        const Eigen::Matrix2cd m = matrix_1q(a_phi_gate(pi));
        CHECK(std::abs(m(1, 0) - Complex(-std::sqrt(2.0 / 3.0), 0)) < 1e-14);
    }
}

TEST_CASE("preparation circuits hit the target amplitudes") {
    SECTION("excited central spin is a single X on the central qubit") {
        const QubitAssignment a =
            logical_assignment(2);
        const Circuit c = prep_circuit(InitSpec::excited_central(2), a);
        REQUIRE(c.ops.size() == 1);
        CHECK(c.ops[0].gate == Gate::x());
        CHECK(c.ops[0].q0 == a.at(Role::central()));
    }
    SECTION("two-spin bath over a 12-point phase grid") {
        for (int k = 0; k < 12; ++k) {
            const double phi = 2.0 * pi * k / 12.0;
            const InitSpec spec = InitSpec::two_pes(phi);
            RoleMap roles;
            const StateVector got = prepared_state(spec, &roles);
            const StateVector want =
                embed_logical(target_state(spec), roles, 5);
            CHECK(max_amp_diff(want, got) < 1e-12);
        }
    }
    SECTION("three-spin bath over a 12-point phase grid") {
        for (int k = 0; k < 12; ++k) {
            const double chi = 2.0 * pi * k / 12.0;
            const InitSpec spec = InitSpec::three_pes(chi);
            RoleMap roles;
            const StateVector got = prepared_state(spec, &roles);
            const StateVector want =
                embed_logical(target_state(spec), roles, 5);
            CHECK(max_amp_diff(want, got) < 1e-12);
        }
    }
}

TEST_CASE("three-spin prep transfers the hub state") {
    const DeviceTopology topo = default_qx4_topology();
    const InitSpec spec = InitSpec::three_pes(0.7);
    const QubitAssignment a = assignment_for(spec, 1, topo);
    // The hub hosts the central role, and the bath2 role sits on the SWAP
    // partner, not the hub.
    CHECK(a.at(Role::central()) == 2);
    CHECK(a.at(Role::bath(2)) != 2);

    const StateVector sv = prepared_state(spec);
    // Central qubit ends unexcited: every amplitude with its bit set is 0.
    CHECK(sv.excited_population(a.at(Role::central())) < 1e-24);
    // The transferred amplitude lives on the bath2 qubit.
    CHECK_THAT(sv.excited_population(a.at(Role::bath(2))),
               Catch::Matchers::WithinAbs(4.0 / 6.0, 1e-12));
}

TEST_CASE("prep circuits validate after the direction rewrite") {
    const DeviceTopology topo = default_qx4_topology();
    for (const InitSpec& spec :
         {InitSpec::two_pes(0.3), InitSpec::three_pes(1.2),
          InitSpec::excited_central(4)}) {
        const QubitAssignment a = assignment_for(spec, 1, topo);
        const Circuit fixed =
            reverse_cnot_rewrite(prep_circuit(spec, a), topo);
        CHECK(validate(fixed, topo).legal());
    }
}

TEST_CASE("bright weight drives the bath overlap") {
    // |<W|bath>|^2 computed numerically from the target amplitudes must
    // match the closed forms used by the dynamics oracle.
    SECTION("two-spin bath") {
        for (int k = 0; k <= 8; ++k) {
            const double phi = pi * k / 8.0;
            const StateVector t = target_state(InitSpec::two_pes(phi));
            const Complex overlap =
                (t.amp(2) + t.amp(4)) / std::sqrt(2.0);
            CHECK_THAT(std::norm(overlap),
                       Catch::Matchers::WithinAbs(
                           bright_weight(InitSpec::two_pes(phi)), 1e-12));
            CHECK_THAT(std::norm(overlap),
                       Catch::Matchers::WithinAbs(
                           std::pow(std::cos(phi / 2.0), 2), 1e-12));
        }
    }
    SECTION("three-spin bath") {
        for (int k = 0; k <= 8; ++k) {
            const double chi = pi * k / 8.0;
            const StateVector t = target_state(InitSpec::three_pes(chi));
            const Complex overlap =
                (t.amp(2) + t.amp(4) + t.amp(8)) / std::sqrt(3.0);
            CHECK_THAT(std::norm(overlap),
                       Catch::Matchers::WithinAbs(
                           bright_weight(InitSpec::three_pes(chi)), 1e-12));
            CHECK_THAT(std::norm(overlap),
                       Catch::Matchers::WithinAbs(
                           (8.0 / 9.0) * std::pow(std::sin(chi / 2.0), 2),
                           1e-12));
        }
    }
}

TEST_CASE("missing role raises a configuration error") {
    QubitAssignment a;
    a.device_qubits = 5;
    a.mapping[Role::central()] = 2;
    a.mapping[Role::bath(1)] = 0;
    CHECK_THROWS_AS(prep_circuit(InitSpec::two_pes(0.0), a), AssignmentError);
}
