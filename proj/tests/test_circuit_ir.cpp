#include "catch_amalgamated.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

#include "cspin/topology.hpp"
#include "cspin/transpile.hpp"
#include "cspin/unitary.hpp"
#include "test_helpers.hpp"

using namespace cspin;
using std::numbers::pi;
namespace th = test_helpers;

namespace {

// Independent brute-force minimum assignment cost: enumerate ordered
// k-subsets via next_permutation over a selection mask.
double brute_force_min_cost(const std::vector<RolePairDemand>& demands,
                            const DeviceTopology& topo) {
    std::set<Role> role_set;
    for (const auto& d : demands) {
        role_set.insert(d.a);
        role_set.insert(d.b);
    }
    std::vector<Role> roles(role_set.begin(), role_set.end());
    const int k = static_cast<int>(roles.size());
    std::vector<int> qubits(static_cast<std::size_t>(topo.n_qubits));
    std::iota(qubits.begin(), qubits.end(), 0);

    double best = std::numeric_limits<double>::infinity();
    std::vector<int> idx(qubits.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end());
    do {
        std::map<Role, int> m;
        for (int i = 0; i < k; ++i) m[roles[static_cast<std::size_t>(i)]] = idx[static_cast<std::size_t>(i)];
        double cost = 0.0;
        bool ok = true;
        for (const auto& d : demands) {
            const auto err = topo.coupling_error(m[d.a], m[d.b]);
            if (!err) {
                ok = false;
                break;
            }
            cost += d.cnot_count * *err;
        }
        if (ok) best = std::min(best, cost);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return best;
}

}  // namespace

TEST_CASE("default topology shape") {
    const DeviceTopology t = default_qx4_topology();
    CHECK(t.n_qubits == 5);
    CHECK(t.edges.size() == 6);
    // Hub coupled to everyone, chords 0-1 and 3-4, no 0-4 coupling.
    for (int q : {0, 1, 3, 4}) CHECK(t.has_coupling(2, q));
    CHECK(t.has_coupling(0, 1));
    CHECK(t.has_coupling(3, 4));
    CHECK_FALSE(t.has_coupling(0, 4));
    CHECK_FALSE(t.has_coupling(0, 3));
    CHECK_FALSE(t.has_coupling(1, 3));
    CHECK_FALSE(t.has_coupling(1, 4));
    t.validate_fields();
}

TEST_CASE("topology file round trip and the shipped default") {
    const DeviceTopology t = default_qx4_topology();
    const std::string tmp = "topo_roundtrip_test.json";
    save_topology(t, tmp);
    const DeviceTopology back = load_topology(tmp);
    std::filesystem::remove(tmp);
    CHECK(back.n_qubits == t.n_qubits);
    REQUIRE(back.edges.size() == t.edges.size());
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        CHECK(back.edges[i].control == t.edges[i].control);
        CHECK(back.edges[i].target == t.edges[i].target);
        CHECK(back.edges[i].error == t.edges[i].error);
    }
    CHECK(back.readout_error == t.readout_error);

    // The repository's data file must stay in sync with the built-in.
    const DeviceTopology shipped = load_topology(
        std::string(CSPIN_SOURCE_DIR) + "/data/topologies/ibmqx4.json");
    CHECK(shipped.n_qubits == t.n_qubits);
    REQUIRE(shipped.edges.size() == t.edges.size());
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        CHECK(shipped.edges[i].control == t.edges[i].control);
        CHECK(shipped.edges[i].target == t.edges[i].target);
        CHECK(shipped.edges[i].error == t.edges[i].error);
    }
}

TEST_CASE("legality validation") {
    const DeviceTopology topo = default_qx4_topology();

    SECTION("empty circuit is legal") {
        const Circuit c(5);
        CHECK(validate(c, topo).legal());
    }
    SECTION("wrong-direction CNOT is flagged as such") {
        Circuit c(5);
        c.add(Gate::cnot(), 2, 3);  // device edge is 3 -> 2
        const LegalityReport r = validate(c, topo);
        REQUIRE(r.violations.size() == 1);
        CHECK(r.violations[0].kind == Violation::Kind::WrongDirection);
    }
    SECTION("uncoupled pair is flagged as no-coupling") {
        Circuit c(5);
        c.add(Gate::cnot(), 0, 4);
        const LegalityReport r = validate(c, topo);
        REQUIRE(r.violations.size() == 1);
        CHECK(r.violations[0].kind == Violation::Kind::NoCoupling);
    }
    SECTION("legal CNOT and coupled SWAP pass") {
        Circuit c(5);
        c.add(Gate::cnot(), 3, 2);
        c.add(Gate::swap(), 2, 3);
        CHECK(validate(c, topo).legal());
    }
}

TEST_CASE("reverse CNOT rewrite") {
    const DeviceTopology topo = default_qx4_topology();

    SECTION("single wrong-direction CNOT becomes the 5-op identity") {
        Circuit c(5);
        c.add(Gate::cnot(), 2, 3);
        const Circuit fixed = reverse_cnot_rewrite(c, topo);
        CHECK(fixed.ops.size() == 5);
        CHECK(validate(fixed, topo).legal());
        CHECK(max_diff_phase_aligned(unitary_of(c), unitary_of(fixed)) <
              1e-12);
    }
    SECTION("legal circuit is unchanged") {
        Circuit c(5);
        c.add(Gate::cnot(), 3, 2);
        c.add(Gate::h(), 0);
        const Circuit fixed = reverse_cnot_rewrite(c, topo);
        CHECK(fixed.same_ops(c));
    }
    SECTION("uncoupled pair raises a rewrite error naming the pair") {
        Circuit c(5);
        c.add(Gate::cnot(), 0, 4);
        CHECK_THROWS_WITH(reverse_cnot_rewrite(c, topo),
                          Catch::Matchers::ContainsSubstring("(0,4)"));
    }
    SECTION("unitary preserved on 100 random circuits") {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            // Random 3-qubit device with every pair coupled in one direction.
            SplitMix64 rng(seed * 77 + 5);
            DeviceTopology t;
            t.n_qubits = 3;
            for (int a = 0; a < 3; ++a) {
                for (int b = a + 1; b < 3; ++b) {
                    if (rng.uniform() < 0.5) {
                        t.edges.push_back({a, b, 0.01});
                    } else {
                        t.edges.push_back({b, a, 0.01});
                    }
                }
            }
            const Circuit c = th::random_circuit(3, 12, 300 + seed);
            const Circuit fixed = reverse_cnot_rewrite(c, t);
            CHECK(validate(fixed, t).legal());
            CHECK(max_diff_phase_aligned(unitary_of(c), unitary_of(fixed)) <
                  1e-12);
        }
    }
}

TEST_CASE("swap expansion") {
    Circuit c(2);
    c.add(Gate::swap(), 0, 1);
    const Circuit expanded = expand_swaps(c);
    REQUIRE(expanded.ops.size() == 3);
    CHECK(expanded.ops[0].q0 == 0);
    CHECK(expanded.ops[1].q0 == 1);  // middle CNOT reversed
    CHECK(expanded.ops[2].q0 == 0);
    CHECK((unitary_of(expanded) - unitary_of(c)).cwiseAbs().maxCoeff() <
          1e-14);
}

TEST_CASE("assignment choice") {
    const DeviceTopology topo = default_qx4_topology();
    const Role c = Role::central();

    SECTION("uniform weights tie-break lexicographically") {
        DeviceTopology uniform = topo;
        for (auto& e : uniform.edges) e.error = 0.02;
        const std::vector<RolePairDemand> demands = {
            {c, Role::bath(1), 4}, {c, Role::bath(2), 4}};
        const QubitAssignment a = choose_assignment(demands, uniform);
        // Roles in canonical order (central, bath1, bath2): the smallest
        // feasible tuple is central=0 with baths on 1 and 2.
        CHECK(a.at(c) == 0);
        CHECK(a.at(Role::bath(1)) == 1);
        CHECK(a.at(Role::bath(2)) == 2);
    }
    SECTION("doubled edge error is avoided") {
        DeviceTopology t = topo;
        for (auto& e : t.edges) e.error = 0.02;
        // Make the 0-1 chord twice as expensive; the entangling pair should
        // land on the 3-4 chord instead.
        for (auto& e : t.edges) {
            if ((e.control == 1 && e.target == 0)) e.error = 0.04;
        }
        const std::vector<RolePairDemand> demands = {
            {Role::bath(1), Role::bath(2), 4},
            {c, Role::bath(1), 1},
            {c, Role::bath(2), 1}};
        const QubitAssignment a = choose_assignment(demands, t);
        const int b1 = a.at(Role::bath(1)), b2 = a.at(Role::bath(2));
        CHECK(((b1 == 3 && b2 == 4) || (b1 == 4 && b2 == 3)));
    }
    SECTION("three couplings to one role force the hub") {
        const std::vector<RolePairDemand> demands = {
            {c, Role::bath(1), 4},
            {c, Role::bath(2), 4},
            {c, Role::bath(3), 4}};
        const QubitAssignment a = choose_assignment(demands, topo);
        CHECK(a.at(c) == 2);
    }
    SECTION("cost matches an independent exhaustive enumeration") {
        const std::vector<std::vector<RolePairDemand>> cases = {
            {{c, Role::bath(1), 4}, {c, Role::bath(2), 4},
             {Role::bath(1), Role::bath(2), 1}},
            {{c, Role::bath(1), 6}, {c, Role::bath(2), 5},
             {c, Role::bath(3), 7}, {Role::bath(1), Role::bath(3), 1},
             {c, Role::bath(2), 3}},
            {{c, Role::bath(1), 4}, {c, Role::bath(2), 4},
             {c, Role::bath(3), 4}, {c, Role::bath(4), 4}},
        };
        for (const auto& demands : cases) {
            const QubitAssignment a = choose_assignment(demands, topo);
            CHECK_THAT(a.total_cost,
                       Catch::Matchers::WithinAbs(
                           brute_force_min_cost(demands, topo), 1e-12));
        }
    }
    SECTION("infeasible demands name a blocking pair") {
        DeviceTopology line;
        line.n_qubits = 3;
        line.edges = {{0, 1, 0.01}, {1, 2, 0.01}};
        // A triangle of demands cannot embed in a 3-qubit line.
        const std::vector<RolePairDemand> demands = {
            {c, Role::bath(1), 1},
            {c, Role::bath(2), 1},
            {Role::bath(1), Role::bath(2), 1}};
        CHECK_THROWS_AS(choose_assignment(demands, line), AssignmentError);
    }
}

TEST_CASE("whole-circuit unitary extraction") {
    SECTION("single Hadamard") {
        Circuit c(1);
        c.add(Gate::h(), 0);
        CHECK((unitary_of(c) - matrix_1q(Gate::h())).cwiseAbs().maxCoeff() <
              1e-15);
    }
    SECTION("X twice is the identity") {
        Circuit c(1);
        c.add(Gate::x(), 0).add(Gate::x(), 0);
        CHECK((unitary_of(c) - Eigen::Matrix2cd::Identity())
                  .cwiseAbs()
                  .maxCoeff() < 1e-15);
    }
    SECTION("matches Kronecker-built products on random circuits") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const int n = 2 + static_cast<int>(seed % 3);
            const Circuit c = th::random_circuit(n, 15, 900 + seed);
            Eigen::MatrixXcd ref = th::eye(n);
            for (const Op& op : c.ops) {
                if (op.two_qubit()) {
                    ref = th::kron_embed_2q(matrix_2q(op.gate), op.q0, op.q1,
                                            n) *
                          ref;
                } else {
                    ref = th::kron_embed_1q(matrix_1q(op.gate), op.q0, n) * ref;
                }
            }
            CHECK((unitary_of(c) - ref).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
    SECTION("rejects circuits wider than 6 qubits") {
        CHECK_THROWS_AS(unitary_of(Circuit(7)), std::invalid_argument);
    }
}
