#include "cspin/transpile.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace cspin {

std::string Violation::describe() const {
    const std::string what = kind == Kind::WrongDirection
                                 ? "wrong direction"
                                 : "no coupling";
    return "op " + std::to_string(op_index) + ": (" + std::to_string(q0) +
           "," + std::to_string(q1) + ") " + what;
}

LegalityReport validate(const Circuit& c, const DeviceTopology& topo) {
    if (c.n_qubits > topo.n_qubits) {
        throw std::invalid_argument("circuit wider than device");
    }
    LegalityReport report;
    for (std::size_t i = 0; i < c.ops.size(); ++i) {
        const Op& op = c.ops[i];
        if (op.gate.type == GateType::Cnot) {
            if (topo.has_directed(op.q0, op.q1)) continue;
            report.violations.push_back(
                {i, op.q0, op.q1,
                 topo.has_directed(op.q1, op.q0)
                     ? Violation::Kind::WrongDirection
                     : Violation::Kind::NoCoupling});
        } else if (op.gate.type == GateType::Swap) {
            if (!topo.has_coupling(op.q0, op.q1)) {
                report.violations.push_back(
                    {i, op.q0, op.q1, Violation::Kind::NoCoupling});
            }
        }
    }
    return report;
}

Circuit reverse_cnot_rewrite(const Circuit& c, const DeviceTopology& topo) {
    Circuit out(c.n_qubits);
    out.role_map = c.role_map;
    for (const Op& op : c.ops) {
        if (op.gate.type != GateType::Cnot) {
            if (op.gate.type == GateType::Swap &&
                !topo.has_coupling(op.q0, op.q1)) {
                throw RewriteError("SWAP on uncoupled pair (" +
                                   std::to_string(op.q0) + "," +
                                   std::to_string(op.q1) + ")");
            }
            out.ops.push_back(op);
            continue;
        }
        if (topo.has_directed(op.q0, op.q1)) {
            out.ops.push_back(op);
        } else if (topo.has_directed(op.q1, op.q0)) {
            out.add(Gate::h(), op.q0);
            out.add(Gate::h(), op.q1);
            out.add(Gate::cnot(), op.q1, op.q0);
            out.add(Gate::h(), op.q0);
            out.add(Gate::h(), op.q1);
        } else {
            throw RewriteError("CNOT on uncoupled pair (" +
                               std::to_string(op.q0) + "," +
                               std::to_string(op.q1) + ")");
        }
    }
    return out;
}

Circuit expand_swaps(const Circuit& c) {
    Circuit out(c.n_qubits);
    out.role_map = c.role_map;
    for (const Op& op : c.ops) {
        if (op.gate.type == GateType::Swap) {
            out.add(Gate::cnot(), op.q0, op.q1);
            out.add(Gate::cnot(), op.q1, op.q0);
            out.add(Gate::cnot(), op.q0, op.q1);
        } else {
            out.ops.push_back(op);
        }
    }
    return out;
}

int QubitAssignment::at(const Role& r) const {
    auto it = mapping.find(r);
    if (it == mapping.end()) {
        throw AssignmentError("assignment is missing role " + r.name());
    }
    return it->second;
}

QubitAssignment choose_assignment(const std::vector<RolePairDemand>& demands,
                                  const DeviceTopology& topo) {
    // Canonical role order: central, bath1.., ancilla0.. (Role's ordering).
    std::set<Role> role_set;
    for (const auto& d : demands) {
        role_set.insert(d.a);
        role_set.insert(d.b);
    }
    const std::vector<Role> roles(role_set.begin(), role_set.end());
    const int k = static_cast<int>(roles.size());
    if (k > topo.n_qubits) {
        throw AssignmentError("more roles than device qubits");
    }

    std::map<Role, int> slot;
    for (int i = 0; i < k; ++i) slot[roles[static_cast<std::size_t>(i)]] = i;

    std::vector<int> perm(k, 0);
    std::vector<bool> used(topo.n_qubits, false);
    std::vector<int> best;
    double best_cost = std::numeric_limits<double>::infinity();
    std::map<std::string, int> block_counts;

    auto cost_of = [&](const std::vector<int>& map_vec) {
        double cost = 0.0;
        for (const auto& d : demands) {
            const int qa = map_vec[static_cast<std::size_t>(slot[d.a])];
            const int qb = map_vec[static_cast<std::size_t>(slot[d.b])];
            const auto err = topo.coupling_error(qa, qb);
            if (!err) {
                ++block_counts[d.a.name() + "-" + d.b.name()];
                return std::numeric_limits<double>::infinity();
            }
            cost += d.cnot_count * *err;
        }
        return cost;
    };

    // Depth-first over injective maps in lexicographic tuple order; the first
    // strictly better cost wins, so ties keep the smallest tuple.
    auto search = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            const double cost = cost_of(perm);
            if (cost < best_cost) {
                best_cost = cost;
                best = perm;
            }
            return;
        }
        for (int q = 0; q < topo.n_qubits; ++q) {
            if (used[q]) continue;
            used[q] = true;
            perm[depth] = q;
            self(self, depth + 1);
            used[q] = false;
        }
    };
    search(search, 0);

    if (!std::isfinite(best_cost)) {
        std::string blocker = "?";
        int most = -1;
        for (const auto& [pair, n] : block_counts) {
            if (n > most) {
                most = n;
                blocker = pair;
            }
        }
        throw AssignmentError("no feasible assignment; blocking pair " +
                              blocker);
    }

    QubitAssignment a;
    a.total_cost = best_cost;
    a.device_qubits = topo.n_qubits;
    for (int i = 0; i < k; ++i) a.mapping[roles[static_cast<std::size_t>(i)]] = best[static_cast<std::size_t>(i)];
    return a;
}

QubitAssignment logical_assignment(int bath_size) {
    QubitAssignment a;
    a.device_qubits = bath_size + 1;
    a.mapping[Role::central()] = 0;
    for (int j = 1; j <= bath_size; ++j) a.mapping[Role::bath(j)] = j;
    return a;
}

}  // namespace cspin
