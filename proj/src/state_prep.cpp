#include "cspin/state_prep.hpp"

#include <cmath>
#include <numbers>

namespace cspin {

using std::numbers::pi;

StateVector target_state(const InitSpec& spec) {
    const int n = spec.bath_size() + 1;
    StateVector sv(n);
    sv.amp(0) = 0.0;
    const Complex i(0.0, 1.0);
    switch (spec.kind) {
        case InitSpec::Kind::TwoPes: {
            const double r = 1.0 / std::sqrt(2.0);
            sv.amp(std::size_t{1} << 2) = r;                           // bath2 up
            sv.amp(std::size_t{1} << 1) = r * std::exp(i * spec.phase);  // bath1 up
            break;
        }
        case InitSpec::Kind::ThreePes: {
            const double r = 1.0 / std::sqrt(6.0);
            sv.amp(std::size_t{1} << 3) = r;                                  // bath3 up
            sv.amp(std::size_t{1} << 2) = -2.0 * r * std::exp(i * spec.phase);  // bath2 up
            sv.amp(std::size_t{1} << 1) = r;                                  // bath1 up
            break;
        }
        case InitSpec::Kind::ExcitedCentral:
            sv.amp(1) = 1.0;
            break;
    }
    return sv;
}

Gate a_phi_gate(double phi) {
    return Gate::u3(2.0 * std::acos(1.0 / std::sqrt(3.0)), phi, 0.0);
}

Circuit prep_circuit(const InitSpec& spec, const QubitAssignment& assignment) {
    Circuit c(assignment.device_qubits);
    const int central = assignment.at(Role::central());
    c.role_map[Role::central()] = central;
    for (int j = 1; j <= spec.bath_size(); ++j) {
        c.role_map[Role::bath(j)] = assignment.at(Role::bath(j));
    }

    switch (spec.kind) {
        case InitSpec::Kind::ExcitedCentral:
            c.add(Gate::x(), central);
            break;

        case InitSpec::Kind::TwoPes: {
            const int b1 = assignment.at(Role::bath(1));
            const int b2 = assignment.at(Role::bath(2));
            c.add(Gate::h(), b1);
            c.add(Gate::cnot(), b1, b2);
            c.add(Gate::x(), b2);
            // Phase lands on the bath1-excited branch.
            c.add(Gate::phase(spec.phase), b1);
            break;
        }

        case InitSpec::Kind::ThreePes: {
            // Stage 1 entangles the hub (the future central qubit) with the
            // bath1/bath3 qubits; the hub temporarily carries the bath2
            // amplitude (the heavy -2 term).
            const int hub = central;
            const int a = assignment.at(Role::bath(1));
            const int b = assignment.at(Role::bath(3));
            const int spare = assignment.at(Role::bath(2));

            c.add(Gate::x(), b);
            c.add(a_phi_gate(spec.phase), hub);
            c.add(Gate::z(), hub);
            // B,CNOT,B,CNOT rotates `a` by pi/2 about y only on the hub's
            // unexcited branch (the two quarter rotations cancel otherwise).
            c.add(Gate::u3(pi / 4.0, 0.0, 0.0), a);
            c.add(Gate::cnot(), hub, a);
            c.add(Gate::u3(pi / 4.0, 0.0, 0.0), a);
            c.add(Gate::cnot(), hub, a);
            c.add(Gate::cnot(), a, b);
            c.add(Gate::cnot(), hub, b);
            // Stage 2: move the hub's bath state onto the spare qubit.
            c.add(Gate::swap(), hub, spare);
            break;
        }
    }
    return c;
}

StateVector embed_logical(const StateVector& logical, const RoleMap& roles,
                          int device_qubits) {
    StateVector out(device_qubits);
    out.amp(0) = 0.0;
    const int n_logical = logical.n_qubits();
    for (std::size_t idx = 0; idx < logical.dim(); ++idx) {
        if (logical.amp(idx) == Complex(0.0, 0.0)) continue;
        std::size_t phys = 0;
        for (int lq = 0; lq < n_logical; ++lq) {
            if (!(idx & (std::size_t{1} << lq))) continue;
            const Role role = lq == 0 ? Role::central() : Role::bath(lq);
            phys |= std::size_t{1} << roles.at(role);
        }
        out.amp(phys) = logical.amp(idx);
    }
    return out;
}

double bright_weight(const InitSpec& spec) {
    switch (spec.kind) {
        case InitSpec::Kind::TwoPes:
            return std::pow(std::cos(spec.phase / 2.0), 2);
        case InitSpec::Kind::ThreePes:
            return (8.0 / 9.0) * std::pow(std::sin(spec.phase / 2.0), 2);
        case InitSpec::Kind::ExcitedCentral:
            return 0.0;
    }
    return 0.0;
}

}  // namespace cspin
