#pragma once

#include <stdexcept>
#include <string>

#include "cspin/circuit.hpp"

namespace cspin {

struct QasmError : std::runtime_error {
    int line;
    QasmError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
          line(line_no) {}
};

// Rewrites the circuit over the native gate set {U3, CNOT}: single-qubit
// gates become exact U3 forms (Rz becomes the H-U3-H triple) and each SWAP
// becomes three CNOTs with alternating directions. Total; no device needed.
Circuit lower_to_native(const Circuit& c);

// Emits OpenQASM 2.0 restricted to u3/cx after lowering. Angles are printed
// with shortest round-trip precision so import recovers them bit-exactly.
std::string export_qasm(const Circuit& c);

// Parses the dialect emitted by export_qasm (one qreg, u3, cx, comments).
// Throws QasmError with the offending line number otherwise.
Circuit import_qasm(const std::string& text);

void write_qasm_file(const Circuit& c, const std::string& path);
Circuit read_qasm_file(const std::string& path);

// Shortest decimal form of a double that parses back to the same value.
std::string format_double(double v);

}  // namespace cspin
