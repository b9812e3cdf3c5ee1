#include "cspin/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cspin/transpile.hpp"

namespace cspin {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

Circuit lower_to_native(const Circuit& c) {
    Circuit expanded = expand_swaps(c);
    Circuit out(c.n_qubits);
    out.role_map = c.role_map;
    for (const Op& op : expanded.ops) {
        if (op.gate.type == GateType::Cnot) {
            out.ops.push_back(op);
        } else {
            for (const Gate& g : lower_1q_to_u3(op.gate)) out.add(g, op.q0);
        }
    }
    return out;
}

std::string export_qasm(const Circuit& c) {
    const Circuit native = lower_to_native(c);
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    for (const auto& [role, q] : c.role_map) {
        os << "// role " << role.name() << " -> q[" << q << "]\n";
    }
    os << "qreg q[" << c.n_qubits << "];\n";
    for (const Op& op : native.ops) {
        if (op.gate.type == GateType::Cnot) {
            os << "cx q[" << op.q0 << "],q[" << op.q1 << "];\n";
        } else {
            os << "u3(" << format_double(op.gate.theta) << ","
               << format_double(op.gate.phi) << ","
               << format_double(op.gate.lambda) << ") q[" << op.q0 << "];\n";
        }
    }
    return os.str();
}

namespace {

std::string strip(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_angle(const std::string& tok, int line_no) {
    const std::string t = strip(tok);
    if (t.empty()) throw QasmError(line_no, "empty angle token");
    const char* begin = t.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + t.size() || !std::isfinite(v)) {
        throw QasmError(line_no, "malformed angle token '" + t + "'");
    }
    return v;
}

int parse_qubit(const std::string& tok, int n_qubits, int line_no) {
    const std::string t = strip(tok);
    if (t.size() < 4 || t.substr(0, 2) != "q[" || t.back() != ']') {
        throw QasmError(line_no, "malformed qubit reference '" + t + "'");
    }
    const std::string num = t.substr(2, t.size() - 3);
    for (char ch : num) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw QasmError(line_no, "malformed qubit index '" + num + "'");
        }
    }
    const int q = std::atoi(num.c_str());
    if (n_qubits >= 0 && q >= n_qubits) {
        throw QasmError(line_no, "qubit index " + num + " out of range");
    }
    return q;
}

}  // namespace

Circuit import_qasm(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    int line_no = 0;
    bool saw_version = false;
    int n_qubits = -1;
    Circuit c;

    while (std::getline(is, raw)) {
        ++line_no;
        std::string line = strip(raw);
        const auto comment = line.find("//");
        if (comment != std::string::npos) line = strip(line.substr(0, comment));
        if (line.empty()) continue;

        if (line.back() != ';') {
            throw QasmError(line_no, "missing ';'");
        }
        line = strip(line.substr(0, line.size() - 1));

        if (line.rfind("OPENQASM", 0) == 0) {
            if (strip(line.substr(8)) != "2.0") {
                throw QasmError(line_no, "unsupported OPENQASM version");
            }
            saw_version = true;
            continue;
        }
        if (line.rfind("include", 0) == 0) continue;
        if (line.rfind("qreg", 0) == 0) {
            if (n_qubits >= 0) throw QasmError(line_no, "second qreg");
            const auto lb = line.find('[');
            const auto rb = line.find(']');
            if (lb == std::string::npos || rb == std::string::npos || rb < lb) {
                throw QasmError(line_no, "malformed qreg");
            }
            n_qubits = std::atoi(line.substr(lb + 1, rb - lb - 1).c_str());
            if (n_qubits < 1 || n_qubits > 12) {
                throw QasmError(line_no, "qreg size out of range");
            }
            c = Circuit(n_qubits);
            continue;
        }
        if (line.rfind("u3", 0) == 0) {
            if (n_qubits < 0) throw QasmError(line_no, "u3 before qreg");
            const auto lp = line.find('(');
            const auto rp = line.find(')');
            if (lp == std::string::npos || rp == std::string::npos || rp < lp) {
                throw QasmError(line_no, "malformed u3 parameter list");
            }
            const std::string params = line.substr(lp + 1, rp - lp - 1);
            const auto c1 = params.find(',');
            const auto c2 = params.find(',', c1 == std::string::npos ? 0 : c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos) {
                throw QasmError(line_no, "u3 needs three angles");
            }
            const double theta = parse_angle(params.substr(0, c1), line_no);
            const double phi = parse_angle(params.substr(c1 + 1, c2 - c1 - 1), line_no);
            const double lambda = parse_angle(params.substr(c2 + 1), line_no);
            const int q = parse_qubit(line.substr(rp + 1), n_qubits, line_no);
            c.add(Gate::u3(theta, phi, lambda), q);
            continue;
        }
        if (line.rfind("cx", 0) == 0) {
            if (n_qubits < 0) throw QasmError(line_no, "cx before qreg");
            const std::string rest = strip(line.substr(2));
            const auto comma = rest.find(',');
            if (comma == std::string::npos) {
                throw QasmError(line_no, "cx needs two qubits");
            }
            const int qc = parse_qubit(rest.substr(0, comma), n_qubits, line_no);
            const int qt = parse_qubit(rest.substr(comma + 1), n_qubits, line_no);
            if (qc == qt) throw QasmError(line_no, "cx qubits must differ");
            c.add(Gate::cnot(), qc, qt);
            continue;
        }
        const std::string stmt = line.substr(0, line.find_first_of(" \t("));
        throw QasmError(line_no, "unsupported statement '" + stmt + "'");
    }
    if (!saw_version) throw QasmError(1, "missing OPENQASM 2.0 header");
    if (n_qubits < 0) throw QasmError(line_no, "missing qreg declaration");
    return c;
}

void write_qasm_file(const Circuit& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write QASM file: " + path);
    out << export_qasm(c);
}

Circuit read_qasm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open QASM file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return import_qasm(ss.str());
}

}  // namespace cspin
