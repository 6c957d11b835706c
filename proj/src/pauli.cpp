#include "qsurf/pauli.hpp"

#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qsurf {

int popcount(Mask m) {
    return std::popcount(m.lo) + std::popcount(m.hi);
}

Pauli identity(int n) {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("qubit count out of range");
    return Pauli{n, {}, {}};
}

Pauli pauli_from_terms(int n, const std::vector<std::pair<int, char>>& terms) {
    Pauli p = identity(n);
    Mask seen;
    for (auto [idx, letter] : terms) {
        if (idx < 1 || idx > n) throw std::invalid_argument("qubit index out of range");
        if (seen.test(idx - 1)) throw std::invalid_argument("repeated qubit index");
        seen.set(idx - 1);
        switch (letter) {
            case 'X': p.x.set(idx - 1); break;
            case 'Z': p.z.set(idx - 1); break;
            case 'Y': p.x.set(idx - 1); p.z.set(idx - 1); break;
            default: throw std::invalid_argument("letter must be X, Y or Z");
        }
    }
    return p;
}

bool commutes(const Pauli& a, const Pauli& b) {
    if (a.n != b.n) throw std::invalid_argument("pauli dimension mismatch");
    return !(parity(a.x & b.z) ^ parity(a.z & b.x));
}

Pauli multiply(const Pauli& a, const Pauli& b) {
    if (a.n != b.n) throw std::invalid_argument("pauli dimension mismatch");
    return Pauli{a.n, a.x ^ b.x, a.z ^ b.z};
}

int weight(const Pauli& p) {
    return popcount(p.x | p.z);
}

std::string to_string(const Pauli& p) {
    std::string out;
    for (int i = 0; i < p.n; ++i) {
        bool x = p.x.test(i), z = p.z.test(i);
        if (!x && !z) continue;
        if (!out.empty()) out += ' ';
        out += x ? (z ? 'Y' : 'X') : 'Z';
        out += std::to_string(i + 1);
    }
    return out.empty() ? "I" : out;
}

Pauli parse_pauli(int n, const std::string& text) {
    Pauli p = identity(n);
    Mask seen;
    std::istringstream in(text);
    std::string tok;
    bool saw_identity = false, saw_term = false;
    while (in >> tok) {
        if (tok == "I") { saw_identity = true; continue; }
        if (tok.size() < 2) throw std::invalid_argument("bad pauli token: " + tok);
        char letter = tok[0];
        size_t pos = 0;
        int idx;
        try {
            idx = std::stoi(tok.substr(1), &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad pauli token: " + tok);
        }
        if (pos + 1 != tok.size()) throw std::invalid_argument("bad pauli token: " + tok);
        if (idx < 1 || idx > n) throw std::invalid_argument("qubit index out of range: " + tok);
        if (seen.test(idx - 1)) throw std::invalid_argument("repeated qubit index: " + tok);
        seen.set(idx - 1);
        saw_term = true;
        switch (letter) {
            case 'X': p.x.set(idx - 1); break;
            case 'Z': p.z.set(idx - 1); break;
            case 'Y': p.x.set(idx - 1); p.z.set(idx - 1); break;
            default: throw std::invalid_argument("bad pauli letter: " + tok);
        }
    }
    if (saw_identity && saw_term) throw std::invalid_argument("identity token mixed with terms");
    return p;
}

}  // namespace qsurf
