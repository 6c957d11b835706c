#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qsurf {

// Fixed-width qubit mask. 128 bits covers every lattice this library builds
// (the largest, d_X = d_Z = 7, has 85 data qubits) without heap allocation.
struct Mask {
    uint64_t lo = 0;
    uint64_t hi = 0;

    constexpr bool test(int i) const {
        return ((i < 64 ? lo >> i : hi >> (i - 64)) & 1u) != 0;
    }
    constexpr void set(int i) {
        if (i < 64) lo |= uint64_t{1} << i; else hi |= uint64_t{1} << (i - 64);
    }
    constexpr void flip(int i) {
        if (i < 64) lo ^= uint64_t{1} << i; else hi ^= uint64_t{1} << (i - 64);
    }
    constexpr bool none() const { return lo == 0 && hi == 0; }

    friend constexpr Mask operator&(Mask a, Mask b) { return {a.lo & b.lo, a.hi & b.hi}; }
    friend constexpr Mask operator|(Mask a, Mask b) { return {a.lo | b.lo, a.hi | b.hi}; }
    friend constexpr Mask operator^(Mask a, Mask b) { return {a.lo ^ b.lo, a.hi ^ b.hi}; }
    friend constexpr Mask operator~(Mask a) { return {~a.lo, ~a.hi}; }
    friend constexpr bool operator==(Mask a, Mask b) { return a.lo == b.lo && a.hi == b.hi; }
};

int popcount(Mask m);
inline bool parity(Mask m) { return popcount(m) & 1; }

inline constexpr int kMaxQubits = 128;

// Phaseless n-qubit Pauli in the binary symplectic representation: bit i of x is
// set where X or Y acts on qubit i, bit i of z where Z or Y acts. Global phases
// are dropped; syndromes and logical classes never depend on them.
struct Pauli {
    int n = 0;
    Mask x;
    Mask z;

    friend bool operator==(const Pauli& a, const Pauli& b) {
        return a.n == b.n && a.x == b.x && a.z == b.z;
    }
};

Pauli identity(int n);

// Letters are 'X', 'Y' or 'Z'; qubit indices are 1-based as in user-facing I/O.
// Throws std::invalid_argument on out-of-range or repeated indices.
Pauli pauli_from_terms(int n, const std::vector<std::pair<int, char>>& terms);

bool commutes(const Pauli& a, const Pauli& b);
Pauli multiply(const Pauli& a, const Pauli& b);
int weight(const Pauli& p);

// Text form: whitespace-separated <letter><index> tokens ("X2 Y3"), identity "I".
std::string to_string(const Pauli& p);
Pauli parse_pauli(int n, const std::string& text);

}  // namespace qsurf
