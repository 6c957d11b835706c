#pragma once

#include <array>
#include <string>
#include <vector>

#include "qsurf/pauli.hpp"

namespace qsurf {

enum class Variant { css, xzzx };

enum class LogicalClass : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };
char to_char(LogicalClass c);

struct Syndrome {
    int m = 0;  // generator count
    Mask bits;
    bool zero() const { return bits.none(); }
};

// Planar surface code on the open-boundary lattice with d_X full rows of d_Z
// qubits interleaved with d_X-1 half rows of d_Z-1 qubits. Rough edges are
// left/right (Z chains of length d_Z cross horizontally), smooth edges are
// top/bottom (X chains of length d_X cross vertically).
//
// Coordinates are doubled: full-row qubit (i,j) sits at (2i, 2j), half-row
// qubit (i,c) at (2i+1, 2c+1); X-check sites at (2i, 2c+1), Z-check
// plaquettes at (2i+1, 2j). Generators are ordered row-major over this
// drawing, which reproduces the standard G1..G12 labelling at d_X = d_Z = 3.
struct SurfaceCode {
    int n = 0;
    int k = 1;
    int dx = 0;  // vertical (X) distance
    int dz = 0;  // horizontal (Z) distance
    Variant variant = Variant::css;
    std::vector<Pauli> generators;
    Pauli logical_x;  // leftmost column, weight dx
    Pauli logical_z;  // top row, weight dz
    std::vector<std::array<int, 2>> coords;  // doubled (row, col) per qubit
    Mask hadamard_mask;  // qubits with X<->Z exchanged in the xzzx variant

    int row_stride() const { return 2 * dz - 1; }
    int full_qubit(int i, int j) const { return i * row_stride() + j; }
    int half_qubit(int i, int c) const { return i * row_stride() + dz + c; }

    int site_rows() const { return dx; }
    int site_cols() const { return dz - 1; }
    int plaq_rows() const { return dx - 1; }
    int plaq_cols() const { return dz; }
    // generator indices; sites and plaquettes share the row-major interleaving
    int site_gen(int i, int c) const { return i * row_stride() + c; }
    int plaq_gen(int i, int j) const { return i * row_stride() + (dz - 1) + j; }

    std::string id() const;  // "[[13,1,3]]", "[[23,1,3/5]]", with "+xzzx" suffix
};

// d_X, d_Z odd and >= 3. Throws std::invalid_argument otherwise.
SurfaceCode build_surface_code(int dx, int dz);

// Same lattice with X<->Z exchanged on the full-row sublattice, so every
// 4-body check reads X-Z-Z-X in lattice (index) order.
SurfaceCode build_xzzx_code(int dx, int dz);

Syndrome syndrome(const SurfaceCode& code, const Pauli& error);

// Coset of a zero-syndrome operator relative to the stabilizer group.
// Throws std::invalid_argument if the residual has a nonzero syndrome.
LogicalClass logical_class(const SurfaceCode& code, const Pauli& residual);

}  // namespace qsurf
