#include "qsurf/codes.hpp"

#include <stdexcept>

namespace qsurf {

char to_char(LogicalClass c) {
    switch (c) {
        case LogicalClass::I: return 'I';
        case LogicalClass::X: return 'X';
        case LogicalClass::Y: return 'Y';
        case LogicalClass::Z: return 'Z';
    }
    return '?';
}

std::string SurfaceCode::id() const {
    std::string d = dx == dz ? std::to_string(dx)
                             : std::to_string(dx) + "/" + std::to_string(dz);
    std::string s = "[[" + std::to_string(n) + ",1," + d + "]]";
    if (variant == Variant::xzzx) s += "+xzzx";
    return s;
}

SurfaceCode build_surface_code(int dx, int dz) {
    if (dx < 3 || dz < 3 || dx % 2 == 0 || dz % 2 == 0)
        throw std::invalid_argument("distances must be odd and >= 3");
    SurfaceCode code;
    code.dx = dx;
    code.dz = dz;
    code.n = dx * dz + (dx - 1) * (dz - 1);
    if (code.n > kMaxQubits) throw std::invalid_argument("lattice too large");

    code.coords.resize(code.n);
    for (int i = 0; i < dx; ++i)
        for (int j = 0; j < dz; ++j) code.coords[code.full_qubit(i, j)] = {2 * i, 2 * j};
    for (int i = 0; i < dx - 1; ++i)
        for (int c = 0; c < dz - 1; ++c) code.coords[code.half_qubit(i, c)] = {2 * i + 1, 2 * c + 1};

    code.generators.assign(code.n - 1, identity(code.n));
    for (int i = 0; i < dx; ++i) {
        for (int c = 0; c < dz - 1; ++c) {
            Pauli g = identity(code.n);
            g.x.set(code.full_qubit(i, c));
            g.x.set(code.full_qubit(i, c + 1));
            if (i > 0) g.x.set(code.half_qubit(i - 1, c));
            if (i < dx - 1) g.x.set(code.half_qubit(i, c));
            code.generators[code.site_gen(i, c)] = g;
        }
    }
    for (int i = 0; i < dx - 1; ++i) {
        for (int j = 0; j < dz; ++j) {
            Pauli g = identity(code.n);
            g.z.set(code.full_qubit(i, j));
            g.z.set(code.full_qubit(i + 1, j));
            if (j > 0) g.z.set(code.half_qubit(i, j - 1));
            if (j < dz - 1) g.z.set(code.half_qubit(i, j));
            code.generators[code.plaq_gen(i, j)] = g;
        }
    }

    code.logical_z = identity(code.n);
    for (int j = 0; j < dz; ++j) code.logical_z.z.set(code.full_qubit(0, j));
    code.logical_x = identity(code.n);
    for (int i = 0; i < dx; ++i) code.logical_x.x.set(code.full_qubit(i, 0));
    return code;
}

static Pauli conjugate_by_hadamard(const Pauli& p, Mask h) {
    Mask swap = (p.x ^ p.z) & h;
    return Pauli{p.n, p.x ^ swap, p.z ^ swap};
}

SurfaceCode build_xzzx_code(int dx, int dz) {
    SurfaceCode code = build_surface_code(dx, dz);
    code.variant = Variant::xzzx;
    for (int i = 0; i < dx; ++i)
        for (int j = 0; j < dz; ++j) code.hadamard_mask.set(code.full_qubit(i, j));
    for (auto& g : code.generators) g = conjugate_by_hadamard(g, code.hadamard_mask);
    code.logical_x = conjugate_by_hadamard(code.logical_x, code.hadamard_mask);
    code.logical_z = conjugate_by_hadamard(code.logical_z, code.hadamard_mask);
    return code;
}

Syndrome syndrome(const SurfaceCode& code, const Pauli& error) {
    if (error.n != code.n) throw std::invalid_argument("error dimension mismatch");
    Syndrome s;
    s.m = static_cast<int>(code.generators.size());
    for (int i = 0; i < s.m; ++i)
        if (!commutes(error, code.generators[i])) s.bits.set(i);
    return s;
}

LogicalClass logical_class(const SurfaceCode& code, const Pauli& residual) {
    if (!syndrome(code, residual).zero())
        throw std::invalid_argument("operator has nonzero syndrome; logical class undefined");
    bool cz = commutes(residual, code.logical_z);
    bool cx = commutes(residual, code.logical_x);
    if (cz && cx) return LogicalClass::I;
    if (!cz && cx) return LogicalClass::X;
    if (cz && !cx) return LogicalClass::Z;
    return LogicalClass::Y;
}

}  // namespace qsurf
