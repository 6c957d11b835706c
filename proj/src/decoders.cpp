#include "qsurf/decoders.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace qsurf {

const char* decoder_name(Decoder d) { return d == Decoder::mwpm ? "mwpm" : "ml"; }

namespace {

struct GridDefect {
    int i, j;
};

int manhattan(const GridDefect& a, const GridDefect& b) {
    return std::abs(a.i - b.i) + std::abs(a.j - b.j);
}

// Z correction for the site (X-check) defect graph. Site (i,c) reads left/right
// full-row qubits (i,c),(i,c+1) and the half-row qubits above/below, so defects
// pair horizontally through full-row qubits and vertically through half-row
// qubits; rough boundaries are left/right.
void realize_site(const SurfaceCode& code, const std::vector<GridDefect>& defs,
                  const DefectMatching& m, Pauli& corr) {
    int dz = code.dz;
    for (auto [a, b] : m.pairs) {
        GridDefect u = defs[a], v = defs[b];
        if (u.i > v.i || (u.i == v.i && u.j > v.j)) std::swap(u, v);
        // horizontal moves in the upper defect's row, then vertical at the target column
        for (int c = std::min(u.j, v.j) + 1; c <= std::max(u.j, v.j); ++c)
            corr.z.flip(code.full_qubit(u.i, c));
        for (int i = u.i; i < v.i; ++i) corr.z.flip(code.half_qubit(i, v.j));
    }
    for (int a : m.to_boundary) {
        GridDefect u = defs[a];
        if (u.j + 1 <= dz - 1 - u.j) {
            for (int c = 0; c <= u.j; ++c) corr.z.flip(code.full_qubit(u.i, c));
        } else {
            for (int c = u.j + 1; c < dz; ++c) corr.z.flip(code.full_qubit(u.i, c));
        }
    }
}

// X correction for the plaquette (Z-check) defect graph; smooth boundaries are
// top/bottom, horizontal moves go through half-row qubits.
void realize_plaq(const SurfaceCode& code, const std::vector<GridDefect>& defs,
                  const DefectMatching& m, Pauli& corr) {
    int dx = code.dx;
    for (auto [a, b] : m.pairs) {
        GridDefect u = defs[a], v = defs[b];
        if (u.i > v.i || (u.i == v.i && u.j > v.j)) std::swap(u, v);
        for (int j = std::min(u.j, v.j); j < std::max(u.j, v.j); ++j)
            corr.x.flip(code.half_qubit(u.i, j));
        for (int i = u.i + 1; i <= v.i; ++i) corr.x.flip(code.full_qubit(i, v.j));
    }
    for (int a : m.to_boundary) {
        GridDefect u = defs[a];
        if (u.i + 1 <= dx - 1 - u.i) {
            for (int i = 0; i <= u.i; ++i) corr.x.flip(code.full_qubit(i, u.j));
        } else {
            for (int i = u.i + 1; i < dx; ++i) corr.x.flip(code.full_qubit(i, u.j));
        }
    }
}

DefectMatching match_grid(const std::vector<GridDefect>& defs,
                          const std::vector<int>& bnd, bool even_pref) {
    DefectGraph g;
    g.boundary = bnd;
    g.prefer_even_boundary = even_pref;
    size_t k = defs.size();
    g.dist.assign(k, std::vector<int>(k, 0));
    for (size_t a = 0; a < k; ++a)
        for (size_t b = a + 1; b < k; ++b) g.dist[a][b] = g.dist[b][a] = manhattan(defs[a], defs[b]);
    return match_defects(g);
}

Pauli conjugate(const Pauli& p, Mask h) {
    Mask swap = (p.x ^ p.z) & h;
    return Pauli{p.n, p.x ^ swap, p.z ^ swap};
}

}  // namespace

Pauli decode_mwpm(const SurfaceCode& code, const Syndrome& s) {
    if (s.m != static_cast<int>(code.generators.size()))
        throw std::invalid_argument("syndrome length mismatch");

    // Site defects process in along-axis-major order (column, then row); the
    // open boundary of the site graph is horizontal. Plaquette defects are the
    // transpose case: (row, then column). Tie resolution depends on this order.
    std::vector<GridDefect> sites, plaqs;
    for (int c = 0; c < code.site_cols(); ++c)
        for (int i = 0; i < code.site_rows(); ++i)
            if (s.bits.test(code.site_gen(i, c))) sites.push_back({i, c});
    for (int i = 0; i < code.plaq_rows(); ++i)
        for (int j = 0; j < code.plaq_cols(); ++j)
            if (s.bits.test(code.plaq_gen(i, j))) plaqs.push_back({i, j});

    std::vector<int> sbnd(sites.size()), pbnd(plaqs.size());
    for (size_t a = 0; a < sites.size(); ++a)
        sbnd[a] = std::min(sites[a].j + 1, code.dz - 1 - sites[a].j);
    for (size_t a = 0; a < plaqs.size(); ++a)
        pbnd[a] = std::min(plaqs[a].i + 1, code.dx - 1 - plaqs[a].i);

    Pauli corr = identity(code.n);
    realize_site(code, sites, match_grid(sites, sbnd, /*even_pref=*/true), corr);
    realize_plaq(code, plaqs, match_grid(plaqs, pbnd, /*even_pref=*/false), corr);
    if (code.variant == Variant::xzzx) corr = conjugate(corr, code.hadamard_mask);
    return corr;
}

namespace {

// Reduced row-echelon form of the syndrome map over GF(2). Row i of the map
// sends a pattern (x,z) to <g_i.z, x> + <g_i.x, z>; pivots are tracked so a
// representative for any syndrome is an O(m) lookup afterwards.
struct SyndromeSolver {
    struct Row {
        Mask cx, cz;    // coefficients on the x-part and z-part
        Mask combo;     // original generator rows combined into this one
        int pivot;      // column index in [0, 2n)
    };
    int n = 0;
    std::vector<Row> rows;

    explicit SyndromeSolver(const SurfaceCode& code) : n(code.n) {
        const int m = static_cast<int>(code.generators.size());
        std::vector<Row> work(m);
        for (int i = 0; i < m; ++i) {
            work[i].cx = code.generators[i].z;
            work[i].cz = code.generators[i].x;
            work[i].combo.set(i);
            work[i].pivot = -1;
        }
        auto col_test = [&](const Row& r, int col) {
            return col < n ? r.cx.test(col) : r.cz.test(col - n);
        };
        int next = 0;
        for (int col = 0; col < 2 * n && next < m; ++col) {
            int pick = -1;
            for (int r = next; r < m; ++r)
                if (col_test(work[r], col)) { pick = r; break; }
            if (pick < 0) continue;
            std::swap(work[next], work[pick]);
            work[next].pivot = col;
            for (int r = 0; r < m; ++r) {
                if (r != next && col_test(work[r], col)) {
                    work[r].cx = work[r].cx ^ work[next].cx;
                    work[r].cz = work[r].cz ^ work[next].cz;
                    work[r].combo = work[r].combo ^ work[next].combo;
                }
            }
            ++next;
        }
        if (next != m) throw std::logic_error("dependent stabilizer generators");
        rows = std::move(work);
    }

    Pauli solve(const SurfaceCode& code, const Syndrome& s) const {
        Pauli e = identity(code.n);
        for (const Row& r : rows) {
            if (parity(r.combo & s.bits)) {
                if (r.pivot < n) e.x.set(r.pivot); else e.z.set(r.pivot - n);
            }
        }
        return e;
    }
};

// pow tables with p^0 = 1 even at p = 0, so phase-flip channels stay exact
struct ProbTables {
    std::vector<double> pi, px, py, pz;
    ProbTables(const Channel& ch, int n)
        : pi(n + 1, 1.0), px(n + 1, 1.0), py(n + 1, 1.0), pz(n + 1, 1.0) {
        for (int e = 1; e <= n; ++e) {
            pi[e] = pi[e - 1] * (1.0 - ch.rho());
            px[e] = px[e - 1] * ch.px;
            py[e] = py[e - 1] * ch.py;
            pz[e] = pz[e - 1] * ch.pz;
        }
    }
    double operator()(int n, Mask x, Mask z) const {
        int nx = popcount(x & ~z), nz = popcount(z & ~x), ny = popcount(x & z);
        return pi[n - nx - ny - nz] * px[nx] * py[ny] * pz[nz];
    }
};

// Gray-code walk over the full stabilizer group, accumulating coset weights of
// base = E_s * L. One generator toggles per step.
std::array<double, 4> coset_weights(const SurfaceCode& code, const ProbTables& pt,
                                    const Pauli& rep, const std::array<Pauli, 4>& logicals) {
    const int m = static_cast<int>(code.generators.size());
    std::array<double, 4> w{};
    for (int li = 0; li < 4; ++li) {
        Mask cx = rep.x ^ logicals[li].x;
        Mask cz = rep.z ^ logicals[li].z;
        double acc = pt(code.n, cx, cz);
        for (uint64_t i = 1, end = uint64_t{1} << m; i < end; ++i) {
            int gidx = std::countr_zero(i);
            cx = cx ^ code.generators[gidx].x;
            cz = cz ^ code.generators[gidx].z;
            acc += pt(code.n, cx, cz);
        }
        w[li] = acc;
    }
    return w;
}

std::array<Pauli, 4> class_reps(const SurfaceCode& code) {
    return {identity(code.n), code.logical_x, multiply(code.logical_x, code.logical_z),
            code.logical_z};
}

int argmax_class(const std::array<double, 4>& w) {
    int best = 0;
    for (int li = 1; li < 4; ++li)
        if (w[li] > w[best]) best = li;  // ties keep the earlier class (I < X < Y < Z)
    return best;
}

}  // namespace

Pauli syndrome_representative(const SurfaceCode& code, const Syndrome& s) {
    SyndromeSolver solver(code);
    return solver.solve(code, s);
}

Pauli decode_ml(const SurfaceCode& code, const Channel& ch, const Syndrome& s) {
    const int m = static_cast<int>(code.generators.size());
    if (m > 22) throw std::invalid_argument("code too large for coset-sum ML decoding");
    SyndromeSolver solver(code);
    Pauli rep = solver.solve(code, s);
    ProbTables pt(ch, code.n);
    auto logicals = class_reps(code);
    auto w = coset_weights(code, pt, rep, logicals);
    return multiply(rep, logicals[argmax_class(w)]);
}

DecodeOutcome decode_and_judge(const SurfaceCode& code, const Channel* ch, Decoder dec,
                               const Pauli& error) {
    Syndrome s = syndrome(code, error);
    Pauli corr;
    if (dec == Decoder::mwpm) {
        if (code.variant == Variant::xzzx && ch != nullptr && !ch->pure_z())
            throw std::invalid_argument("mwpm on xzzx codes requires a pure-Z channel");
        corr = decode_mwpm(code, s);
    } else {
        if (ch == nullptr) throw std::invalid_argument("ml decoding needs a channel");
        corr = decode_ml(code, *ch, s);
    }
    DecodeOutcome out;
    out.correction = corr;
    Pauli residual = multiply(error, corr);
    out.residual_class = logical_class(code, residual);
    out.success = out.residual_class == LogicalClass::I;
    return out;
}

CosetTable::CosetTable(const SurfaceCode& code, const Channel& ch, int workers) : code_(code) {
    m_ = static_cast<int>(code.generators.size());
    if (m_ > 16) throw std::invalid_argument("code too large for a full coset table");
    const size_t count = size_t{1} << m_;
    reps_.resize(count);
    w_.resize(count);
    best_.resize(count);

    SyndromeSolver solver(code);
    ProbTables pt(ch, code.n);
    auto logicals = class_reps(code);

    auto run = [&](size_t begin, size_t end) {
        for (size_t idx = begin; idx < end; ++idx) {
            Syndrome s;
            s.m = m_;
            s.bits.lo = idx;
            reps_[idx] = solver.solve(code_, s);
            w_[idx] = coset_weights(code_, pt, reps_[idx], logicals);
            best_[idx] = static_cast<uint8_t>(argmax_class(w_[idx]));
        }
    };
    workers = std::max(1, workers);
    if (workers == 1 || count < 64) {
        run(0, count);
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (count + workers - 1) / workers;
        for (int t = 0; t < workers; ++t) {
            size_t b = t * chunk, e = std::min(count, b + chunk);
            if (b < e) pool.emplace_back(run, b, e);
        }
        for (auto& th : pool) th.join();
    }
}

size_t CosetTable::index(const Syndrome& s) const {
    if (s.m != m_) throw std::invalid_argument("syndrome length mismatch");
    return static_cast<size_t>(s.bits.lo & ((uint64_t{1} << m_) - 1));
}

const std::array<double, 4>& CosetTable::weights(const Syndrome& s) const { return w_[index(s)]; }

LogicalClass CosetTable::best_class(const Syndrome& s) const {
    return static_cast<LogicalClass>(best_[index(s)]);
}

bool CosetTable::judge_ml(const Pauli& error) const {
    size_t idx = index(syndrome(code_, error));
    Pauli r = multiply(error, reps_[idx]);
    bool cz = commutes(r, code_.logical_z);
    bool cx = commutes(r, code_.logical_x);
    int cls = (cz && cx) ? 0 : (cx ? 1 : (cz ? 3 : 2));
    return cls == best_[idx];
}

double CosetTable::exact_ml_rate() const {
    double fail = 0;
    for (const auto& w : w_) {
        double tot = w[0] + w[1] + w[2] + w[3];
        fail += tot - *std::max_element(w.begin(), w.end());
    }
    return fail;
}

double CosetTable::exact_mwpm_rate() const {
    double fail = 0;
    for (size_t idx = 0; idx < w_.size(); ++idx) {
        Syndrome s;
        s.m = m_;
        s.bits.lo = idx;
        Pauli corr = decode_mwpm(code_, s);
        Pauli r = multiply(reps_[idx], corr);
        bool cz = commutes(r, code_.logical_z);
        bool cx = commutes(r, code_.logical_x);
        int cls = (cz && cx) ? 0 : (cx ? 1 : (cz ? 3 : 2));
        const auto& w = w_[idx];
        fail += (w[0] + w[1] + w[2] + w[3]) - w[cls];
    }
    return fail;
}

double CosetTable::total_probability() const {
    double tot = 0;
    for (const auto& w : w_) tot += w[0] + w[1] + w[2] + w[3];
    return tot;
}

}  // namespace qsurf
