// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Quantitative targets and tolerances are pinned in-line.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "qsurf/analysis.hpp"
#include "qsurf/decoders.hpp"
#include "qsurf/enumeration.hpp"
#include "qsurf/matching.hpp"
#include "qsurf/montecarlo.hpp"

using namespace qsurf;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

int g_failed = 0;

void verdict(int criterion, bool pass, const std::string& what) {
    std::printf("%s  criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, what.c_str());
    if (!pass) ++g_failed;
}

struct Entry {
    const char* label;
    double published;
};

bool check_row(const BetaRow& row, const std::vector<Entry>& entries, const char* code,
               int& misses) {
    bool ok = true;
    for (const Entry& e : entries) {
        double got = -1;
        std::string lbl = e.label;
        if (lbl == "agg") {
            got = row.one_minus_beta;
        } else if (lbl == "aggz") {
            got = row.one_minus_beta_z;
        } else {
            for (const ClassCount& c : row.classes)
                if (c.cls.label() == lbl) got = c.fraction();
        }
        double diff = std::abs(got - e.published);
        if (diff > 0.005) {
            std::printf("  - %s w%d %s: got %.4f, published %.3f (|diff| %.4f > 0.005)\n", code,
                        row.weight, e.label, got, e.published, diff);
            ok = false;
            ++misses;
        }
    }
    return ok;
}

int worker_count() { return default_workers(); }

}  // namespace

// 1. Table I reproduction at +/-0.005, including the exact zeros.
static void criterion1() {
    int W = worker_count();
    SurfaceCode c13 = build_surface_code(3, 3);
    SurfaceCode c23 = build_surface_code(3, 5);
    SurfaceCode c41 = build_surface_code(5, 5);

    BetaTable t13 = enumerate_beta(c13, Decoder::mwpm, nullptr, 3, kDefaultBudget, W);
    BetaTable t23 = enumerate_beta(c23, Decoder::mwpm, nullptr, 3, kDefaultBudget, W);
    BetaRow r41 = beta_row(c41, Decoder::mwpm, nullptr, 3, kDefaultBudget, W);

    int misses = 0;
    bool ok = true;
    ok &= check_row(*t13.row(2),
                    {{"agg", 0.24}, {"aggz", 0.27}, {"XX", 0.27}, {"XZ", 0.0}, {"XY", 0.28},
                     {"ZZ", 0.27}, {"ZY", 0.26}, {"YY", 0.51}},
                    "[[13,1,3]]", misses);
    ok &= check_row(*t13.row(3),
                    {{"agg", 0.52}, {"aggz", 0.53}, {"XXX", 0.52}, {"XXZ", 0.27}, {"XXY", 0.53},
                     {"XZZ", 0.27}, {"XZY", 0.45}, {"XYY", 0.67}, {"ZZZ", 0.53}, {"ZZY", 0.53},
                     {"ZYY", 0.68}, {"YYY", 0.78}},
                    "[[13,1,3]]", misses);
    ok &= check_row(*t23.row(2),
                    {{"agg", 0.07}, {"aggz", 0.0}, {"XX", 0.16}, {"XZ", 0.0}, {"XY", 0.16},
                     {"ZZ", 0.0}, {"ZY", 0.0}, {"YY", 0.15}},
                    "[[23,1,3/5]]", misses);
    ok &= check_row(*t23.row(3),
                    {{"agg", 0.20}, {"aggz", 0.08}, {"XXX", 0.39}, {"XXZ", 0.15}, {"XXY", 0.38},
                     {"XZZ", 0.0}, {"XZY", 0.15}, {"XYY", 0.39}, {"ZZZ", 0.08}, {"ZZY", 0.08},
                     {"ZYY", 0.22}, {"YYY", 0.45}},
                    "[[23,1,3/5]]", misses);
    ok &= check_row(r41,
                    {{"agg", 0.014}, {"aggz", 0.024}, {"XXX", 0.023}, {"XXZ", 0.0},
                     {"XXY", 0.023}, {"XZZ", 0.0}, {"XZY", 0.0}, {"XYY", 0.023}, {"ZZZ", 0.024},
                     {"ZZY", 0.024}, {"ZYY", 0.024}, {"YYY", 0.046}},
                    "[[41,1,5]]", misses);
    std::string what = "Table I reproduction, 52 published entries at +/-0.005";
    if (misses) what += " (" + std::to_string(misses) + " entries outside tolerance)";
    verdict(1, ok, what);
}

static void criterion2() {
    int W = worker_count();
    SurfaceCode c13 = build_surface_code(3, 3);
    SurfaceCode c41 = build_surface_code(5, 5);
    BetaRow r2_13 = beta_row(c13, Decoder::mwpm, nullptr, 2, kDefaultBudget, W);
    BetaRow r41 = beta_row(c41, Decoder::mwpm, nullptr, 3, kDefaultBudget, W);
    // [[13,1,3]]: the published 0.0534 is 1/(0.24*78) with the two-decimal
    // Table I figure, so the enumerated fraction is rounded the same way.
    double b2 = std::round(r2_13.one_minus_beta * 100.0) / 100.0;
    double thr13 = code_effective_threshold_approx(13, 1, b2, 0.0);
    bool ok13 = std::abs(thr13 - 0.0534) <= 0.0005;

    double thr41 = code_effective_threshold_approx(41, 2, r41.one_minus_beta, 0.0);
    bool ok41 = std::abs(thr41 / 0.0824 - 1.0) <= 0.01;

    SurfaceCode c23 = build_surface_code(3, 5);
    ClassCount zzz = beta_z(c23, Decoder::mwpm, nullptr, 3, kDefaultBudget, W);
    double thr23 = code_effective_threshold_approx(23, 2, zzz.fraction(), 0.0);
    bool ok23 = std::abs(thr23 / 0.086 - 1.0) <= 0.03;

    double thr13_g1 = code_effective_threshold_approx(13, 1, b2, 1.0);
    bool okg1 = std::abs(thr13_g1 - 0.1 * thr13) <= 1e-15;

    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "thresholds: [[13]] %.4f (0.0534+/-0.0005), [[41]] %.4f (0.0824+/-1%%), "
                  "[[23]] phase-flip %.4f (0.086+/-3%%), gamma=1 exact",
                  thr13, thr41, thr23);
    verdict(2, ok13 && ok41 && ok23 && okg1, buf);
}

static void criterion3() {
    SurfaceCode code = build_surface_code(3, 3);
    Pauli err = pauli_from_terms(13, {{2, 'Z'}, {3, 'Z'}});
    Syndrome s = syndrome(code, err);
    bool single = s.bits.test(0) && popcount(s.bits) == 1;
    Pauli corr = decode_mwpm(code, s);
    DecodeOutcome out = decode_and_judge(code, nullptr, Decoder::mwpm, err);
    bool ok = single && to_string(corr) == "Z1" && !out.success &&
              out.residual_class == LogicalClass::Z;
    verdict(3, ok, "worked example: Z2 Z3 -> defect at check 1, correction Z1, residual class Z");
}

static void criterion4() {
    std::mt19937 gen(20240418);
    std::uniform_real_distribution<double> urho(1e-4, 0.3);
    const double biases[] = {1.0, 2.0, 10.0, 100.0};
    const int ns[] = {13, 23, 33, 41};
    bool ok = true;
    for (int it = 0; it < 500 && ok; ++it) {
        int n = ns[gen() % 4];
        int eg = 1 + static_cast<int>(gen() % 2);
        int ez = static_cast<int>(gen() % 3);
        double rho = urho(gen);
        double bias = biases[gen() % 4];
        double pz = bias * rho / (bias + 2.0);
        double lhs = logical_error_asym(n, eg, ez, pz, rho);
        double rhs = logical_error_alpha_form(n, eg, ez, rho, bias);
        if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, std::abs(lhs))) ok = false;
        // e_Z = 0 special case collapses to Eq. (1)
        double b = logical_error_bounded(n, eg, rho);
        if (std::abs(logical_error_asym(n, eg, 0, pz, rho) - b) >
            1e-12 * std::max(1.0, b))
            ok = false;
        // beta sum with all beta = 0 above t degenerates the same way
        if (std::abs(logical_error_beta(n, eg, rho, BetaVector{eg + 1, {}}) - b) >
            1e-12 * std::max(1.0, b))
            ok = false;
    }
    verdict(4, ok, "formula identities at 1e-12 on a randomized parameter grid");
}

static void criterion5() {
    int W = worker_count();
    SurfaceCode code = build_surface_code(3, 3);
    Channel ch = channel_from_bias(0.1, 1.0);
    CosetTable table(code, ch, W);
    double exact_ml = table.exact_ml_rate();
    double exact_mwpm = table.exact_mwpm_rate();

    SimEstimate mwpm = simulate(code, Decoder::mwpm, ch, 100000, 52001, 0, W);
    SimEstimate ml = simulate(code, Decoder::ml, ch, 100000, 52002, 0, W);
    bool ok_mwpm = std::abs(mwpm.p_hat - exact_mwpm) <= 3 * mwpm.ci_halfwidth;
    bool ok_ml = std::abs(ml.p_hat - exact_ml) <= 3 * ml.ci_halfwidth;
    bool ok_order = exact_ml <= exact_mwpm;

    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "exact vs MC at rho=0.1, A=1: mwpm exact %.5f vs p_hat %.5f, "
                  "ml exact %.5f vs p_hat %.5f, ml <= mwpm",
                  exact_mwpm, mwpm.p_hat, exact_ml, ml.p_hat);
    verdict(5, ok_mwpm && ok_ml && ok_order, buf);
}

static void criterion6() {
    int W = worker_count();
    const std::vector<double> rhos = {0.01, 0.023, 0.047};
    SurfaceCode c13 = build_surface_code(3, 3);
    SurfaceCode c23 = build_surface_code(3, 5);
    BetaVector beta13{2, {0.76, 0.48, 0.48, 0.46, 0.5}};       // exhaustive w2-w3, pure-Z above
    BetaVector beta23z{3, {0.92, 0.76, 0.59, 0.52, 0.49}};     // phase-flip set
    bool ok = true;
    for (size_t i = 0; i < rhos.size(); ++i) {
        double rho = rhos[i];
        SimEstimate sim = simulate(c13, Decoder::mwpm, channel_from_bias(rho, 1.0), 100000,
                                   61000 + i, i, W);
        double ref = logical_error_beta(13, 1, rho, beta13);
        if (std::abs(sim.p_hat - ref) > 3 * sim.ci_halfwidth) {
            std::printf("  - [[13]] depolarizing rho=%.3f: p_hat %.5f vs Eq8 %.5f (3hw %.5f)\n",
                        rho, sim.p_hat, ref, 3 * sim.ci_halfwidth);
            ok = false;
        }
        SimEstimate simz = simulate(c23, Decoder::mwpm, channel_from_bias(rho, kInf), 100000,
                                    62000 + i, i, W);
        double refz = logical_error_beta_z(23, 2, rho, beta23z);
        if (std::abs(simz.p_hat - refz) > 3 * simz.ci_halfwidth) {
            std::printf("  - [[23]] phase-flip rho=%.3f: p_hat %.5f vs Eq10 %.5f (3hw %.5f)\n",
                        rho, simz.p_hat, refz, 3 * simz.ci_halfwidth);
            ok = false;
        }
    }
    verdict(6, ok, "simulation within 3 CI half-widths of the beta-weighted formulas");
}

static void criterion7() {
    int W = worker_count();
    const double rho = 0.06;
    SurfaceCode c13 = build_surface_code(3, 3);
    SurfaceCode c23 = build_surface_code(3, 5);
    SurfaceCode c33 = build_surface_code(3, 7);
    SurfaceCode c41 = build_surface_code(5, 5);
    auto run = [&](const SurfaceCode& code, double bias, uint64_t seed) {
        return simulate(code, Decoder::mwpm, channel_from_bias(rho, bias), 100000, seed, 0, W);
    };
    SimEstimate a13 = run(c13, 1.0, 71001), a23 = run(c23, 1.0, 71002),
                a33 = run(c33, 1.0, 71003), a41 = run(c41, 1.0, 71004);
    SimEstimate b13 = run(c13, 10.0, 72001), b23 = run(c23, 10.0, 72002),
                b33 = run(c33, 10.0, 72003), b41 = run(c41, 10.0, 72004);

    bool a_order = a41.ci_hi < a23.ci_lo;  // [[41]] beats [[23]] under depolarizing
    bool a_worst = a33.ci_lo > std::max({a13.ci_hi, a23.ci_hi, a41.ci_hi});
    bool b_order = b23.ci_hi < b41.ci_lo;  // [[23]] beats [[41]] at A = 10
    bool b_best = b33.ci_hi < std::min({b13.ci_lo, b23.ci_lo, b41.ci_lo});

    std::printf("  - A=1 : p13 %.4f p23 %.4f p33 %.4f p41 %.4f\n", a13.p_hat, a23.p_hat,
                a33.p_hat, a41.p_hat);
    std::printf("  - A=10: p13 %.4f p23 %.4f p33 %.4f p41 %.4f\n", b13.p_hat, b23.p_hat,
                b33.p_hat, b41.p_hat);
    verdict(7, a_order && a_worst && b_order && b_best,
            "asymmetric-code ordering at rho=0.06 with non-overlapping 95% CIs");
}

static void criterion8() {
    int W = worker_count();
    Channel pf = channel_from_bias(0.1, kInf);
    double r_css = CosetTable(build_surface_code(3, 3), pf, W).exact_ml_rate();
    double r_xzzx = CosetTable(build_xzzx_code(3, 3), pf, W).exact_ml_rate();
    double ratio = r_css / r_xzzx;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "xzzx advantage, exact ML at A=inf rho=0.1: css %.5f, xzzx %.5f, "
                  "ratio %.3f (required >= 2)",
                  r_css, r_xzzx, ratio);
    verdict(8, r_xzzx < r_css && ratio >= 2.0, buf);
}

static void criterion9() {
    bool ok = true;
    std::mt19937 gen(90001);

    // decoder soundness on random errors
    for (auto [dx, dz] : {std::pair{3, 3}, {3, 5}, {3, 7}, {5, 5}}) {
        SurfaceCode code = build_surface_code(dx, dz);
        std::uniform_int_distribution<int> letter(0, 3);
        for (int it = 0; it < 10000; ++it) {
            Pauli e = identity(code.n);
            for (int q = 0; q < code.n; ++q) {
                switch (letter(gen)) {
                    case 1: e.x.set(q); break;
                    case 2: e.z.set(q); break;
                    case 3: e.x.set(q); e.z.set(q); break;
                    default: break;
                }
            }
            Syndrome s = syndrome(code, e);
            if (!(syndrome(code, decode_mwpm(code, s)).bits == s.bits)) {
                ok = false;
                break;
            }
        }
        // guaranteed radius: every weight <= t error corrects
        int t = (std::min(dx, dz) - 1) / 2;
        for (int a = 1; a <= code.n && ok; ++a)
            for (char la : {'X', 'Z', 'Y'}) {
                if (!decode_and_judge(code, nullptr, Decoder::mwpm,
                                      pauli_from_terms(code.n, {{a, la}}))
                         .success)
                    ok = false;
                if (t < 2) continue;
                for (int b = a + 1; b <= code.n && ok; ++b)
                    for (char lb : {'X', 'Z', 'Y'})
                        if (!decode_and_judge(code, nullptr, Decoder::mwpm,
                                              pauli_from_terms(code.n, {{a, la}, {b, lb}}))
                                 .success)
                            ok = false;
            }
    }

    // matching engine vs brute-force oracle
    std::uniform_int_distribution<int> wdist(1, 25);
    for (int it = 0; it < 500 && ok; ++it) {
        int n = 2 * (1 + static_cast<int>(gen() % 5));
        std::vector<std::vector<int64_t>> w(n, std::vector<int64_t>(n, 0));
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) w[a][b] = w[b][a] = wdist(gen);
        auto brute = [&](auto&& self, std::vector<int> nodes) -> int64_t {
            if (nodes.empty()) return 0;
            int64_t best = int64_t{1} << 60;
            for (size_t i = 1; i < nodes.size(); ++i) {
                std::vector<int> rest;
                for (size_t j = 1; j < nodes.size(); ++j)
                    if (j != i) rest.push_back(nodes[j]);
                best = std::min(best, w[nodes[0]][nodes[i]] + self(self, rest));
            }
            return best;
        };
        std::vector<int> nodes(n);
        for (int i = 0; i < n; ++i) nodes[i] = i;
        if (min_weight_perfect_matching(w).weight != brute(brute, nodes)) ok = false;
    }

    verdict(9, ok, "decoder soundness, guaranteed radius, and matching oracle equivalence");
}

int main(int argc, char** argv) {
    int only = 0;  // 0 = run everything
    if (argc > 1) only = std::atoi(argv[1]);
    std::printf("acceptance suite (workers=%d)%s%d\n", worker_count(),
                only ? ", criterion " : ", criteria 1-", only ? only : 9);
    void (*steps[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                         criterion6, criterion7, criterion8, criterion9};
    for (int i = 1; i <= 9; ++i)
        if (!only || only == i) steps[i - 1]();
    if (!only) std::printf("%d of 9 criteria failed\n", g_failed);
    return g_failed;
}
