#include "qsurf/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <thread>

#include "qsurf/rng.hpp"

namespace qsurf {

WilsonInterval wilson95(uint64_t failures, uint64_t trials) {
    if (trials == 0) throw std::invalid_argument("wilson interval needs trials >= 1");
    const double z = 1.959963984540054;
    double nd = static_cast<double>(trials);
    double p = static_cast<double>(failures) / nd;
    double z2n = z * z / nd;
    double denom = 1.0 + z2n;
    WilsonInterval w;
    w.center = (p + z2n / 2.0) / denom;
    w.halfwidth = z * std::sqrt(p * (1.0 - p) / nd + z2n / (4.0 * nd)) / denom;
    w.lo = std::max(0.0, w.center - w.halfwidth);
    w.hi = std::min(1.0, w.center + w.halfwidth);
    return w;
}

SimEstimate simulate(const SurfaceCode& code, Decoder dec, const Channel& ch, uint64_t trials,
                     uint64_t master_seed, uint64_t point_index, int workers) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (dec == Decoder::mwpm && code.variant == Variant::xzzx && !ch.pure_z())
        throw std::invalid_argument("mwpm on xzzx codes requires a pure-Z channel");

    std::optional<CosetTable> table;
    if (dec == Decoder::ml) {
        if (code.generators.size() > 16)
            throw std::invalid_argument("ml simulation needs the full coset table (n <= 17)");
        table.emplace(code, ch, workers);
    }

    workers = std::max(1, workers);
    std::vector<uint64_t> fails(workers, 0);
    auto run = [&](int wid, uint64_t begin, uint64_t end) {
        uint64_t f = 0;
        for (uint64_t t = begin; t < end; ++t) {
            SplitRng rng(master_seed, point_index, t);
            Pauli e = sample_error(ch, code.n, rng);
            bool ok;
            if (dec == Decoder::ml) {
                ok = table->judge_ml(e);
            } else {
                Pauli corr = decode_mwpm(code, syndrome(code, e));
                ok = logical_class(code, multiply(e, corr)) == LogicalClass::I;
            }
            if (!ok) ++f;
        }
        fails[wid] = f;
    };
    if (workers == 1) {
        run(0, 0, trials);
    } else {
        std::vector<std::thread> pool;
        uint64_t chunk = (trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            uint64_t b = w * chunk, e = std::min(trials, b + chunk);
            if (b < e) pool.emplace_back(run, w, b, e);
        }
        for (auto& th : pool) th.join();
    }

    SimEstimate est;
    est.code_id = code.id();
    est.decoder_id = decoder_name(dec);
    est.rho = ch.rho();
    est.bias = ch.bias();
    est.trials = trials;
    for (int w = 0; w < workers; ++w) est.failures += fails[w];
    est.p_hat = static_cast<double>(est.failures) / static_cast<double>(trials);
    WilsonInterval ci = wilson95(est.failures, trials);
    est.ci_halfwidth = ci.halfwidth;
    est.ci_lo = ci.lo;
    est.ci_hi = ci.hi;
    return est;
}

std::vector<SimEstimate> sweep(const SurfaceCode& code, Decoder dec,
                               const std::vector<double>& rhos, double bias,
                               uint64_t trials_per_point, uint64_t master_seed, int workers) {
    if (rhos.empty()) throw std::invalid_argument("empty rho grid");
    std::vector<SimEstimate> out;
    out.reserve(rhos.size());
    for (size_t i = 0; i < rhos.size(); ++i) {
        Channel ch = channel_from_bias(rhos[i], bias);
        out.push_back(simulate(code, dec, ch, trials_per_point, master_seed, i, workers));
    }
    return out;
}

int default_workers() {
    if (const char* env = std::getenv("QSURF_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace qsurf
