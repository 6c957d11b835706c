#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsurf/channels.hpp"
#include "qsurf/codes.hpp"
#include "qsurf/decoders.hpp"

namespace qsurf {

struct WilsonInterval {
    double center = 0;
    double halfwidth = 0;
    double lo = 0;
    double hi = 0;
};

// 95% Wilson score interval; well-behaved at the low failure counts that
// dominate the small-rho regime.
WilsonInterval wilson95(uint64_t failures, uint64_t trials);

struct SimEstimate {
    std::string code_id;
    std::string decoder_id;
    double rho = 0;
    double bias = 1;
    uint64_t trials = 0;
    uint64_t failures = 0;
    double p_hat = 0;
    double ci_halfwidth = 0;
    double ci_lo = 0;
    double ci_hi = 0;
};

// Monte Carlo logical error rate. Trial t draws its error from the counter
// stream (master_seed, point_index, t), so the result is bit-identical for a
// fixed seed regardless of worker count.
SimEstimate simulate(const SurfaceCode& code, Decoder dec, const Channel& ch, uint64_t trials,
                     uint64_t master_seed, uint64_t point_index = 0, int workers = 1);

// One simulate per rho with point_index = position in the grid.
std::vector<SimEstimate> sweep(const SurfaceCode& code, Decoder dec,
                               const std::vector<double>& rhos, double bias,
                               uint64_t trials_per_point, uint64_t master_seed, int workers = 1);

// QSURF_WORKERS env var, else hardware concurrency.
int default_workers();

}  // namespace qsurf
