#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "qsurf/montecarlo.hpp"
#include "qsurf/rng.hpp"

using namespace qsurf;

TEST_CASE("wilson interval") {
    WilsonInterval w = wilson95(0, 1000);
    CHECK(w.lo < 1e-12);
    CHECK(w.halfwidth > 0.0);
    WilsonInterval mid = wilson95(500, 1000);
    CHECK(mid.center == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(mid.halfwidth == doctest::Approx(1.96 * std::sqrt(0.25 / 1000)).epsilon(0.01));
    CHECK_THROWS_AS(wilson95(0, 0), std::invalid_argument);
}

TEST_CASE("wilson coverage on a rigged bernoulli failure source") {
    // 200 repeated experiments against a known failure probability q
    const double q = 0.1;
    const uint64_t trials = 500;
    int covered = 0;
    for (uint64_t exp = 0; exp < 200; ++exp) {
        uint64_t fails = 0;
        for (uint64_t t = 0; t < trials; ++t) {
            SplitRng rng(9000 + exp, 0, t);
            if (rng.uniform() < q) ++fails;
        }
        WilsonInterval w = wilson95(fails, trials);
        if (w.lo <= q && q <= w.hi) ++covered;
    }
    CHECK(covered >= 186);  // >= 93% of 200
}

TEST_CASE("zero-rate channel never fails") {
    SurfaceCode code = build_surface_code(3, 3);
    Channel ch = channel_from_bias(0.0, 1.0);
    SimEstimate est = simulate(code, Decoder::mwpm, ch, 2000, 1);
    CHECK(est.failures == 0);
    CHECK(est.p_hat == 0.0);
}

TEST_CASE("bit-identical across worker counts and repeated runs") {
    SurfaceCode code = build_surface_code(3, 3);
    Channel ch = channel_from_bias(0.08, 1.0);
    SimEstimate a = simulate(code, Decoder::mwpm, ch, 20000, 77, 4, 1);
    SimEstimate b = simulate(code, Decoder::mwpm, ch, 20000, 77, 4, 2);
    SimEstimate c = simulate(code, Decoder::mwpm, ch, 20000, 77, 4, 3);
    CHECK(a.failures == b.failures);
    CHECK(b.failures == c.failures);
    SimEstimate d = simulate(code, Decoder::mwpm, ch, 20000, 78, 4, 2);
    CHECK(d.failures != a.failures);  // different seed, different draw
}

TEST_CASE("monte carlo agrees with exact weighted enumeration") {
    SurfaceCode code = build_surface_code(3, 3);
    Channel ch = channel_from_bias(0.1, 1.0);
    CosetTable table(code, ch, 2);
    SimEstimate mwpm = simulate(code, Decoder::mwpm, ch, 100000, 20240101, 0, 2);
    CHECK(std::abs(mwpm.p_hat - table.exact_mwpm_rate()) <= 3 * mwpm.ci_halfwidth);
    SimEstimate ml = simulate(code, Decoder::ml, ch, 100000, 20240102, 0, 2);
    CHECK(std::abs(ml.p_hat - table.exact_ml_rate()) <= 3 * ml.ci_halfwidth);
}

TEST_CASE("sweep matches pointwise simulate") {
    SurfaceCode code = build_surface_code(3, 3);
    auto pts = sweep(code, Decoder::mwpm, {0.05}, 1.0, 5000, 11, 2);
    REQUIRE(pts.size() == 1);
    Channel ch = channel_from_bias(0.05, 1.0);
    SimEstimate direct = simulate(code, Decoder::mwpm, ch, 5000, 11, 0, 2);
    CHECK(pts[0].failures == direct.failures);
    CHECK_THROWS_AS(sweep(code, Decoder::mwpm, {}, 1.0, 10, 1), std::invalid_argument);
}

TEST_CASE("incompatible decoder/code pairs are rejected") {
    SurfaceCode xzzx = build_xzzx_code(3, 3);
    Channel dep = channel_from_bias(0.1, 1.0);
    CHECK_THROWS_AS(simulate(xzzx, Decoder::mwpm, dep, 100, 1), std::invalid_argument);
    Channel pf = channel_from_bias(0.1, std::numeric_limits<double>::infinity());
    CHECK_NOTHROW(simulate(xzzx, Decoder::mwpm, pf, 100, 1));
    SurfaceCode big = build_surface_code(3, 5);
    CHECK_THROWS_AS(simulate(big, Decoder::ml, dep, 100, 1), std::invalid_argument);
}
