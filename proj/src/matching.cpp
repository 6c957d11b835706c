#include "qsurf/matching.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qsurf {

namespace {

// Combined cost packs the secondary objective (count of even-distance boundary
// edges, to be maximized) into the low bits so one DP minimizes both stages.
constexpr int64_t kStage = 64;

int ctz(uint32_t v) { return std::countr_zero(v); }

}  // namespace

DefectMatching match_defects(const DefectGraph& g) {
    const int k = static_cast<int>(g.boundary.size());
    DefectMatching out;
    if (k == 0) return out;
    if (k > 24) throw std::invalid_argument("too many defects for exact matching");

    auto bnd_cost = [&](int u) {
        int64_t c = int64_t{g.boundary[u]} * kStage;
        if (g.prefer_even_boundary && g.boundary[u] % 2 == 0) c -= 1;
        return c;
    };

    const uint32_t full = (k == 32) ? ~uint32_t{0} : ((uint32_t{1} << k) - 1);
    std::vector<int64_t> f(size_t{1} << k, 0);
    for (uint32_t s = 1; s <= full; ++s) {
        int u = ctz(s);
        int64_t best = bnd_cost(u) + f[s ^ (uint32_t{1} << u)];
        uint32_t rest = s ^ (uint32_t{1} << u);
        for (uint32_t t = rest; t; t &= t - 1) {
            int v = ctz(t);
            int64_t c = int64_t{g.dist[u][v]} * kStage + f[s ^ (uint32_t{1} << u) ^ (uint32_t{1} << v)];
            best = std::min(best, c);
        }
        f[s] = best;
    }

    // Greedy reconstruction: the lowest live defect takes its smallest-indexed
    // partner that still achieves the optimum, falling back to its boundary
    // node. This realizes the lexicographically smallest optimal edge list.
    uint32_t s = full;
    while (s) {
        int u = ctz(s);
        uint32_t su = s ^ (uint32_t{1} << u);
        bool paired = false;
        for (uint32_t t = su; t; t &= t - 1) {
            int v = ctz(t);
            if (int64_t{g.dist[u][v]} * kStage + f[su ^ (uint32_t{1} << v)] == f[s]) {
                out.pairs.emplace_back(u, v);
                out.weight += g.dist[u][v];
                s = su ^ (uint32_t{1} << v);
                paired = true;
                break;
            }
        }
        if (!paired) {
            out.to_boundary.push_back(u);
            out.weight += g.boundary[u];
            s = su;
        }
    }
    return out;
}

PerfectMatching min_weight_perfect_matching(const std::vector<std::vector<int64_t>>& w) {
    const int n = static_cast<int>(w.size());
    if (n % 2 != 0) throw std::invalid_argument("perfect matching needs an even node count");
    if (n > 22) throw std::invalid_argument("too many nodes for exact matching");
    PerfectMatching out;
    if (n == 0) return out;

    const uint32_t full = (uint32_t{1} << n) - 1;
    constexpr int64_t kInf = int64_t{1} << 62;
    std::vector<int64_t> f(size_t{1} << n, kInf);
    f[0] = 0;
    for (uint32_t s = 1; s <= full; ++s) {
        if (std::popcount(s) % 2 != 0) continue;
        int u = ctz(s);
        uint32_t rest = s ^ (uint32_t{1} << u);
        int64_t best = kInf;
        for (uint32_t t = rest; t; t &= t - 1) {
            int v = ctz(t);
            if (w[u][v] >= kNoEdge) continue;
            int64_t c = f[s ^ (uint32_t{1} << u) ^ (uint32_t{1} << v)];
            if (c < kInf) best = std::min(best, w[u][v] + c);
        }
        f[s] = best;
    }
    if (f[full] >= kInf) throw std::invalid_argument("graph admits no perfect matching");

    uint32_t s = full;
    while (s) {
        int u = ctz(s);
        uint32_t su = s ^ (uint32_t{1} << u);
        for (uint32_t t = su; t; t &= t - 1) {
            int v = ctz(t);
            if (w[u][v] >= kNoEdge) continue;
            if (w[u][v] + f[su ^ (uint32_t{1} << v)] == f[s]) {
                out.edges.emplace_back(u, v);
                out.weight += w[u][v];
                s = su ^ (uint32_t{1} << v);
                break;
            }
        }
    }
    return out;
}

}  // namespace qsurf
