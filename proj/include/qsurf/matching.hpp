#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qsurf {

// Defect graph for one error type: one node per flipped check plus an implicit
// virtual boundary node per defect. Defect-defect weights are shortest-path
// lattice distances, defect-to-own-boundary weights the distance to the
// matching edge type; boundary-boundary edges are free, so boundary nodes pad
// the matching parity.
struct DefectGraph {
    std::vector<std::vector<int>> dist;  // symmetric pairwise distances
    std::vector<int> boundary;           // per-defect boundary distance
    // Site (Z-defect) graphs resolve weight ties in favour of matchings that
    // extract defects through even-distance boundaries; plaquette graphs don't.
    bool prefer_even_boundary = false;
};

struct DefectMatching {
    std::vector<std::pair<int, int>> pairs;  // defect index pairs, i < j
    std::vector<int> to_boundary;            // defects matched to their boundary node
    int64_t weight = 0;
};

// Exact minimum-weight matching of all defects (pairing or boundary
// extraction), by dynamic programming over defect subsets. Ties resolve by the
// graph's boundary-parity stage, then by lexicographically smallest edge list
// with pair edges (u,v) ordering before the boundary edge of u.
// Throws if there are more than 24 defects.
DefectMatching match_defects(const DefectGraph& g);

// General exact minimum-weight perfect matching on a dense symmetric weight
// matrix (use kNoEdge for absent edges). Deterministic: among optima returns
// the lexicographically smallest edge list under node-index order.
// Node count must be even and at most 22.
inline constexpr int64_t kNoEdge = int64_t{1} << 56;

struct PerfectMatching {
    std::vector<std::pair<int, int>> edges;
    int64_t weight = 0;
};

PerfectMatching min_weight_perfect_matching(const std::vector<std::vector<int64_t>>& w);

}  // namespace qsurf
