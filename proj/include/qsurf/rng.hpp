#pragma once

#include <cstdint>

namespace qsurf {

// Counter-derived random stream. The whole state is a hash of
// (seed, point, trial), so any worker can regenerate any trial's stream
// without sharing generator state; results are independent of how trials
// are partitioned across threads.
class SplitRng {
public:
    SplitRng(uint64_t seed, uint64_t point, uint64_t trial) {
        state_ = mix(mix(mix(seed + 0x9e3779b97f4a7c15ull) ^ point) ^ trial);
    }

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t state_;
};

}  // namespace qsurf
