#pragma once

#include <string>

#include "qsurf/pauli.hpp"
#include "qsurf/rng.hpp"

namespace qsurf {

class SplitRng;

// i.i.d. single-qubit Pauli channel: each qubit independently suffers X, Y or Z
// with probabilities px, py, pz (identity otherwise).
struct Channel {
    double px = 0;
    double py = 0;
    double pz = 0;

    double rho() const { return px + py + pz; }
    // A = 2 pz / (rho - pz); +inf for the phase-flip channel (rho == pz).
    double bias() const;
    bool pure_z() const { return px == 0 && py == 0; }
    std::string describe() const;
};

// bias in [1, inf]; px = py = rho/(A+2), pz = A*rho/(A+2). X-biased channels
// (A < 1) are rejected. bias = +inf gives the phase-flip channel.
Channel channel_from_bias(double rho, double bias);
Channel channel_from_probs(double px, double py, double pz);

Pauli sample_error(const Channel& ch, int n, SplitRng& rng);

// (1-rho)^(n-w) * px^nx * py^ny * pz^nz for the given pattern.
double pattern_probability(const Channel& ch, const Pauli& p);

}  // namespace qsurf
