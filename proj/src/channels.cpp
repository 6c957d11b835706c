#include "qsurf/channels.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qsurf {

double Channel::bias() const {
    // rho - pz == px + py, but the sum avoids cancellation at large bias
    double pxy = px + py;
    if (pxy == 0.0) return std::numeric_limits<double>::infinity();
    return 2 * pz / pxy;
}

std::string Channel::describe() const {
    std::ostringstream out;
    out << "rho=" << rho() << " A=" << bias();
    return out.str();
}

Channel channel_from_bias(double rho, double bias) {
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must be in [0,1]");
    if (std::isinf(bias)) return Channel{0.0, 0.0, rho};
    if (!(bias >= 1.0)) throw std::invalid_argument("bias must be >= 1 (Z-biased) or inf");
    double p = rho / (bias + 2.0);
    return Channel{p, p, bias * p};
}

Channel channel_from_probs(double px, double py, double pz) {
    if (px < 0 || py < 0 || pz < 0 || px + py + pz > 1.0)
        throw std::invalid_argument("invalid channel probabilities");
    return Channel{px, py, pz};
}

Pauli sample_error(const Channel& ch, int n, SplitRng& rng) {
    Pauli e = identity(n);
    double ax = ch.px, ay = ch.px + ch.py, az = ch.rho();
    for (int i = 0; i < n; ++i) {
        double u = rng.uniform();
        if (u >= az) continue;
        if (u < ax) {
            e.x.set(i);
        } else if (u < ay) {
            e.x.set(i);
            e.z.set(i);
        } else {
            e.z.set(i);
        }
    }
    return e;
}

double pattern_probability(const Channel& ch, const Pauli& p) {
    int nx = popcount(p.x & ~p.z);
    int nz = popcount(p.z & ~p.x);
    int ny = popcount(p.x & p.z);
    int w = nx + ny + nz;
    // pow(0,0) == 1 keeps phase-flip channels exact
    return std::pow(1.0 - ch.rho(), p.n - w) * std::pow(ch.px, nx) * std::pow(ch.py, ny) *
           std::pow(ch.pz, nz);
}

}  // namespace qsurf
