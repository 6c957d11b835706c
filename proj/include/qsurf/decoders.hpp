#pragma once

#include <array>
#include <vector>

#include "qsurf/channels.hpp"
#include "qsurf/codes.hpp"
#include "qsurf/matching.hpp"
#include "qsurf/pauli.hpp"

namespace qsurf {

enum class Decoder { mwpm, ml };
const char* decoder_name(Decoder d);

struct DecodeOutcome {
    Pauli correction;
    LogicalClass residual_class = LogicalClass::I;
    bool success = false;
};

// Minimum-weight perfect matching decoder. The X-type and Z-type sub-syndromes
// are decoded independently on their defect graphs with geometric edge weights;
// Y errors appear as coincident X and Z defects. For the xzzx variant the
// lattice matching is identical and the correction is conjugated back through
// the Hadamard mask.
Pauli decode_mwpm(const SurfaceCode& code, const Syndrome& s);

// Degenerate (coset-sum) maximum-likelihood decoder: picks the class L
// maximizing sum_S P(E_s L S) over the full stabilizer group. Exact, at the
// cost of 2^(n-k) terms per class; n-k <= 22 (single-syndrome spot mode).
Pauli decode_ml(const SurfaceCode& code, const Channel& ch, const Syndrome& s);

// Any fixed operator with the given syndrome (GF(2) solve; deterministic).
Pauli syndrome_representative(const SurfaceCode& code, const Syndrome& s);

// channel may be null for mwpm. Throws on mwpm + xzzx with a channel that is
// not pure-Z, and on ml without a channel.
DecodeOutcome decode_and_judge(const SurfaceCode& code, const Channel* ch, Decoder dec,
                               const Pauli& error);

// Exact coset weights W(L|s) for every syndrome of a small code (n-k <= 16;
// intended for n = 13). Gives the ML decision table and exact logical error
// rates by full probability-weighted enumeration, and a fast per-trial judge
// for Monte Carlo runs.
class CosetTable {
public:
    CosetTable(const SurfaceCode& code, const Channel& ch, int workers = 1);

    const std::array<double, 4>& weights(const Syndrome& s) const;
    LogicalClass best_class(const Syndrome& s) const;
    bool judge_ml(const Pauli& error) const;

    double exact_ml_rate() const;    // sum over syndromes of (total - best) coset weight
    double exact_mwpm_rate() const;  // same, with the class the mwpm correction lands on
    double total_probability() const;  // should be 1; numerical sanity handle

private:
    const SurfaceCode& code_;
    int m_;
    std::vector<Pauli> reps_;
    std::vector<std::array<double, 4>> w_;
    std::vector<uint8_t> best_;

    size_t index(const Syndrome& s) const;
};

}  // namespace qsurf
