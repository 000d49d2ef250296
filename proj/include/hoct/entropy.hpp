#pragma once

#include <cstdint>

#include "hoct/core.hpp"

namespace hoct {

// Zero-order Shannon entropy of the count table, bits per symbol.
// Returns 0 for totals of 0 or 1; 0*log 0 is taken as 0. Never negative.
double shannon_entropy(const SymbolCounts& c);

struct PairPrediction {
    std::uint64_t beta_count = 0;
    std::uint64_t gamma_count = 0;
};

// Post-exchange global counts of beta and gamma if every beta/gamma slot in
// `slots` were swapped: delta(beta) = slots(gamma) - slots(beta), integer
// exact. Requires beta != gamma and slot counts bounded by the globals.
PairPrediction predict_pair(const SymbolCounts& c, const SlotStats& slots,
                            std::uint8_t beta, std::uint8_t gamma);

struct EntropyDelta {
    double dh = 0.0;  // bits per symbol; negative means the exchange reduces entropy
    std::uint8_t beta = 0;
    std::uint8_t gamma = 0;
};

// Predicted entropy change of the exchange. Only the beta and gamma bins
// move, so the difference reduces to those two terms.
EntropyDelta entropy_change(const SymbolCounts& c, const SlotStats& slots,
                            std::uint8_t beta, std::uint8_t gamma);

// Raw form used by the search loop: entropy change from the four counts and
// the message length. Algebraically identical to the probability form; the
// n*log(n) parts cancel because the pair sum is preserved.
double pair_entropy_delta(std::uint64_t c0_beta, std::uint64_t c0_gamma,
                          std::uint64_t slot_beta, std::uint64_t slot_gamma,
                          std::uint64_t n);

// Concentration criterion: with equal pair sums, max(c1) > max(c0) implies a
// strict entropy reduction.
bool concentration_reduces(std::uint64_t c0_beta, std::uint64_t c0_gamma,
                      std::uint64_t c1_beta, std::uint64_t c1_gamma);

}  // namespace hoct
