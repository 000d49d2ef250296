#include "hoct/entropy.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>

namespace hoct {
namespace {

// -c * log2(c), the count-level entropy term. The n-dependent parts of
// -p log2 p cancel across an exchange because the pair sum is preserved, so
// deltas built from this are exact: permuted counts give exactly 0.0.
double count_term(std::uint64_t c) {
    if (c == 0) return 0.0;
    const double d = static_cast<double>(c);
    return -d * std::log2(d);
}

}  // namespace

double shannon_entropy(const SymbolCounts& c) {
    if (c.total <= 1) return 0.0;
    // Accumulate in sorted-count order so the result depends only on the
    // multiset of counts: relabeling symbols yields a bit-identical H.
    std::array<std::uint64_t, 256> sorted = c.count;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(c.total);
    double h = 0.0;
    for (std::uint64_t cnt : sorted) {
        if (cnt == 0) continue;
        const double p = static_cast<double>(cnt) / n;
        h -= p * std::log2(p);
    }
    return std::max(h, 0.0);
}

PairPrediction predict_pair(const SymbolCounts& c, const SlotStats& slots,
                            std::uint8_t beta, std::uint8_t gamma) {
    assert(beta != gamma);
    const std::uint64_t sb = slots.counts.count[beta];
    const std::uint64_t sg = slots.counts.count[gamma];
    assert(sb <= c.count[beta] && sg <= c.count[gamma]);
    PairPrediction p;
    p.beta_count = c.count[beta] - sb + sg;
    p.gamma_count = c.count[gamma] - sg + sb;
    return p;
}

double pair_entropy_delta(std::uint64_t c0_beta, std::uint64_t c0_gamma,
                          std::uint64_t slot_beta, std::uint64_t slot_gamma,
                          std::uint64_t n) {
    assert(slot_beta <= c0_beta && slot_gamma <= c0_gamma);
    if (n == 0) return 0.0;
    const std::uint64_t c1_beta = c0_beta - slot_beta + slot_gamma;
    const std::uint64_t c1_gamma = c0_gamma - slot_gamma + slot_beta;
    // Group as (after sum) - (before sum): IEEE addition commutes, so swapping
    // (beta, gamma) gives a bit-identical delta, and a permuted pair gives
    // exactly 0.0 rather than rounding dust.
    const double after = count_term(c1_beta) + count_term(c1_gamma);
    const double before = count_term(c0_beta) + count_term(c0_gamma);
    return (after - before) / static_cast<double>(n);
}

EntropyDelta entropy_change(const SymbolCounts& c, const SlotStats& slots,
                            std::uint8_t beta, std::uint8_t gamma) {
    assert(beta != gamma);
    EntropyDelta d;
    d.beta = beta;
    d.gamma = gamma;
    d.dh = pair_entropy_delta(c.count[beta], c.count[gamma],
                              slots.counts.count[beta], slots.counts.count[gamma],
                              c.total);
    return d;
}

bool concentration_reduces(std::uint64_t c0_beta, std::uint64_t c0_gamma,
                      std::uint64_t c1_beta, std::uint64_t c1_gamma) {
    assert(c0_beta + c0_gamma == c1_beta + c1_gamma);
    return std::max(c1_beta, c1_gamma) > std::max(c0_beta, c0_gamma);
}

}  // namespace hoct
