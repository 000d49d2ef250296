#include "hoct/kernel.hpp"

#include <algorithm>
#include <cassert>

namespace hoct {

void apply_digram_rtl(Bytes& m, std::uint8_t ctx, std::uint8_t beta, std::uint8_t gamma) {
    assert(beta != gamma);
    if (m.size() < 2) return;
    for (std::size_t i = m.size() - 1; i-- > 0;) {
        if (m[i] != ctx) continue;
        if (m[i + 1] == beta) {
            m[i + 1] = gamma;
        } else if (m[i + 1] == gamma) {
            m[i + 1] = beta;
        }
    }
}

void apply_digram_ltr(Bytes& m, std::uint8_t ctx, std::uint8_t beta, std::uint8_t gamma) {
    assert(beta != gamma);
    if (m.size() < 2) return;
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
        if (m[i] != ctx) continue;
        if (m[i + 1] == beta) {
            m[i + 1] = gamma;
        } else if (m[i + 1] == gamma) {
            m[i + 1] = beta;
        }
    }
}

std::uint8_t recursion_target(std::uint64_t c0_beta, std::uint64_t c0_gamma,
                              std::uint8_t beta, std::uint8_t gamma) {
    // The descent follows the post-exchange majority symbol; on a tie the
    // gamma branch is taken so the inverse can reproduce the choice.
    return c0_gamma > c0_beta ? beta : gamma;
}

SlotExchangeResult exchange_at_slots(Bytes& m, const PositionSet& p,
                                     std::uint8_t beta, std::uint8_t gamma) {
    assert(beta != gamma);
    const std::size_t n = m.size();

    std::uint64_t c0_beta = 0;
    std::uint64_t c0_gamma = 0;
    for (std::uint32_t j : p) {
        if (j + std::size_t{1} >= n) continue;
        const std::uint8_t v = m[j + 1];
        c0_beta += v == beta;
        c0_gamma += v == gamma;
    }

    SlotExchangeResult r;
    r.sigma = recursion_target(c0_beta, c0_gamma, beta, gamma);
    r.next_positions.reserve(std::max(c0_beta, c0_gamma));

    // Right to left like the full-message scan; the swaps are independent,
    // so this is also just the unordered exchange.
    for (std::size_t k = p.size(); k-- > 0;) {
        const std::uint32_t j = p[k];
        if (j + std::size_t{1} >= n) continue;
        std::uint8_t& v = m[j + 1];
        if (v == beta) {
            v = gamma;
        } else if (v == gamma) {
            v = beta;
        }
        if (v == r.sigma) r.next_positions.push_back(j + 1);
    }
    std::reverse(r.next_positions.begin(), r.next_positions.end());
    return r;
}

}  // namespace hoct
