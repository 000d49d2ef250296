#pragma once

#include <cstdint>

#include "hoct/core.hpp"

namespace hoct {

// Full-message digram exchange, right-to-left: for i = n-2 .. 0, if
// m[i] == ctx then a following beta becomes gamma and vice versa. Scanning
// right to left means every context check sees the original symbol, which is
// what makes the entropy change exactly predictable.
void apply_digram_rtl(Bytes& m, std::uint8_t ctx, std::uint8_t beta, std::uint8_t gamma);

// Same exchange scanned left to right. The exact inverse of the RTL form
// (and vice versa), including chain cases where beta or gamma equals ctx.
void apply_digram_ltr(Bytes& m, std::uint8_t ctx, std::uint8_t beta, std::uint8_t gamma);

struct SlotExchangeResult {
    std::uint8_t sigma = 0;      // recursion context: the post-state majority symbol
    PositionSet next_positions;  // slots now holding sigma, ascending
};

// Swaps beta and gamma at the slot of every position in p, right to left.
// sigma is beta when gamma was the more frequent slot symbol, gamma
// otherwise (ties take gamma); next_positions are the slots that hold sigma
// afterwards. Positions outside the slots of p are never touched.
SlotExchangeResult exchange_at_slots(Bytes& m, const PositionSet& p,
                                     std::uint8_t beta, std::uint8_t gamma);

// Context symbol for the recursive descent, from pre-exchange slot counts.
// Mirrors the sigma rule of exchange_at_slots.
std::uint8_t recursion_target(std::uint64_t c0_beta, std::uint64_t c0_gamma,
                              std::uint8_t beta, std::uint8_t gamma);

}  // namespace hoct
