#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace hoct {

// Messages are plain byte sequences; the alphabet is always 0..255.
using Bytes = std::vector<std::uint8_t>;

// Strictly increasing indices into a message. 32-bit on purpose: the
// container format caps payloads at 4 GiB anyway.
using PositionSet = std::vector<std::uint32_t>;

// 256-bin occurrence table. Source of every probability used anywhere:
// p(x) = count[x] / total.
struct SymbolCounts {
    std::array<std::uint64_t, 256> count{};
    std::uint64_t total = 0;

    void add(std::uint8_t x) {
        ++count[x];
        ++total;
    }

    double probability(std::uint8_t x) const {
        return total ? static_cast<double>(count[x]) / static_cast<double>(total) : 0.0;
    }

    bool operator==(const SymbolCounts&) const = default;
};

// Occurrence table of the symbols one past each position of a PositionSet.
// counts.total equals the number of valid slots; a position at the very end
// of the message contributes no slot.
struct SlotStats {
    SymbolCounts counts;

    std::uint64_t slot_total() const { return counts.total; }
};

SymbolCounts count_symbols(const Bytes& m);

// Bytes with nonzero count, most frequent first. Ties break by ascending
// byte value so the whole transform is reproducible bit for bit.
std::vector<std::uint8_t> sorted_symbols(const SymbolCounts& c);

// All j with m[j] == x, ascending.
PositionSet collect_positions(const Bytes& m, std::uint8_t x);

SlotStats slot_stats(const Bytes& m, const PositionSet& p);

}  // namespace hoct
