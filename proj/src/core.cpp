#include "hoct/core.hpp"

#include <algorithm>

namespace hoct {

SymbolCounts count_symbols(const Bytes& m) {
    SymbolCounts c;
    for (std::uint8_t b : m) ++c.count[b];
    c.total = m.size();
    return c;
}

std::vector<std::uint8_t> sorted_symbols(const SymbolCounts& c) {
    std::vector<std::uint8_t> s;
    for (int b = 0; b < 256; ++b) {
        if (c.count[b] > 0) s.push_back(static_cast<std::uint8_t>(b));
    }
    // Stable sort over the ascending byte list = descending count with ties
    // by ascending byte value.
    std::stable_sort(s.begin(), s.end(), [&](std::uint8_t a, std::uint8_t b) {
        return c.count[a] > c.count[b];
    });
    return s;
}

PositionSet collect_positions(const Bytes& m, std::uint8_t x) {
    PositionSet p;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] == x) p.push_back(static_cast<std::uint32_t>(j));
    }
    return p;
}

SlotStats slot_stats(const Bytes& m, const PositionSet& p) {
    SlotStats s;
    const std::size_t n = m.size();
    for (std::uint32_t j : p) {
        if (j + std::size_t{1} >= n) continue;
        s.counts.add(m[j + 1]);
    }
    return s;
}

}  // namespace hoct
