#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <functional>

#include "hoct/core.hpp"
#include "hoct/tree.hpp"

namespace hoct {

// Changes smaller than this do not count as reductions; exact ties and
// floating dust are rejected so the engine cannot loop on dH == 0 pairs.
inline constexpr double kReductionEps = 1e-12;

struct EngineConfig {
    // Minimum total bit savings (dh * n) an exchange must reach to be
    // applied. 0 accepts every strict reduction.
    double lim = 0.0;

    // Bytes barred from appearing in any exchange pair.
    std::bitset<256> protected_symbols;

    // Header child-count fields are one byte, so 255 is the hard ceiling.
    int max_children_per_node = 255;

    // Restore the output in memory after the run and compare with the
    // input; throws VerificationError on mismatch.
    bool verify_round_trip = false;
};

// Multiset of symbols on the current context path. Symbols may repeat on a
// path (an exchange can descend into its own context symbol), hence counts
// rather than a set.
struct PathMask {
    std::array<std::uint16_t, 256> count{};

    void push(std::uint8_t b) { ++count[b]; }
    void pop(std::uint8_t b) { --count[b]; }
    bool contains(std::uint8_t b) const { return count[b] != 0; }
};

// Outcome of one pair search. dh == 0 with beta == gamma == the context
// symbol means no entropy-reducing pair exists.
struct SearchResult {
    std::uint8_t beta = 0;
    std::uint8_t gamma = 0;
    double dh = 0.0;
};

// Read-only view of the engine state a pair search runs against.
struct SearchContext {
    const SymbolCounts& globals;
    const SlotStats& slots;
    const std::vector<std::uint8_t>& order;  // initial frequency order
    const PathMask& path;
    std::uint8_t context = 0;  // last symbol of the context path
    int depth = 1;             // 1 = digram level
};

// A pair may not touch the context machinery that locates it: protected
// bytes never qualify; at depth 1 the context symbol itself only qualifies
// while no slot holds it; deeper pairs must avoid every path symbol.
bool admissible(const SearchContext& sc, std::uint8_t x, std::uint8_t y,
                const EngineConfig& cfg);

// Best admissible pair by entropy reduction over all candidate pairs in
// initial-order enumeration; ties keep the earliest pair. Candidates are the
// bytes with nonzero global or slot count.
SearchResult search_ct(const SearchContext& sc, const EngineConfig& cfg);

// Acceptance rule: a strict reduction that saves at least cfg.lim bits in
// total over the whole message.
bool accept(double dh, std::uint64_t n, const EngineConfig& cfg);

// Fired right after an exchange has been applied and the running statistics
// updated. The references stay valid only for the duration of the call.
struct TransformEvent {
    int depth = 1;
    std::uint8_t context = 0;  // last path symbol above the exchange
    std::uint8_t beta = 0;
    std::uint8_t gamma = 0;
    std::uint64_t slot_beta = 0;   // pre-exchange slot counts
    std::uint64_t slot_gamma = 0;
    std::uint64_t pred_beta = 0;   // predicted post-exchange global counts
    std::uint64_t pred_gamma = 0;
    double dh = 0.0;               // predicted entropy change, bits/symbol
    const Bytes& message;          // post-exchange state
    const SymbolCounts& globals;   // incrementally maintained, post-exchange
};

using TransformObserver = std::function<void(const TransformEvent&)>;

struct TransformSummary {
    CtTree tree;
    std::uint64_t transform_count = 0;
    double input_entropy = 0.0;
    double output_entropy = 0.0;
};

// Full forward transform: iterates context symbols in initial frequency
// order, greedily applies the best admissible exchange at each node and
// recurses into the majority branch. Mutates m in place and returns the
// tree that exactly records what was applied.
TransformSummary transform(Bytes& m, const EngineConfig& cfg = {},
                           const TransformObserver& observer = {});

}  // namespace hoct
