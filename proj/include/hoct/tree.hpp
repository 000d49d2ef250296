#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace hoct {

// One applied exchange: beta and gamma swapped at the slots of the parent
// context path. Children are exchanges one context level deeper, stored in
// application order.
struct TransformNode {
    std::uint8_t beta = 0;
    std::uint8_t gamma = 0;
    std::vector<TransformNode> children;

    bool operator==(const TransformNode&) const = default;
};

// Top-level context symbol with the exchanges applied under it.
struct ContextNode {
    std::uint8_t symbol = 0;
    std::vector<TransformNode> children;

    bool operator==(const ContextNode&) const = default;
};

// Ordered record of every applied exchange. Root children are context nodes
// only; everything deeper is a transform node. Left-to-right equals
// chronological application order.
struct CtTree {
    std::vector<ContextNode> contexts;

    bool operator==(const CtTree&) const = default;

    std::size_t context_count() const { return contexts.size(); }
    std::size_t transform_count() const;
};

}  // namespace hoct
