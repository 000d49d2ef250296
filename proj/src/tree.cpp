#include "hoct/tree.hpp"

#include <vector>

namespace hoct {

std::size_t CtTree::transform_count() const {
    std::size_t total = 0;
    std::vector<const TransformNode*> stack;
    for (const ContextNode& c : contexts) {
        for (const TransformNode& t : c.children) stack.push_back(&t);
    }
    while (!stack.empty()) {
        const TransformNode* t = stack.back();
        stack.pop_back();
        ++total;
        for (const TransformNode& child : t->children) stack.push_back(&child);
    }
    return total;
}

}  // namespace hoct
