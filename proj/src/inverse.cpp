#include "hoct/inverse.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hoct/kernel.hpp"

namespace hoct {
namespace {

// Context positions as the forward pass saw them, for a context whose pair
// included the context symbol itself. That exchange mints new occurrences of
// `a` one past original ones, and only there: originals are never adjacent
// (the pair is only admissible while no slot holds `a`), so inside every run
// of `a` the occurrences alternate original, minted, original, ... starting
// with an original. Keeping exactly those recovers the forward position set.
PositionSet collect_unchained(const Bytes& m, std::uint8_t a) {
    PositionSet p;
    bool prev_original = false;
    for (std::size_t q = 0; q < m.size(); ++q) {
        if (m[q] != a) {
            prev_original = false;
            continue;
        }
        if (prev_original) {
            prev_original = false;  // minted by the exchange, skip
            continue;
        }
        p.push_back(static_cast<std::uint32_t>(q));
        prev_original = true;
    }
    return p;
}

struct Frame {
    const TransformNode* node;
    int parent;  // stack index of the parent frame, -1 = context level
    PositionSet q;
    bool expanded = false;
};

}  // namespace

void restore(Bytes& m, const CtTree& t) {
    const std::size_t n = m.size();

    for (auto it = t.contexts.rbegin(); it != t.contexts.rend(); ++it) {
        const ContextNode& ctx = *it;
        if (ctx.children.empty()) continue;
        const std::uint8_t alpha = ctx.symbol;

        bool has_alpha_pair = false;
        for (const TransformNode& c : ctx.children) {
            if (c.beta == alpha || c.gamma == alpha) has_alpha_pair = true;
        }
        const PositionSet p = has_alpha_pair ? collect_unchained(m, alpha)
                                             : collect_positions(m, alpha);

        // Undo in reverse application order: siblings right to left, each
        // node's subtree before the node itself. Frames reference parents by
        // index; the parent outlives all of its children on the stack.
        std::vector<Frame> stack;
        stack.reserve(ctx.children.size());
        for (const TransformNode& c : ctx.children) {
            stack.push_back(Frame{&c, -1, {}, false});
        }

        while (!stack.empty()) {
            const int i = static_cast<int>(stack.size()) - 1;
            Frame& f = stack[i];
            const TransformNode& nd = *f.node;

            if (!f.expanded) {
                f.expanded = true;
                if (!nd.children.empty()) {
                    // The subtree under nd never touches these slots, so the
                    // counts here equal the forward post-exchange counts and
                    // the sigma rule mirrors the forward one exactly.
                    const PositionSet& s = f.parent < 0 ? p : stack[f.parent].q;
                    std::uint64_t c1b = 0;
                    std::uint64_t c1g = 0;
                    for (std::uint32_t j : s) {
                        if (j + std::size_t{1} >= n) continue;
                        const std::uint8_t v = m[j + 1];
                        c1b += v == nd.beta;
                        c1g += v == nd.gamma;
                    }
                    const std::uint8_t sigma = c1b > c1g ? nd.beta : nd.gamma;
                    PositionSet q;
                    q.reserve(std::max(c1b, c1g));
                    for (std::uint32_t j : s) {
                        if (j + std::size_t{1} < n && m[j + 1] == sigma) {
                            q.push_back(j + 1);
                        }
                    }
                    f.q = std::move(q);
                    for (const TransformNode& c : nd.children) {
                        stack.push_back(Frame{&c, i, {}, false});
                    }
                }
                continue;
            }

            if (f.parent < 0 && (nd.beta == alpha || nd.gamma == alpha)) {
                apply_digram_ltr(m, alpha, nd.beta, nd.gamma);
            } else {
                const PositionSet& s = f.parent < 0 ? p : stack[f.parent].q;
                exchange_at_slots(m, s, nd.beta, nd.gamma);
            }
            stack.pop_back();
        }
    }
}

}  // namespace hoct
