#include "hoct/engine.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "hoct/entropy.hpp"
#include "hoct/errors.hpp"
#include "hoct/inverse.hpp"
#include "hoct/kernel.hpp"

namespace hoct {

bool admissible(const SearchContext& sc, std::uint8_t x, std::uint8_t y,
                const EngineConfig& cfg) {
    if (cfg.protected_symbols.test(x) || cfg.protected_symbols.test(y)) return false;
    if (sc.depth == 1) {
        // The context symbol may join a pair only while no slot holds it;
        // otherwise the chain of fresh context occurrences could not be told
        // apart from the original ones when inverting.
        if ((x == sc.context || y == sc.context) &&
            sc.slots.counts.count[sc.context] != 0) {
            return false;
        }
        return true;
    }
    // Deeper pairs must avoid every symbol on the context path so all
    // ancestor position sets stay valid.
    return !sc.path.contains(x) && !sc.path.contains(y);
}

SearchResult search_ct(const SearchContext& sc, const EngineConfig& cfg) {
    SearchResult best;
    best.beta = sc.context;
    best.gamma = sc.context;
    best.dh = 0.0;

    const std::uint64_t n = sc.globals.total;
    if (n == 0) return best;

    const std::vector<std::uint8_t>& order = sc.order;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const std::uint8_t x = order[i];
        const std::uint64_t sx = sc.slots.counts.count[x];
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            const std::uint8_t y = order[j];
            const std::uint64_t sy = sc.slots.counts.count[y];
            // Equal slot counts make the exchange a pure permutation of the
            // two bins: dh is exactly 0, never an improvement.
            if (sx == sy) continue;
            if (!admissible(sc, x, y, cfg)) continue;
            const double dh = pair_entropy_delta(sc.globals.count[x], sc.globals.count[y],
                                                 sx, sy, n);
            // Strict < keeps the earliest pair in enumeration order on ties.
            if (dh < best.dh) {
                best.beta = x;
                best.gamma = y;
                best.dh = dh;
            }
        }
    }
    return best;
}

bool accept(double dh, std::uint64_t n, const EngineConfig& cfg) {
    if (!(dh < -kReductionEps)) return false;
    return dh * static_cast<double>(n) <= -cfg.lim;
}

namespace {

// One node of the current descent path. `children` points into the tree
// under construction; only the top frame ever appends, so the pointer stays
// valid for the frame's whole lifetime.
struct Frame {
    std::vector<TransformNode>* children;
    PositionSet positions;  // context positions; the node acts on their slots
    SlotStats stats;        // over those slots, maintained incrementally
    std::uint8_t symbol;    // path symbol this frame contributed
    int depth;
};

}  // namespace

TransformSummary transform(Bytes& m, const EngineConfig& cfg,
                           const TransformObserver& observer) {
    TransformSummary out;

    SymbolCounts globals = count_symbols(m);
    out.input_entropy = shannon_entropy(globals);
    const std::uint64_t n = globals.total;

    Bytes original;
    if (cfg.verify_round_trip) original = m;

    const std::vector<std::uint8_t> order = sorted_symbols(globals);
    const int max_children = std::clamp(cfg.max_children_per_node, 1, 255);

    // Root child counts are one header byte, so at most 255 context symbols
    // take part; a message using all 256 values drops the least frequent.
    const std::size_t context_limit = std::min<std::size_t>(order.size(), 255);

    PathMask path;
    std::vector<Frame> stack;

    for (std::size_t ci = 0; ci < context_limit; ++ci) {
        const std::uint8_t alpha = order[ci];
        ContextNode& ctx = out.tree.contexts.emplace_back();
        ctx.symbol = alpha;

        // Positions come from the current message state: earlier contexts may
        // have moved occurrences of alpha around.
        PositionSet p = collect_positions(m, alpha);
        SlotStats stats = slot_stats(m, p);
        path.push(alpha);
        stack.push_back(Frame{&ctx.children, std::move(p), std::move(stats), alpha, 1});

        while (!stack.empty()) {
            Frame& f = stack.back();

            SearchResult best;
            if (static_cast<int>(f.children->size()) < max_children) {
                const SearchContext sc{globals, f.stats, order, path, f.symbol, f.depth};
                best = search_ct(sc, cfg);
            }
            if (!accept(best.dh, n, cfg)) {
                path.pop(f.symbol);
                stack.pop_back();
                continue;
            }

            const std::uint8_t x = best.beta;
            const std::uint8_t y = best.gamma;
            const std::uint64_t sx = f.stats.counts.count[x];
            const std::uint64_t sy = f.stats.counts.count[y];
            const PairPrediction pred = predict_pair(globals, f.stats, x, y);
            const std::uint8_t sigma = recursion_target(sx, sy, x, y);

            PositionSet next;
            if (f.depth == 1 && (x == f.symbol || y == f.symbol)) {
                // A pair containing the context symbol itself chains: freshly
                // created context occurrences must not react, which is exactly
                // what the right-to-left scan guarantees.
                apply_digram_rtl(m, f.symbol, x, y);
                next.reserve(std::max(sx, sy));
                for (std::uint32_t j : f.positions) {
                    if (j + std::size_t{1} < m.size() && m[j + 1] == sigma) {
                        next.push_back(j + 1);
                    }
                }
            } else {
                SlotExchangeResult r = exchange_at_slots(m, f.positions, x, y);
                assert(r.sigma == sigma);
                next = std::move(r.next_positions);
            }

            // The exchange swapped the two bins at this node's slots; deeper
            // exchanges cannot touch them (their pairs avoid the path and
            // their positions are disjoint), so the swap keeps stats exact
            // until this frame is done.
            std::swap(f.stats.counts.count[x], f.stats.counts.count[y]);
            globals.count[x] = pred.beta_count;
            globals.count[y] = pred.gamma_count;
            ++out.transform_count;

            if (observer) {
                observer(TransformEvent{f.depth, f.symbol, x, y, sx, sy,
                                        pred.beta_count, pred.gamma_count, best.dh,
                                        m, globals});
            }

            f.children->push_back(TransformNode{x, y, {}});
            TransformNode& child = f.children->back();
            SlotStats child_stats = slot_stats(m, next);
            path.push(sigma);
            stack.push_back(Frame{&child.children, std::move(next),
                                  std::move(child_stats), sigma, f.depth + 1});
        }
    }

    out.output_entropy = shannon_entropy(globals);

    if (cfg.verify_round_trip) {
        Bytes check = m;
        restore(check, out.tree);
        if (check != original) {
            throw VerificationError("round-trip verification failed: restored output differs from the input");
        }
    }
    return out;
}

}  // namespace hoct
