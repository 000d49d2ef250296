#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "hoct/core.hpp"
#include "hoct/entropy.hpp"
#include "support/oracles.hpp"

using hoct::Bytes;
using oracle::from_string;

namespace {

hoct::SymbolCounts counts_of(const Bytes& m) { return hoct::count_symbols(m); }

// Builds consistent (globals, slots) pairs for fuzzing the predictors.
struct PairState {
    hoct::SymbolCounts globals;
    hoct::SlotStats slots;
};

PairState random_state(std::mt19937_64& rng) {
    PairState st;
    std::uniform_int_distribution<int> g(0, 200);
    for (int b = 0; b < 8; ++b) {
        const auto c = static_cast<std::uint64_t>(g(rng));
        st.globals.count[b] = c;
        st.globals.total += c;
        std::uniform_int_distribution<std::uint64_t> s(0, c);
        const auto sc = s(rng);
        st.slots.counts.count[b] = sc;
        st.slots.counts.total += sc;
    }
    return st;
}

}  // namespace

TEST_CASE("shannon_entropy basics") {
    hoct::SymbolCounts c;
    c.count['a'] = 2;
    c.count['b'] = 2;
    c.total = 4;
    CHECK(hoct::shannon_entropy(c) == doctest::Approx(1.0).epsilon(1e-12));

    hoct::SymbolCounts d;
    d.count['a'] = 4;
    d.total = 4;
    CHECK(hoct::shannon_entropy(d) == 0.0);

    CHECK(hoct::shannon_entropy({}) == 0.0);

    hoct::SymbolCounts one;
    one.count[7] = 1;
    one.total = 1;
    CHECK(hoct::shannon_entropy(one) == 0.0);
}

TEST_CASE("shannon_entropy uniform over 256 symbols is 8 bits") {
    hoct::SymbolCounts c;
    for (int b = 0; b < 256; ++b) c.count[b] = 3;
    c.total = 256 * 3;
    CHECK(hoct::shannon_entropy(c) == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("shannon_entropy matches the definitional oracle") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const Bytes m = oracle::skewed_msg(rng, 1 + oracle::log_uniform_len(rng, 8192), 200);
        CHECK(hoct::shannon_entropy(counts_of(m)) ==
              doctest::Approx(oracle::entropy_of(m)).epsilon(1e-12));
    }
}

TEST_CASE("shannon_entropy is permutation invariant") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 30; ++i) {
        hoct::SymbolCounts a;
        std::uniform_int_distribution<int> g(0, 50);
        for (int b = 0; b < 256; ++b) {
            a.count[b] = static_cast<std::uint64_t>(g(rng));
            a.total += a.count[b];
        }
        hoct::SymbolCounts p = a;
        std::shuffle(p.count.begin(), p.count.end(), rng);
        CHECK(hoct::shannon_entropy(a) == hoct::shannon_entropy(p));
    }
}

TEST_CASE("predict_pair moves exactly the slot difference") {
    // Mirrors m="acbbcb" with context 'a': globals b:3 c:2, slots {c:1}.
    hoct::SymbolCounts c;
    c.count['b'] = 3;
    c.count['c'] = 2;
    c.count['a'] = 1;
    c.total = 6;
    hoct::SlotStats s;
    s.counts.count['c'] = 1;
    s.counts.total = 1;

    const auto p = hoct::predict_pair(c, s, 'b', 'c');
    CHECK(p.beta_count == 4);
    CHECK(p.gamma_count == 1);
}

TEST_CASE("predict_pair with symmetric slots changes nothing") {
    hoct::SymbolCounts c;
    c.count['b'] = 7;
    c.count['c'] = 5;
    c.total = 12;
    hoct::SlotStats s;
    s.counts.count['b'] = 2;
    s.counts.count['c'] = 2;
    s.counts.total = 4;
    const auto p = hoct::predict_pair(c, s, 'b', 'c');
    CHECK(p.beta_count == 7);
    CHECK(p.gamma_count == 5);
}

TEST_CASE("predict_pair full transfer") {
    hoct::SymbolCounts c;
    c.count['c'] = 5;
    c.total = 5;
    hoct::SlotStats s;
    s.counts.count['c'] = 5;
    s.counts.total = 5;
    const auto p = hoct::predict_pair(c, s, 'b', 'c');
    CHECK(p.beta_count == 5);
    CHECK(p.gamma_count == 0);
}

TEST_CASE("predict_pair preserves the pair sum") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        const auto st = random_state(rng);
        const auto p = hoct::predict_pair(st.globals, st.slots, 2, 5);
        CHECK(p.beta_count + p.gamma_count == st.globals.count[2] + st.globals.count[5]);
    }
}

TEST_CASE("entropy_change on the worked example") {
    hoct::SymbolCounts c;
    c.count['a'] = 1;
    c.count['b'] = 3;
    c.count['c'] = 2;
    c.total = 6;
    hoct::SlotStats s;
    s.counts.count['c'] = 1;
    s.counts.total = 1;

    const auto d = hoct::entropy_change(c, s, 'b', 'c');
    CHECK(d.dh == doctest::Approx(-0.20752).epsilon(1e-4));

    // Recount cross-check: H({1,4,1}) - H({1,3,2}) over n=6.
    std::array<std::uint64_t, 256> before{};
    before['a'] = 1;
    before['b'] = 3;
    before['c'] = 2;
    std::array<std::uint64_t, 256> after{};
    after['a'] = 1;
    after['b'] = 4;
    after['c'] = 1;
    const double expect =
        oracle::entropy_of_counts(after, 6) - oracle::entropy_of_counts(before, 6);
    CHECK(d.dh == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("entropy_change is exactly zero for symmetric slots") {
    hoct::SymbolCounts c;
    c.count['b'] = 9;
    c.count['c'] = 4;
    c.total = 13;
    hoct::SlotStats s;
    s.counts.count['b'] = 3;
    s.counts.count['c'] = 3;
    s.counts.total = 6;
    CHECK(hoct::entropy_change(c, s, 'b', 'c').dh == 0.0);
}

TEST_CASE("entropy_change is exactly zero when counts merely swap") {
    // Globals (4,1) with slots (3,0) land on (1,4): the same multiset, so
    // the delta must be exactly 0.0, not merely tiny.
    hoct::SymbolCounts g;
    g.count['b'] = 4;
    g.count['c'] = 1;
    g.total = 5;
    hoct::SlotStats t;
    t.counts.count['b'] = 3;
    t.counts.total = 3;
    CHECK(hoct::entropy_change(g, t, 'b', 'c').dh == 0.0);
}

TEST_CASE("entropy_change pair symmetry") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 200; ++i) {
        const auto st = random_state(rng);
        const auto a = hoct::entropy_change(st.globals, st.slots, 1, 6);
        const auto b = hoct::entropy_change(st.globals, st.slots, 6, 1);
        CHECK(a.dh == b.dh);
    }
}

TEST_CASE("predicted dh equals recounted entropy difference") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 500; ++i) {
        const auto st = random_state(rng);
        if (st.globals.total == 0) continue;
        const auto d = hoct::entropy_change(st.globals, st.slots, 3, 4);
        const auto p = hoct::predict_pair(st.globals, st.slots, 3, 4);

        std::array<std::uint64_t, 256> before{};
        std::array<std::uint64_t, 256> after{};
        for (int b = 0; b < 256; ++b) before[b] = after[b] = st.globals.count[b];
        after[3] = p.beta_count;
        after[4] = p.gamma_count;
        const double expect = oracle::entropy_of_counts(after, st.globals.total) -
                              oracle::entropy_of_counts(before, st.globals.total);
        CHECK(std::abs(d.dh - expect) <= 1e-9);
    }
}

TEST_CASE("concentration_reduces examples") {
    CHECK(hoct::concentration_reduces(3, 2, 4, 1));
    CHECK_FALSE(hoct::concentration_reduces(4, 1, 3, 2));
    CHECK_FALSE(hoct::concentration_reduces(2, 2, 2, 2));
}

TEST_CASE("concentration criterion soundness, exhaustive over small sums") {
    // Every quadruple with equal pair sums <= 50, embedded in two fixed
    // backgrounds. Whenever the criterion fires, the exact dh must be
    // strictly negative.
    for (int background_bins : {1, 64}) {
        const std::uint64_t background = static_cast<std::uint64_t>(background_bins) * 7;
        for (std::uint64_t s = 0; s <= 50; ++s) {
            for (std::uint64_t c0b = 0; c0b <= s; ++c0b) {
                const std::uint64_t c0g = s - c0b;
                for (std::uint64_t c1b = 0; c1b <= s; ++c1b) {
                    const std::uint64_t c1g = s - c1b;
                    if (!hoct::concentration_reduces(c0b, c0g, c1b, c1g)) continue;
                    // Express the move as slot counts: one-sided transfer.
                    const std::uint64_t sb = c1b >= c0b ? 0 : c0b - c1b;
                    const std::uint64_t sg = c1b >= c0b ? c1b - c0b : 0;
                    const double dh =
                        hoct::pair_entropy_delta(c0b, c0g, sb, sg, s + background);
                    CHECK(dh < 0.0);
                }
            }
        }
    }
}
