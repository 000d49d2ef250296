#include <random>

#include "doctest.h"
#include "hoct/core.hpp"
#include "support/oracles.hpp"

using hoct::Bytes;
using oracle::from_string;

TEST_CASE("count_symbols counts occurrences and total") {
    const auto c = hoct::count_symbols(from_string("aabb"));
    CHECK(c.count['a'] == 2);
    CHECK(c.count['b'] == 2);
    CHECK(c.count['c'] == 0);
    CHECK(c.total == 4);
}

TEST_CASE("count_symbols on empty input is all zero") {
    const auto c = hoct::count_symbols({});
    CHECK(c.total == 0);
    for (auto v : c.count) CHECK(v == 0);
}

TEST_CASE("count_symbols total always equals length") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        const Bytes m = oracle::uniform_msg(rng, oracle::log_uniform_len(rng, 4096), 256);
        const auto c = hoct::count_symbols(m);
        CHECK(c.total == m.size());
        const auto ref = oracle::recount(m);
        for (int b = 0; b < 256; ++b) CHECK(c.count[b] == ref[b]);
    }
}

TEST_CASE("sorted_symbols orders by descending count") {
    hoct::SymbolCounts c;
    c.count['a'] = 3;
    c.count['b'] = 5;
    c.count['c'] = 3;
    c.total = 11;
    const auto s = hoct::sorted_symbols(c);
    CHECK(s == std::vector<std::uint8_t>{'b', 'a', 'c'});
}

TEST_CASE("sorted_symbols singleton") {
    hoct::SymbolCounts c;
    c.count['a'] = 1;
    c.total = 1;
    CHECK(hoct::sorted_symbols(c) == std::vector<std::uint8_t>{'a'});
}

TEST_CASE("sorted_symbols breaks ties by byte value") {
    hoct::SymbolCounts c;
    c.count['b'] = 2;
    c.count['a'] = 2;
    c.total = 4;
    CHECK(hoct::sorted_symbols(c) == std::vector<std::uint8_t>{'a', 'b'});
}

TEST_CASE("sorted_symbols excludes absent symbols and is deterministic") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 20; ++i) {
        const Bytes m = oracle::skewed_msg(rng, 500, 40);
        const auto c = hoct::count_symbols(m);
        const auto s1 = hoct::sorted_symbols(c);
        const auto s2 = hoct::sorted_symbols(c);
        CHECK(s1 == s2);
        for (std::size_t k = 0; k < s1.size(); ++k) {
            CHECK(c.count[s1[k]] > 0);
            if (k > 0) {
                // non-increasing counts, ties ascending byte value
                const bool ok = c.count[s1[k - 1]] > c.count[s1[k]] ||
                                (c.count[s1[k - 1]] == c.count[s1[k]] && s1[k - 1] < s1[k]);
                CHECK(ok);
            }
        }
    }
}

TEST_CASE("collect_positions") {
    CHECK(hoct::collect_positions(from_string("abacab"), 'a') == hoct::PositionSet{0, 2, 4});
    CHECK(hoct::collect_positions(from_string("bbb"), 'a').empty());
    CHECK(hoct::collect_positions(from_string("aaa"), 'a') == hoct::PositionSet{0, 1, 2});
}

TEST_CASE("slot_stats counts symbols one past each position") {
    const Bytes m = from_string("abacab");
    const auto s = hoct::slot_stats(m, {0, 2, 4});
    CHECK(s.counts.count['b'] == 2);
    CHECK(s.counts.count['c'] == 1);
    CHECK(s.slot_total() == 3);
}

TEST_CASE("slot_stats drops the final position") {
    const Bytes m = from_string("aa");
    const auto s = hoct::slot_stats(m, {0, 1});
    CHECK(s.counts.count['a'] == 1);
    CHECK(s.slot_total() == 1);
}

TEST_CASE("slot_stats simple run") {
    const Bytes m = from_string("abab");
    const auto s = hoct::slot_stats(m, {0, 2});
    CHECK(s.counts.count['b'] == 2);
    CHECK(s.slot_total() == 2);
}

TEST_CASE("slot_total equals number of in-range slots") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const Bytes m = oracle::uniform_msg(rng, oracle::log_uniform_len(rng, 2048), 8);
        if (m.empty()) continue;
        std::uniform_int_distribution<int> sym(0, 7);
        const auto x = static_cast<std::uint8_t>(sym(rng));
        const auto p = hoct::collect_positions(m, x);
        const auto s = hoct::slot_stats(m, p);
        std::size_t expect = 0;
        for (auto j : p) {
            if (j + std::size_t{1} < m.size()) ++expect;
        }
        CHECK(s.slot_total() == expect);
        CHECK(s.counts.total == expect);
    }
}
