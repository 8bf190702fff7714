#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "cbtree/seq.hpp"

using namespace cbtree;

namespace {

// every sequence with digits < base and length <= len
std::vector<seq> all_seqs(symbol base, size_t len) {
    std::vector<seq> out{{}};
    size_t begin = 0, end = out.size();
    for (size_t d = 1; d <= len; ++d) {
        for (size_t i = begin; i < end; ++i)
            for (symbol x = 0; x < base; ++x) {
                seq s = out[i];
                s.push_back(x);
                out.push_back(std::move(s));
            }
        begin = end;
        end = out.size();
    }
    return out;
}

} // namespace

TEST_CASE("coding: anchors and round trips") {
    CHECK(seq_code({}) == big_nat(0));
    CHECK(seq_code({0}) == big_nat(1));
    CHECK(seq_code({0, 0}) == big_nat(2));
    CHECK(seq_decode(seq_code({5, 0, 7})) == seq{5, 0, 7});

    for (uint64_t c = 0; c < 10000; ++c)
        CHECK(seq_code(seq_decode(big_nat(c))) == big_nat(c));
}

TEST_CASE("coding: strict prefixes have strictly smaller codes") {
    for (uint64_t c = 0; c < 10000; ++c) {
        seq s = seq_decode(big_nat(c));
        for (size_t m = 0; m < s.size(); ++m) {
            seq prefix(s.begin(), s.begin() + m);
            CHECK(seq_code(prefix) < big_nat(c));
        }
    }
}

TEST_CASE("coding: big values survive the round trip") {
    seq s{7, 3, 9, 1, 7, 7, 2, 5, 8, 4}; // code far beyond 64 bits
    big_nat c = seq_code(s);
    CHECK_FALSE(c.fits_u64());
    CHECK(seq_decode(c) == s);
    seq t = s;
    t.push_back(0);
    CHECK(c < seq_code(t));
}

TEST_CASE("interleave_fin") {
    CHECK(interleave_fin({1, 2}, {0, 0}) == seq{1, 0, 2, 0});
    CHECK(interleave_fin({}, {}) == seq{});
    CHECK(interleave_fin({3}, {3}) == seq{3, 3});
    CHECK_THROWS_AS(interleave_fin({1}, {}), std::invalid_argument);
}

TEST_CASE("ell and project") {
    CHECK(ell({}) == 0);
    CHECK(ell({9, 9}) == 2);
    CHECK_THROWS_AS(project(0, {}), std::out_of_range);

    // join k streams along the pairing, then project each back
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        uint64_t k = 1 + rng() % 4;
        size_t len = 1 + rng() % 20;
        std::vector<seq> streams(k);
        for (auto& s : streams)
            for (int i = 0; i < 32; ++i) s.push_back(rng() % 5);
        seq joined;
        for (uint64_t pos = 0; pos < len; ++pos) {
            auto [i, j] = cantor_unpair(big_nat(pos));
            uint64_t si = i.fits_u64() ? i.to_u64() : 0;
            uint64_t sj = j.fits_u64() ? j.to_u64() : 0;
            joined.push_back(si < k ? streams[si][sj] : 0);
        }
        for (uint64_t i = 0; i < std::min(ell(joined), k); ++i) {
            seq got = project(i, joined);
            seq expect(streams[i].begin(), streams[i].begin() + got.size());
            CHECK(got == expect);
            // the projection takes every pair(i, j) position below the cut
            for (uint64_t j = 0; cantor_pair(i, j) < joined.size(); ++j)
                CHECK(got.at(j) == joined.at(cantor_pair(i, j)));
        }
    }
}

TEST_CASE("tau_c_fin anchors") {
    CHECK(tau_c_fin({2, 0, 1}) == seq{0, 0, 1, 1, 0, 1});
    CHECK(tau_c_fin({}) == seq{});
    CHECK(tau_c_fin({0}) == seq{1});
}

TEST_CASE("tau_b_fin anchors") {
    CHECK(tau_b_fin({0, 0, 0}) == seq{});
    CHECK(tau_b_fin({0, 0, 1, 1, 0, 1}) == seq{2, 0, 1});
    CHECK(tau_b_fin({0, 0, 1, 0}) == seq{2});
    CHECK_THROWS_AS(tau_b_fin({2}), std::invalid_argument);
}

TEST_CASE("tau_c_fin is injective and preserves the prefix order") {
    auto seqs = all_seqs(5, 4);
    std::map<seq, seq> images;
    for (const seq& s : seqs) {
        seq img = tau_c_fin(s);
        CHECK(tau_b_fin(img) == s);
        auto [it, fresh] = images.emplace(img, s);
        CHECK(fresh);
    }
    for (const seq& a : seqs)
        for (const seq& b : seqs)
            CHECK(is_proper_prefix(a, b) == is_proper_prefix(tau_c_fin(a), tau_c_fin(b)));
}

TEST_CASE("tau_b_fin is monotone on binary prefixes") {
    for (const seq& t : all_seqs(2, 12)) {
        seq img = tau_b_fin(t);
        for (size_t m = 0; m < t.size(); ++m)
            CHECK(is_prefix(tau_b_fin(seq(t.begin(), t.begin() + m)), img));
    }
}
