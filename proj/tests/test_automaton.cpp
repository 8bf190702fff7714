#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"

using namespace cbtree;

namespace {

symbol oracle_width(const tree_automaton& t) {
    return std::max<symbol>(2, t.max_label() + 2);
}

std::set<seq> prefix_set(const tree_automaton& t, size_t depth, symbol width = 0) {
    oracle::budgets b{depth, width ? width : oracle_width(t), t.num_states() + 1};
    auto v = oracle::extendible_prefixes(corpus::member_fn(t), b);
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("member and subtree") {
    tree_automaton fb = full_binary_tree();
    CHECK(fb.member({}));
    CHECK(fb.member({0, 1, 1, 0}));
    CHECK_FALSE(fb.member({2}));

    tree_automaton z = corpus::zpath(0);
    CHECK_FALSE(z.member({0, 0, 1}));
    CHECK(z.member({0, 0, 0}));

    // subtree of the comb at <0,1> accepts exactly {1^n}
    tree_automaton sub = corpus::comb().subtree({0, 1});
    tree_automaton ones = corpus::zpath(1);
    CHECK(tree_equal(sub, ones));
    CHECK_THROWS_AS(corpus::comb().subtree({2}), std::invalid_argument);

    for (const auto& t : corpus::standard())
        if (!t.empty_language()) CHECK(tree_equal(t.subtree({}), t));
}

TEST_CASE("prune") {
    CHECK(corpus::chain(3).prune().empty_language());
    CHECK(tree_equal(corpus::zpath(0).prune(), corpus::zpath(0)));

    // a dead chain hanging off the comb disappears
    tree_automaton t = corpus::comb();
    size_t d1 = t.add_state();
    size_t d2 = t.add_state();
    t.add_edge(1, 0, d1);
    t.add_edge(d1, 0, d2);
    CHECK(tree_equal(t.prune(), corpus::comb()));

    for (const auto& t2 : corpus::standard()) {
        tree_automaton once = t2.prune();
        CHECK(tree_equal(once, once.prune())); // idempotent
        CHECK(tree_subset(once, t2));
        symbol w = oracle_width(t2);
        for (size_t d = 0; d <= 12; d += 4) // bodies agree
            CHECK(prefix_set(t2, d, w) == prefix_set(once, d, w));
    }
}

TEST_CASE("well-foundedness") {
    CHECK(is_wellfounded(corpus::chain(2)));
    CHECK_FALSE(is_wellfounded(corpus::zpath(0)));
    CHECK_FALSE(is_wellfounded(disjoint_union({corpus::chain(2), corpus::zpath(0)})));

    // oracle: well-founded iff no extendible prefix at depth |states|
    for (const auto& t : corpus::standard()) {
        auto set = prefix_set(t, t.num_states());
        CHECK(is_wellfounded(t) == set.empty());
    }
}

TEST_CASE("body cardinality anchors") {
    CHECK(body_cardinality(full_binary_tree()) == card_continuum());
    CHECK(body_cardinality(corpus::zpath(0)) == card_finite(1));
    CHECK(body_cardinality(corpus::comb()) == card_countable());
    CHECK(body_cardinality(corpus::two_paths()) == card_finite(2));
    CHECK(body_cardinality(corpus::empty_tree()) == card_empty());
    CHECK(body_cardinality(corpus::ub_dead_branch()) == card_finite(1));
    CHECK(body_cardinality(corpus::chain(4)) == card_empty());
    CHECK(body_cardinality(corpus::no_double_one()) == card_continuum());
}

TEST_CASE("body cardinality agrees with oracle counting") {
    for (const auto& t : corpus::standard()) {
        cardinality cls = body_cardinality(t);
        size_t n = t.num_states();
        size_t stable = std::min<size_t>(n * n + 1, 12);
        auto member = corpus::member_fn(t);
        symbol w = oracle_width(t);
        auto count = [&](size_t depth) {
            return oracle::count_paths_capped(member, {depth, w, n + 1}, 1000);
        };
        switch (cls.tag) {
            case card_tag::empty:
                CHECK(count(n).value == 0);
                break;
            case card_tag::finite:
                CHECK(count(stable).value == cls.count);
                CHECK(count(stable + 3).value == cls.count);
                break;
            case card_tag::countable: {
                auto lo = count(stable);
                auto hi = count(stable + 2 * n + 2);
                CHECK(hi.value > lo.value); // unbounded growth
                break;
            }
            case card_tag::continuum: {
                // witnessed exponential growth: doubles within state count
                auto lo = count(stable);
                auto hi = count(stable + n + 1);
                CHECK((hi.capped || hi.value >= 2 * lo.value));
                break;
            }
        }
    }
}

TEST_CASE("lasso membership") {
    CHECK(lasso_member(corpus::comb(), constant_lasso(0)));
    CHECK(lasso_member(corpus::comb(), lasso({0, 0, 1}, {1})));
    CHECK_FALSE(lasso_member(corpus::comb(), lasso({1}, {0})));
    CHECK_FALSE(lasso_member(corpus::chain(2), constant_lasso(0)));
    CHECK(lasso_member(full_binary_tree(), lasso({1, 1, 0}, {0, 1})));
}

TEST_CASE("enumerate_paths anchors") {
    auto single = enumerate_paths(corpus::zpath(0), 3);
    REQUIRE(single.size() == 1);
    CHECK(lasso_eq(single[0], constant_lasso(0)));

    auto comb3 = enumerate_paths(corpus::comb(), 3);
    REQUIRE(comb3.size() == 3);
    CHECK(comb3[0] == constant_lasso(0));
    CHECK(comb3[1] == constant_lasso(1));
    CHECK(comb3[2] == lasso({0}, {1}));

    CHECK(enumerate_paths(corpus::empty_tree(), 5).empty());
    CHECK_THROWS_AS(enumerate_paths(full_binary_tree(), 1), std::invalid_argument);
}

TEST_CASE("enumerate_paths: distinct members, exact for finite bodies") {
    for (const auto& t : corpus::standard()) {
        cardinality cls = body_cardinality(t);
        if (cls.tag == card_tag::continuum) continue;
        auto paths = enumerate_paths(t, 8);
        if (cls.tag == card_tag::finite) CHECK(paths.size() == cls.count);
        if (cls.tag == card_tag::countable) CHECK(paths.size() == 8);
        for (size_t i = 0; i < paths.size(); ++i) {
            CHECK(lasso_member(t, paths[i]));
            for (size_t j = i + 1; j < paths.size(); ++j)
                CHECK_FALSE(lasso_eq(paths[i], paths[j]));
        }
        // enumeration is a stable prefix chain
        auto shorter = enumerate_paths(t, 3);
        for (size_t i = 0; i < shorter.size(); ++i) CHECK(shorter[i] == paths[i]);
    }
}

TEST_CASE("tree_equal and tree_subset") {
    // a two-state unrolled zero loop accepts the same language
    tree_automaton unrolled;
    size_t a = unrolled.add_state();
    size_t b = unrolled.add_state();
    unrolled.add_edge(a, 0, b);
    unrolled.add_edge(b, 0, a);
    unrolled.set_root(a);
    CHECK(tree_equal(corpus::zpath(0), unrolled));
    CHECK_FALSE(tree_equal(corpus::zpath(0), corpus::comb()));

    for (const auto& t : corpus::standard()) {
        CHECK(tree_equal(t, t));
        CHECK(tree_subset(t, t));
    }
    CHECK(tree_subset(corpus::zpath(0), corpus::comb()));
    CHECK_FALSE(tree_subset(corpus::comb(), corpus::zpath(0)));
}

TEST_CASE("oracle isolated points on the comb") {
    oracle::budgets b{4, 3, 8};
    auto reports = oracle::isolated_at_depth(corpus::member_fn(corpus::comb()), b);
    bool found = false;
    for (const auto& r : reports)
        if (r.prefix == seq{1} && r.point && lasso_eq(*r.point, constant_lasso(1)))
            found = true;
    CHECK(found);
    // nothing is isolated in the full binary tree
    CHECK(oracle::isolated_at_depth(corpus::member_fn(full_binary_tree()), b).empty());
}
