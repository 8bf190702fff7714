#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cbtree/cbengine.hpp"
#include "corpus.hpp"

using namespace cbtree;

namespace {

// cardinal arithmetic for 1 + sum of member bodies
cardinality binary_union_expected(const std::vector<tree_automaton>& ts) {
    uint64_t finite_total = 1; // the 0-spine path
    bool countable = false, continuum = false;
    for (const auto& t : ts) {
        cardinality c = body_cardinality(t);
        if (c.tag == card_tag::continuum) continuum = true;
        if (c.tag == card_tag::countable) countable = true;
        if (c.tag == card_tag::finite) finite_total += c.count;
    }
    if (continuum) return card_continuum();
    if (countable) return card_countable();
    return card_finite(finite_total);
}

} // namespace

TEST_CASE("disjoint union") {
    CHECK(body_cardinality(disjoint_union({corpus::zpath(0), corpus::zpath(0)})) ==
          card_finite(2));
    CHECK(is_wellfounded(disjoint_union({corpus::chain(3)})));
    CHECK(body_cardinality(disjoint_union({full_binary_tree(), corpus::zpath(0)})) ==
          card_continuum());
    CHECK_THROWS_AS(disjoint_union({}), std::invalid_argument);

    // well-foundedness algebra over the corpus
    auto corpus_trees = corpus::standard();
    for (const auto& a : corpus_trees)
        for (const auto& b : corpus_trees)
            CHECK(is_wellfounded(disjoint_union({a, b})) ==
                  (is_wellfounded(a) && is_wellfounded(b)));
}

TEST_CASE("binary disjoint union cardinality law") {
    CHECK(body_cardinality(binary_disjoint_union({corpus::zpath(0), corpus::zpath(0)})) ==
          card_finite(3));

    auto binary = corpus::binary_standard();
    for (const auto& a : binary)
        for (const auto& b : binary) {
            std::vector<tree_automaton> pair{a, b};
            CHECK(body_cardinality(binary_disjoint_union(pair)) ==
                  binary_union_expected(pair));
            for (const auto& c : binary) {
                std::vector<tree_automaton> triple{a, b, c};
                CHECK(body_cardinality(binary_disjoint_union(triple)) ==
                      binary_union_expected(triple));
            }
        }
}

TEST_CASE("constant binary disjoint union") {
    tree_automaton spine_only = binary_disjoint_union_const(corpus::chain(2));
    CHECK(body_cardinality(spine_only) == card_finite(1));
    auto paths = enumerate_paths(spine_only, 2);
    REQUIRE(paths.size() == 1);
    CHECK(lasso_eq(paths[0], constant_lasso(0)));

    tree_automaton fat = binary_disjoint_union_const(full_binary_tree());
    CHECK(fat.num_states() == full_binary_tree().num_states() + 1);
    CHECK(body_cardinality(fat) == card_continuum());
    CHECK(tree_equal(perfect_kernel(fat), fat.prune())); // body is perfect

    // 0^w is always a path
    for (const auto& t : corpus::binary_standard()) {
        CHECK(lasso_member(binary_disjoint_union_const(t), constant_lasso(0)));
        CHECK(lasso_member(binary_disjoint_union({t, t}), constant_lasso(0)));
    }
}

TEST_CASE("interleaving and explosion") {
    tree_automaton both = interleave_trees(corpus::zpath(0), corpus::zpath(0));
    CHECK(body_cardinality(both) == card_finite(1));
    CHECK(lasso_member(both, constant_lasso(0)));

    CHECK(is_wellfounded(explode(corpus::chain(2))));

    tree_automaton boom = explode(corpus::zpath(3));
    CHECK(body_cardinality(boom) == card_continuum());
    CHECK(tree_equal(perfect_kernel(boom), boom.prune()));
    CHECK(lasso_member(boom, lasso({}, {3, 0})));
    CHECK(lasso_member(boom, lasso({3, 1}, {3, 0, 3, 1})));
    CHECK_FALSE(lasso_member(boom, lasso({0}, {3, 0})));

    auto corpus_trees = corpus::standard();
    for (const auto& a : corpus_trees)
        for (const auto& b : corpus_trees)
            CHECK(is_wellfounded(interleave_trees(a, b)) ==
                  (is_wellfounded(a) || is_wellfounded(b)));
}

TEST_CASE("binary translation of trees: exact language") {
    // the image accepts exactly the words whose decoded digits lie in S
    std::mt19937_64 rng(21);
    for (int round = 0; round < 50; ++round) {
        tree_automaton s = corpus::random_tree(rng, 5, 3);
        tree_automaton image = translate_tree_to_binary(s);
        CHECK(image.is_binary());
        std::vector<seq> words{{}};
        for (size_t i = 0; i < words.size(); ++i) {
            const seq w = words[i];
            CHECK(image.member(w) == s.member(tau_b_fin(w)));
            if (w.size() < 11)
                for (symbol d = 0; d < 2; ++d) {
                    seq e = w;
                    e.push_back(d);
                    words.push_back(std::move(e));
                }
        }
    }
}

TEST_CASE("tree translation round trip") {
    std::mt19937_64 rng(22);
    for (int round = 0; round < 50; ++round) {
        tree_automaton s = corpus::random_tree(rng, 5, 3);
        CHECK(tree_equal(translate_tree_to_baire(translate_tree_to_binary(s)), s));
    }
}

TEST_CASE("baire translation runs blocks") {
    // words without consecutive zeros translate to the full binary tree
    tree_automaton t;
    size_t s = t.add_state();
    size_t u = t.add_state();
    t.add_edge(s, 0, u);
    t.add_edge(s, 1, s);
    t.add_edge(u, 1, s);
    t.set_root(s);
    CHECK(is_perfect_tree(t));
    CHECK(tree_equal(translate_tree_to_baire(t), full_binary_tree()));

    // a perfect tree whose image branches infinitely is rejected
    CHECK_THROWS_AS(translate_tree_to_baire(full_binary_tree()), std::invalid_argument);
    CHECK_THROWS_AS(translate_tree_to_baire(corpus::zpath(3)), std::invalid_argument);
}

TEST_CASE("perfectness transfer through taub") {
    for (const auto& t : corpus::binary_standard()) {
        tree_automaton pruned = t.prune();
        if (pruned.empty_language()) continue;
        if (!tree_equal(perfect_kernel(pruned), pruned)) continue; // body not perfect
        tree_automaton back;
        try {
            back = translate_tree_to_baire(pruned);
        } catch (const std::invalid_argument&) {
            continue; // image not finitely branching, outside the representation
        }
        CHECK(is_perfect_tree(back));
        CHECK(tree_equal(derivative(back), back.prune()));
    }
}

TEST_CASE("the isolated-zero counterexample") {
    tree_automaton image = translate_tree_to_binary(corpus::counterexample_tree());
    CHECK(lasso_member(image, constant_lasso(0)));
    // 0^w is isolated: it leaves the derivative
    CHECK_FALSE(lasso_member(derivative(image), constant_lasso(0)));
    // and the oracle sees the isolation directly
    oracle::budgets b{4, 2, image.num_states() + 1};
    bool seen = false;
    for (const auto& r : oracle::isolated_at_depth(corpus::member_fn(image), b))
        if (r.point && lasso_eq(*r.point, constant_lasso(0))) seen = true;
    CHECK(seen);
}

TEST_CASE("membership transfer along translated trees") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 30; ++round) {
        tree_automaton s = corpus::random_tree(rng, 5, 3);
        tree_automaton image = translate_tree_to_binary(s);
        lasso p = [&rng] {
            seq pre, cyc;
            for (size_t i = rng() % 4; i > 0; --i) pre.push_back(rng() % 3);
            cyc.push_back(rng() % 3);
            for (size_t i = rng() % 3; i > 0; --i) cyc.push_back(rng() % 3);
            return lasso(pre, cyc);
        }();
        // p ∈ [S] iff tau_C(p) ∈ [tau_C(S)], via prefix membership
        lasso q = tau_c_lasso(p);
        for (uint64_t n = 0; n < 30; ++n)
            CHECK(s.member(p.first(n)) == image.member(tau_c_fin(p.first(n))));
        CHECK(lasso_member(s, p) == lasso_member(image, q));
    }
}
