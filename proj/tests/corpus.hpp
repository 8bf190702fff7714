#pragma once

#include <random>
#include <vector>

#include "cbtree/automaton.hpp"
#include "cbtree/combinators.hpp"
#include "cbtree/oracle.hpp"

// Shared test instances spanning empty, finite, countable and continuum
// bodies, plus a seeded generator of small deterministic tree automata.
namespace corpus {

using namespace cbtree;

inline tree_automaton empty_tree() { return {}; }

// {0^i : i <= len}, well-founded
inline tree_automaton chain(size_t len) {
    tree_automaton t;
    size_t prev = t.add_state();
    t.set_root(prev);
    for (size_t i = 0; i < len; ++i) {
        size_t next = t.add_state();
        t.add_edge(prev, 0, next);
        prev = next;
    }
    return t;
}

// single loop: body {label^w}
inline tree_automaton zpath(symbol label = 0) {
    tree_automaton t;
    size_t s = t.add_state();
    t.add_edge(s, label, s);
    t.set_root(s);
    return t;
}

// r: 0->r, 1->c; c: 1->c; body {0^w} ∪ {0^a 1^w}
inline tree_automaton comb() {
    tree_automaton t;
    size_t r = t.add_state("r");
    size_t c = t.add_state("c");
    t.add_edge(r, 0, r);
    t.add_edge(r, 1, c);
    t.add_edge(c, 1, c);
    t.set_root(r);
    return t;
}

// body {0^w, 1^w}
inline tree_automaton two_paths() {
    tree_automaton t;
    size_t r = t.add_state();
    size_t a = t.add_state();
    size_t b = t.add_state();
    t.add_edge(r, 0, a);
    t.add_edge(a, 0, a);
    t.add_edge(r, 1, b);
    t.add_edge(b, 1, b);
    t.set_root(r);
    return t;
}

// unique path 0^w plus a dead branch
inline tree_automaton ub_dead_branch() {
    tree_automaton t;
    size_t r = t.add_state();
    size_t d = t.add_state();
    t.add_edge(r, 0, r);
    t.add_edge(r, 1, d);
    t.set_root(r);
    return t;
}

// binary words without "11": continuum, perfect
inline tree_automaton no_double_one() {
    tree_automaton t;
    size_t s = t.add_state();
    size_t u = t.add_state();
    t.add_edge(s, 0, s);
    t.add_edge(s, 1, u);
    t.add_edge(u, 0, s);
    t.set_root(s);
    return t;
}

// binary words without "00": perfect, and with no 0-cycle, so its
// Baire translation stays finitely branching
inline tree_automaton no_double_zero() {
    tree_automaton t;
    size_t s = t.add_state();
    size_t u = t.add_state();
    t.add_edge(s, 1, s);
    t.add_edge(s, 0, u);
    t.add_edge(u, 1, s);
    t.set_root(s);
    return t;
}

// kernel on one branch, two scattered points elsewhere
inline tree_automaton mixed_union() {
    return binary_disjoint_union({zpath(0), full_binary_tree()});
}

// {s : s(0) = 0} with labels < 3; its binary translation isolates 0^w
inline tree_automaton counterexample_tree() {
    tree_automaton t;
    size_t r = t.add_state();
    size_t f = t.add_state();
    t.add_edge(r, 0, f);
    for (symbol d = 0; d < 3; ++d) t.add_edge(f, d, f);
    t.set_root(r);
    return t;
}

inline std::vector<tree_automaton> standard() {
    std::vector<tree_automaton> ts;
    ts.push_back(empty_tree());
    ts.push_back(chain(2));
    ts.push_back(zpath(0));
    ts.push_back(zpath(3));
    ts.push_back(comb());
    ts.push_back(two_paths());
    ts.push_back(ub_dead_branch());
    ts.push_back(full_binary_tree());
    ts.push_back(no_double_one());
    ts.push_back(no_double_zero());
    ts.push_back(mixed_union());
    ts.push_back(explode(zpath(3)));
    ts.push_back(translate_tree_to_binary(comb()));
    ts.push_back(counterexample_tree());
    ts.push_back(disjoint_union({chain(1), zpath(0)}));
    return ts;
}

inline std::vector<tree_automaton> binary_standard() {
    std::vector<tree_automaton> ts;
    for (auto& t : standard())
        if (t.is_binary()) ts.push_back(std::move(t));
    return ts;
}

inline tree_automaton random_tree(std::mt19937_64& rng, size_t max_states = 5,
                                  symbol max_label = 3) {
    std::uniform_int_distribution<size_t> nstates(1, max_states);
    size_t n = nstates(rng);
    tree_automaton t;
    for (size_t i = 0; i < n; ++i) t.add_state();
    std::uniform_int_distribution<size_t> target(0, n - 1);
    std::bernoulli_distribution has_edge(0.45);
    for (size_t s = 0; s < n; ++s)
        for (symbol d = 0; d <= max_label; ++d)
            if (has_edge(rng)) t.add_edge(s, d, target(rng));
    t.set_root(0);
    return t.rooted_at(0); // trim unreachable states
}

inline oracle::membership member_fn(const tree_automaton& t) {
    return [&t](const seq& s) { return t.member(s); };
}

} // namespace corpus
