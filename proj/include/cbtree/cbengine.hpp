#pragma once

#include <vector>

#include "cbtree/automaton.hpp"

namespace cbtree {

// Cantor-Bendixson derivative: drops every point that is isolated in
// [T]. On automata: keep the live states whose path set has at least
// two elements, then prune.
tree_automaton derivative(const tree_automaton& t);

// Largest perfect subtree: keep the live states with uncountable path
// set. Fixed point of derivative; idempotent.
tree_automaton perfect_kernel(const tree_automaton& t);

// Least r with derivative^r(T) = derivative^{r+1}(T); at most the
// number of states.
uint64_t cb_rank(const tree_automaton& t);

// |[T] \ [PK(T)]| as empty / finite(n) / countable.
cardinality scattered_cardinality(const tree_automaton& t);

// The ScCount convention: 0 when the scattered part is infinite,
// n + 1 when it has exactly n elements.
uint64_t scattered_count(const tree_automaton& t);

struct scattered_entry {
    int flag = 0;              // 1 = genuine point, 0 = placeholder
    lasso point;               // 0^w for placeholders

    bool operator==(const scattered_entry&) const = default;
};

// First k entries of the canonical scattered enumeration: subtrees of
// the minimal countable-below prefixes in code order, dovetailed, each
// in canonical path order; placeholders once a finite scattered part is
// exhausted.
std::vector<scattered_entry> scattered_list(const tree_automaton& t, size_t k);

struct cb_report {
    tree_automaton kernel;
    uint64_t rank = 0;
    cardinality scattered;     // empty / finite / countable
    uint64_t sccount_code = 0; // the ScCount convention
};

struct cb_full_result {
    cb_report report;
    std::vector<scattered_entry> entries;
};

cb_full_result cb_full(const tree_automaton& t, size_t k);

// The List convention: tag 0 for countably infinite bodies, |[T]|+1 for
// finite ones; entries enumerate [T] with placeholder padding. Rejects
// uncountable bodies.
struct list_result {
    uint64_t tag = 0;
    std::vector<scattered_entry> entries;
};

list_result list_countable(const tree_automaton& t, size_t k);

// Injective version of a tagged listing: drops flag-0 entries and
// duplicates; output has exactly tag-1 elements when tag > 0.
std::vector<lasso> dedup_list(uint64_t tag, const std::vector<scattered_entry>& entries);

// Minimal prefixes whose subtree is countable and still has a path, in
// code order, paired with the reached state. These generate the
// scattered part; exposed for the certificate machinery and tests.
struct countable_region {
    seq prefix;
    size_t state;
};
std::vector<countable_region> minimal_countable_prefixes(const tree_automaton& t,
                                                         size_t max_count);

} // namespace cbtree
