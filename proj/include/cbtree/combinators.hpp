#pragma once

#include <vector>

#include "cbtree/automaton.hpp"

namespace cbtree {

tree_automaton full_binary_tree();

// {<>} ∪ {<i>s : s ∈ T^i}; ill-founded iff some member is.
tree_automaton disjoint_union(const std::vector<tree_automaton>& ts);

// {0^i 1 s : s ∈ T^i} together with the whole 0-spine, so 0^w is always
// a path and |body| = 1 + sum of the member bodies. The const variant
// attaches one copy of T behind every 0^i 1 via a loop on the spine.
tree_automaton binary_disjoint_union(const std::vector<tree_automaton>& ts);
tree_automaton binary_disjoint_union_const(const tree_automaton& t);

// T*S, symbols alternating between the two operands; well-founded iff
// either operand is.
tree_automaton interleave_trees(const tree_automaton& a, const tree_automaton& b);

// e~(T) = T * 2^<N; inflates every path into a perfect set of paths.
tree_automaton explode(const tree_automaton& t);

// Tree-level translations: tau_C(S) = {t binary : tau_B(t) ∈ S} via a
// zero-run counter bounded per state by the largest outgoing label, and
// tau_B(T) = {s : tau_C(s) ∈ T} by running T over the block expansion
// of each digit. The latter rejects trees where a 0-cycle state can
// reach a 1-edge, whose image would branch infinitely at a node.
tree_automaton translate_tree_to_binary(const tree_automaton& s);
tree_automaton translate_tree_to_baire(const tree_automaton& t);

} // namespace cbtree
