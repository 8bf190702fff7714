#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cbtree/lasso.hpp"
#include "cbtree/seq.hpp"

namespace cbtree {

enum class card_tag { empty, finite, countable, continuum };

// |[T]| as an element of {0, 1, 2, ...} ∪ {ℵ₀, 2^ℵ₀}. count is the
// exact path count when tag == finite (n >= 1).
struct cardinality {
    card_tag tag = card_tag::empty;
    uint64_t count = 0;

    bool operator==(const cardinality& o) const = default;
    bool at_most_countable() const { return tag != card_tag::continuum; }
    bool at_most_one() const {
        return tag == card_tag::empty || (tag == card_tag::finite && count == 1);
    }
    std::string to_string() const;
};

inline cardinality card_empty() { return {card_tag::empty, 0}; }
inline cardinality card_finite(uint64_t n) { return {card_tag::finite, n}; }
inline cardinality card_countable() { return {card_tag::countable, 0}; }
inline cardinality card_continuum() { return {card_tag::continuum, 0}; }

// Deterministic finite automaton whose runs spell out a prefix-closed
// language, i.e. a finitely-branching tree. The language is empty iff
// there is no root; otherwise it always contains the empty sequence.
class tree_automaton {
public:
    static constexpr size_t npos = static_cast<size_t>(-1);

    tree_automaton() = default;

    size_t add_state(std::string name = {});
    void add_edge(size_t from, symbol label, size_t to);
    void set_root(size_t s) { root_ = s; }

    size_t num_states() const { return edges_.size(); }
    size_t root() const { return root_; }
    bool empty_language() const { return root_ == npos; }
    const std::string& name(size_t s) const { return names_[s]; }
    const std::map<symbol, size_t>& out(size_t s) const { return edges_[s]; }

    bool is_binary() const;
    symbol max_label() const; // 0 when there are no edges

    std::optional<size_t> run(const seq& s) const;
    bool member(const seq& s) const { return run(s).has_value(); }

    // Re-roots at the state reached by s; requires member(s).
    tree_automaton subtree(const seq& s) const;

    // Re-roots at an existing state (trimmed to its reachable part).
    tree_automaton rooted_at(size_t s) const;

    // Keeps only the marked states (and the part reachable from the
    // root through them).
    tree_automaton restrict_states(const std::vector<bool>& keep) const;

    // Restriction to the states from which an infinite run exists.
    tree_automaton prune() const;

    bool operator==(const tree_automaton&) const = delete;

private:
    std::vector<std::string> names_;
    std::vector<std::map<symbol, size_t>> edges_;
    size_t root_ = npos;
};

// Reachability, liveness, SCC structure and the per-state cardinality
// classification of the set of infinite runs. The classifier follows
// the graph structure of the live part:
//   continuum  <=> some reachable state lies on two distinct cycles,
//   countable  <=> otherwise some reachable cycle has a live exit,
//   finite(n)  <=> otherwise, with n from path-count equations on the
//                  condensation (cycle states contribute 1).
struct path_analysis {
    std::vector<bool> live;
    std::vector<int> scc_id;           // -1 for dead states
    std::vector<bool> scc_nontrivial;  // contains a cycle
    std::vector<cardinality> cls;      // per state; empty for dead states

    cardinality root_class(const tree_automaton& t) const;
};

path_analysis analyze(const tree_automaton& t);

cardinality body_cardinality(const tree_automaton& t);
bool is_wellfounded(const tree_automaton& t);

// Exact membership of an eventually periodic word in [T], decided by
// running the cycle until a state repeat on a cycle boundary.
bool lasso_member(const tree_automaton& t, const lasso& p);

// The first k paths of [T] in canonical lasso order. Requires a body
// that is at most countable.
std::vector<lasso> enumerate_paths(const tree_automaton& t, size_t k);

// Language equality / inclusion via the product construction.
bool tree_equal(const tree_automaton& a, const tree_automaton& b);
bool tree_subset(const tree_automaton& a, const tree_automaton& b);

// A perfect tree: pruned and every state has uncountable subtree.
bool is_perfect_tree(const tree_automaton& t);

} // namespace cbtree
