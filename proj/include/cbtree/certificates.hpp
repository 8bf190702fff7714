#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cbtree/automaton.hpp"

namespace cbtree {

struct cert_entry {
    seq sigma;
    int flag = 0;  // 1: unique point above sigma, listed; 0: nothing above sigma
    lasso point;   // the point, or 0^w for flag 0

    bool operator==(const cert_entry&) const = default;
};

// Prefix of the one-step mCB-certificate stream: the minimal prefixes
// with at most one point above them, in increasing code order. Dead
// prefixes are explored up to label_budget; complete means the whole
// stream fit into the requested prefix.
struct one_step_cert {
    std::vector<cert_entry> entries;
    symbol label_budget = 2;
    bool complete = false;
};

// Levels in derivative order; index carries the corrected ordering of
// the global definition (sorted by the code of each level's first
// flag-1 witness).
struct global_level {
    uint64_t index = 0;
    one_step_cert cert;
};

struct global_cert {
    std::vector<global_level> levels;
};

// Requires a countable nonempty body (such a set always has an isolated
// point). The default label budget is max_label + 2.
one_step_cert one_step(const tree_automaton& t, size_t k,
                       std::optional<symbol> label_budget = std::nullopt);

global_cert global(const tree_automaton& t, size_t k,
                   std::optional<symbol> label_budget = std::nullopt);

// Exact residue of the certificate prefix: T minus the cones of the
// listed sigmas, pruned. Equals the derivative when the prefix holds
// the whole stream.
tree_automaton residue_automaton(const tree_automaton& t, const one_step_cert& c);

struct violation {
    std::string clause;
    std::string detail;
};

// Budgeted mechanization of the definitional clauses; never throws.
// Coverage and residue are checked for words of length <= depth with
// labels < width, restricted to codes below the last stored entry
// (beyond it the prefix cannot tell which entries are missing).
std::vector<violation> verify_one_step(const tree_automaton& t, const one_step_cert& c,
                                       size_t depth, symbol width);
std::vector<violation> verify_global(const tree_automaton& t, const global_cert& c,
                                     size_t depth, symbol width);

} // namespace cbtree
