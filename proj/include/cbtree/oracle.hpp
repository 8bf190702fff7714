#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cbtree/lasso.hpp"
#include "cbtree/seq.hpp"

namespace cbtree {
namespace oracle {

// The oracle side of every structural claim: it sees a tree only as a
// membership function plus explicit budgets, so it cannot share bugs
// with the automaton algorithms. depth/width bound the explored words,
// ext bounds the extension search that witnesses extendibility (the
// caller passes a pumping bound, typically the state count).
using membership = std::function<bool(const seq&)>;

struct budgets {
    size_t depth = 8;
    symbol width = 2;
    size_t ext = 16;
};

// All members of length exactly b.depth (labels < width) that extend to
// length depth + ext within the width bound.
std::vector<seq> extendible_prefixes(const membership& t, const budgets& b);

// Count of the above, capped; second member reports whether the cap was
// hit.
struct capped_count {
    uint64_t value = 0;
    bool capped = false;
};
capped_count count_paths_capped(const membership& t, const budgets& b, uint64_t cap);

// Members of length <= depth whose extendible continuation is unique at
// every level up to depth + ext. The forced continuation is folded into
// a lasso when a periodic pattern is confirmed by further membership
// queries; otherwise the point stays unresolved.
struct isolated_report {
    seq prefix;
    std::optional<lasso> point; // nullopt = inconclusive fold
};
std::vector<isolated_report> isolated_at_depth(const membership& t, const budgets& b);

} // namespace oracle
} // namespace cbtree
