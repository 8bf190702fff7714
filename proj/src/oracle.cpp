#include "cbtree/oracle.hpp"

namespace cbtree {
namespace oracle {

namespace {

// one surviving chain of the given length is enough
bool extendible(const membership& t, seq& w, symbol width, size_t levels) {
    if (levels == 0) return true;
    for (symbol d = 0; d < width; ++d) {
        w.push_back(d);
        bool ok = t(w) && extendible(t, w, width, levels - 1);
        w.pop_back();
        if (ok) return true;
    }
    return false;
}

bool extendible(const membership& t, const seq& w, symbol width, size_t levels) {
    seq tmp = w;
    return extendible(t, tmp, width, levels);
}

std::vector<std::vector<seq>> member_levels(const membership& t, const budgets& b) {
    std::vector<std::vector<seq>> levels;
    if (!t({})) return levels;
    levels.push_back({seq{}});
    for (size_t d = 1; d <= b.depth; ++d) {
        std::vector<seq> next;
        for (const seq& w : levels.back()) {
            for (symbol x = 0; x < b.width; ++x) {
                seq e = w;
                e.push_back(x);
                if (t(e)) next.push_back(std::move(e));
            }
        }
        levels.push_back(std::move(next));
    }
    return levels;
}

} // namespace

std::vector<seq> extendible_prefixes(const membership& t, const budgets& b) {
    auto levels = member_levels(t, b);
    std::vector<seq> out;
    if (levels.size() <= b.depth) return out;
    for (const seq& w : levels[b.depth])
        if (extendible(t, w, b.width, b.ext)) out.push_back(w);
    return out;
}

capped_count count_paths_capped(const membership& t, const budgets& b, uint64_t cap) {
    auto levels = member_levels(t, b);
    capped_count r;
    if (levels.size() <= b.depth) return r;
    for (const seq& w : levels[b.depth]) {
        if (!extendible(t, w, b.width, b.ext)) continue;
        if (++r.value >= cap) {
            r.capped = true;
            break;
        }
    }
    return r;
}

namespace {

// the forced continuation of w, level by level, as long as exactly one
// extendible child exists; empty optional when a level has 0 or >= 2
struct forced_chain {
    seq labels;
    bool unique = false; // every inspected level had exactly one survivor
};

forced_chain follow_unique(const membership& t, const seq& w, const budgets& b) {
    forced_chain chain;
    seq cur = w;
    for (size_t step = 0; step < b.ext; ++step) {
        std::optional<symbol> survivor;
        size_t survivors = 0;
        for (symbol d = 0; d < b.width; ++d) {
            cur.push_back(d);
            if (t(cur) && extendible(t, cur, b.width, b.ext)) {
                ++survivors;
                survivor = d;
            }
            cur.pop_back();
            if (survivors > 1) return chain;
        }
        if (survivors != 1) return chain;
        chain.labels.push_back(*survivor);
        cur.push_back(*survivor);
    }
    chain.unique = true;
    return chain;
}

std::optional<lasso> fold_chain(const membership& t, const seq& w, const seq& chain,
                                const budgets& b) {
    for (size_t start = 0; start <= chain.size() / 2; ++start) {
        for (size_t period = 1; start + 2 * period <= chain.size(); ++period) {
            bool matches = true;
            for (size_t i = start + period; i < chain.size() && matches; ++i)
                matches = chain[i] == chain[i - period];
            if (!matches) continue;
            seq pre = w;
            pre.insert(pre.end(), chain.begin(), chain.begin() + start);
            lasso cand(pre, seq(chain.begin() + start, chain.begin() + start + period));
            bool confirmed = true;
            size_t horizon = w.size() + b.ext + 2 * period + 2;
            for (size_t m = w.size(); m <= horizon && confirmed; ++m)
                confirmed = t(cand.first(m));
            if (confirmed) return cand;
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<isolated_report> isolated_at_depth(const membership& t, const budgets& b) {
    std::vector<isolated_report> out;
    auto levels = member_levels(t, b);
    for (const auto& level : levels) {
        for (const seq& w : level) {
            if (!extendible(t, w, b.width, b.ext)) continue;
            forced_chain chain = follow_unique(t, w, b);
            if (!chain.unique) continue;
            out.push_back({w, fold_chain(t, w, chain.labels, b)});
        }
    }
    return out;
}

} // namespace oracle
} // namespace cbtree
