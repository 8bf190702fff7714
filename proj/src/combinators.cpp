#include "cbtree/combinators.hpp"

#include <map>
#include <stdexcept>

namespace cbtree {

namespace {

// copies t's states into out, returns the new index of t's root
size_t import_states(tree_automaton& out, const tree_automaton& t) {
    if (t.empty_language()) return tree_automaton::npos;
    std::vector<size_t> remap(t.num_states());
    for (size_t s = 0; s < t.num_states(); ++s) remap[s] = out.add_state();
    for (size_t s = 0; s < t.num_states(); ++s)
        for (const auto& [label, to] : t.out(s)) out.add_edge(remap[s], label, remap[to]);
    return remap[t.root()];
}

} // namespace

tree_automaton full_binary_tree() {
    tree_automaton t;
    size_t s = t.add_state();
    t.add_edge(s, 0, s);
    t.add_edge(s, 1, s);
    t.set_root(s);
    return t;
}

tree_automaton disjoint_union(const std::vector<tree_automaton>& ts) {
    if (ts.empty()) throw std::invalid_argument("disjoint_union: empty family");
    tree_automaton out;
    size_t root = out.add_state();
    out.set_root(root);
    for (size_t i = 0; i < ts.size(); ++i) {
        size_t branch = import_states(out, ts[i]);
        if (branch != tree_automaton::npos) out.add_edge(root, i, branch);
    }
    return out;
}

tree_automaton binary_disjoint_union(const std::vector<tree_automaton>& ts) {
    tree_automaton out;
    std::vector<size_t> spine;
    for (size_t i = 0; i < ts.size(); ++i) spine.push_back(out.add_state());
    size_t tail = out.add_state();
    out.add_edge(tail, 0, tail);
    for (size_t i = 0; i < ts.size(); ++i) {
        out.add_edge(spine[i], 0, i + 1 < ts.size() ? spine[i + 1] : tail);
        size_t branch = import_states(out, ts[i]);
        if (branch != tree_automaton::npos) out.add_edge(spine[i], 1, branch);
    }
    out.set_root(ts.empty() ? tail : spine[0]);
    return out;
}

tree_automaton binary_disjoint_union_const(const tree_automaton& t) {
    tree_automaton out;
    size_t spine = out.add_state();
    out.add_edge(spine, 0, spine);
    size_t branch = import_states(out, t);
    if (branch != tree_automaton::npos) out.add_edge(spine, 1, branch);
    out.set_root(spine);
    return out;
}

tree_automaton interleave_trees(const tree_automaton& a, const tree_automaton& b) {
    tree_automaton out;
    if (a.empty_language() || b.empty_language()) return out;

    std::map<std::tuple<size_t, size_t, int>, size_t> remap;
    std::vector<std::tuple<size_t, size_t, int>> queue;
    auto intern = [&](size_t sa, size_t sb, int parity) {
        auto key = std::make_tuple(sa, sb, parity);
        auto it = remap.find(key);
        if (it != remap.end()) return it->second;
        size_t idx = out.add_state();
        remap.emplace(key, idx);
        queue.push_back(key);
        return idx;
    };
    out.set_root(intern(a.root(), b.root(), 0));
    for (size_t i = 0; i < queue.size(); ++i) {
        auto [sa, sb, parity] = queue[i];
        size_t from = remap.at(queue[i]);
        if (parity == 0) {
            for (const auto& [label, ta] : a.out(sa))
                out.add_edge(from, label, intern(ta, sb, 1));
        } else {
            for (const auto& [label, tb] : b.out(sb))
                out.add_edge(from, label, intern(sa, tb, 0));
        }
    }
    return out;
}

tree_automaton explode(const tree_automaton& t) {
    return interleave_trees(t, full_binary_tree());
}

tree_automaton translate_tree_to_binary(const tree_automaton& s) {
    tree_automaton out;
    if (s.empty_language()) return out;

    std::map<std::pair<size_t, symbol>, size_t> remap;
    std::vector<std::pair<size_t, symbol>> queue;
    size_t ztail = tree_automaton::npos;
    auto intern_tail = [&] {
        if (ztail == tree_automaton::npos) {
            ztail = out.add_state("ztail");
            out.add_edge(ztail, 0, ztail);
        }
        return ztail;
    };
    auto intern = [&](size_t st, symbol pending) {
        auto key = std::make_pair(st, pending);
        auto it = remap.find(key);
        if (it != remap.end()) return it->second;
        size_t idx = out.add_state();
        remap.emplace(key, idx);
        queue.push_back(key);
        return idx;
    };

    out.set_root(intern(s.root(), 0));
    for (size_t i = 0; i < queue.size(); ++i) {
        auto [st, pending] = queue[i];
        size_t from = remap.at({st, pending});
        const auto& edges = s.out(st);
        // a 1 closes the pending zero-block as one digit
        auto hit = edges.find(pending);
        if (hit != edges.end()) out.add_edge(from, 1, intern(hit->second, 0));
        // a 0 extends the block; once no outgoing label can match any
        // longer block, only the all-zero continuation remains
        symbol limit = edges.empty() ? 0 : edges.rbegin()->first;
        if (!edges.empty() && pending + 1 <= limit)
            out.add_edge(from, 0, intern(st, pending + 1));
        else
            out.add_edge(from, 0, intern_tail());
    }
    return out;
}

tree_automaton translate_tree_to_baire(const tree_automaton& t) {
    tree_automaton out;
    if (t.empty_language()) return out;
    if (!t.is_binary())
        throw std::invalid_argument("translate_tree_to_baire: input must be binary");

    // digits available from u: follow the 0-run; a 0-cycle state with a
    // reachable 1-edge on the cycle would branch infinitely
    auto digit_edges = [&](size_t u) {
        std::map<symbol, size_t> edges;
        std::map<size_t, size_t> seen; // state -> position in the run
        size_t cur = u;
        for (symbol d = 0;; ++d) {
            auto pos = seen.emplace(cur, d);
            if (!pos.second) {
                // entered a 0-cycle: states from pos to d-1 repeat
                size_t start = pos.first->second;
                size_t probe = u;
                for (size_t i = 0; i < start; ++i) probe = t.out(probe).at(0);
                for (size_t i = start; i < d; ++i) {
                    if (t.out(probe).count(1))
                        throw std::invalid_argument(
                            "translate_tree_to_baire: image branches infinitely at a node");
                    probe = t.out(probe).at(0);
                }
                break;
            }
            auto one = t.out(cur).find(1);
            if (one != t.out(cur).end()) edges.emplace(d, one->second);
            auto zero = t.out(cur).find(0);
            if (zero == t.out(cur).end()) break;
            cur = zero->second;
        }
        return edges;
    };

    std::map<size_t, size_t> remap;
    std::vector<size_t> queue;
    auto intern = [&](size_t u) {
        auto it = remap.find(u);
        if (it != remap.end()) return it->second;
        size_t idx = out.add_state(t.name(u));
        remap.emplace(u, idx);
        queue.push_back(u);
        return idx;
    };
    out.set_root(intern(t.root()));
    for (size_t i = 0; i < queue.size(); ++i) {
        size_t u = queue[i];
        size_t from = remap.at(u);
        for (const auto& [digit, target] : digit_edges(u))
            out.add_edge(from, digit, intern(target));
    }
    return out;
}

} // namespace cbtree
