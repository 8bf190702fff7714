#include "cbtree/certificates.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "cbtree/cbengine.hpp"
#include "cbtree/oracle.hpp"

namespace cbtree {

namespace {

struct sigma_trie {
    struct node {
        std::map<symbol, size_t> child;
        bool terminal = false;
    };
    std::vector<node> nodes{1};

    void insert(const seq& s) {
        size_t cur = 0;
        for (symbol d : s) {
            auto it = nodes[cur].child.find(d);
            if (it == nodes[cur].child.end()) {
                nodes.push_back({});
                it = nodes[cur].child.emplace(d, nodes.size() - 1).first;
            }
            cur = it->second;
        }
        nodes[cur].terminal = true;
    }

    // does some inserted sigma prefix the word?
    bool covers(const seq& w) const {
        size_t cur = 0;
        if (nodes[cur].terminal) return true;
        for (symbol d : w) {
            auto it = nodes[cur].child.find(d);
            if (it == nodes[cur].child.end()) return false;
            cur = it->second;
            if (nodes[cur].terminal) return true;
        }
        return false;
    }
};

sigma_trie trie_of(const one_step_cert& c) {
    sigma_trie trie;
    for (const auto& e : c.entries) trie.insert(e.sigma);
    return trie;
}

struct code_item {
    big_nat code;
    seq word;
    size_t state; // npos = word not in the tree
    bool operator>(const code_item& o) const { return o.code < code; }
};

using code_queue =
    std::priority_queue<code_item, std::vector<code_item>, std::greater<code_item>>;

lasso prefixed_unique_path(const tree_automaton& t, const seq& word, size_t state) {
    auto paths = enumerate_paths(t.rooted_at(state), 1);
    if (paths.size() != 1)
        throw std::logic_error("one_step: expected a unique path below a witness");
    return lasso(concat(word, paths[0].prefix), paths[0].cycle);
}

} // namespace

one_step_cert one_step(const tree_automaton& t, size_t k,
                       std::optional<symbol> label_budget) {
    cardinality cls = body_cardinality(t);
    if (cls.tag == card_tag::empty)
        throw std::invalid_argument("one_step: body is empty");
    if (cls.tag == card_tag::continuum)
        throw std::invalid_argument("one_step: body is uncountable");

    one_step_cert cert;
    cert.label_budget = label_budget.value_or(t.max_label() + 2);
    path_analysis a = analyze(t);

    code_queue pq;
    pq.push({big_nat(), {}, t.root()});
    while (!pq.empty() && cert.entries.size() < k) {
        code_item item = pq.top();
        pq.pop();
        cardinality sub = item.state == tree_automaton::npos || !a.live[item.state]
                              ? card_empty()
                              : a.cls[item.state];
        if (sub.at_most_one()) {
            cert_entry e;
            e.sigma = item.word;
            e.flag = sub.tag == card_tag::finite ? 1 : 0;
            e.point = e.flag ? prefixed_unique_path(t, item.word, item.state)
                             : constant_lasso(0);
            cert.entries.push_back(std::move(e));
            continue;
        }
        const auto& edges = t.out(item.state);
        symbol limit = std::max<symbol>(cert.label_budget,
                                        edges.empty() ? 0 : edges.rbegin()->first + 1);
        for (symbol d = 0; d < limit; ++d) {
            auto it = edges.find(d);
            if (it == edges.end() && d >= cert.label_budget) continue;
            seq w = item.word;
            w.push_back(d);
            pq.push({cantor_pair(item.code, big_nat(d)) + big_nat(1), std::move(w),
                     it == edges.end() ? tree_automaton::npos : it->second});
        }
    }
    cert.complete = pq.empty();
    return cert;
}

namespace {

std::optional<big_nat> first_witness_code(const tree_automaton& t, const one_step_cert& c,
                                          std::optional<symbol> budget) {
    for (const auto& e : c.entries)
        if (e.flag == 1) return seq_code(e.sigma);
    if (c.complete) return std::nullopt;
    // the first witness exists but lies beyond the stored prefix
    for (size_t k = 2 * c.entries.size() + 16;; k *= 2) {
        one_step_cert deeper = one_step(t, k, budget);
        for (const auto& e : deeper.entries)
            if (e.flag == 1) return seq_code(e.sigma);
        if (deeper.complete) return std::nullopt;
        if (k > 1u << 20)
            throw std::runtime_error("global: witness search budget exceeded");
    }
}

} // namespace

global_cert global(const tree_automaton& t, size_t k, std::optional<symbol> label_budget) {
    cardinality cls = body_cardinality(t);
    if (cls.tag == card_tag::empty)
        throw std::invalid_argument("global: body is empty");
    if (cls.tag == card_tag::continuum)
        throw std::invalid_argument("global: body is uncountable");

    global_cert out;
    std::vector<big_nat> witness_codes;
    tree_automaton cur = t;
    while (body_cardinality(cur).tag != card_tag::empty) {
        one_step_cert cert = one_step(cur, k, label_budget);
        auto code = first_witness_code(cur, cert, label_budget);
        if (!code) throw std::logic_error("global: level without a flag-1 witness");
        witness_codes.push_back(*code);
        out.levels.push_back({0, std::move(cert)});
        cur = derivative(cur);
        if (out.levels.size() > t.num_states() + 1)
            throw std::logic_error("global: derivative chain did not terminate");
    }

    // corrected ordering: indices sorted by the first witness code
    std::vector<size_t> order(out.levels.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return witness_codes[x] < witness_codes[y]; });
    for (size_t rank = 0; rank < order.size(); ++rank)
        out.levels[order[rank]].index = rank;
    return out;
}

tree_automaton residue_automaton(const tree_automaton& t, const one_step_cert& c) {
    if (t.empty_language()) return {};
    sigma_trie trie = trie_of(c);
    if (trie.nodes[0].terminal) return {};

    tree_automaton out;
    std::map<std::pair<size_t, size_t>, size_t> remap; // (state, trie node or npos)
    std::vector<std::pair<size_t, size_t>> queue;
    auto intern = [&](size_t st, size_t node) {
        auto key = std::make_pair(st, node);
        auto it = remap.find(key);
        if (it != remap.end()) return it->second;
        size_t idx = out.add_state(t.name(st));
        remap.emplace(key, idx);
        queue.push_back(key);
        return idx;
    };
    out.set_root(intern(t.root(), 0));
    for (size_t i = 0; i < queue.size(); ++i) {
        auto [st, node] = queue[i];
        size_t from = remap.at({st, node});
        for (const auto& [label, to] : t.out(st)) {
            size_t next_node = tree_automaton::npos;
            if (node != tree_automaton::npos) {
                auto it = trie.nodes[node].child.find(label);
                if (it != trie.nodes[node].child.end()) {
                    if (trie.nodes[it->second].terminal) continue; // cone removed
                    next_node = it->second;
                }
            }
            out.add_edge(from, label, intern(to, next_node));
        }
    }
    return out.prune();
}

namespace {

void check_entry_local(const tree_automaton& t, const cert_entry& e,
                       std::vector<violation>& out) {
    std::string at = " at sigma=" + seq_to_string(e.sigma);
    if (e.flag == 1) {
        if (e.point.first(e.sigma.size()) != e.sigma)
            out.push_back({"witness_extends", "point does not extend sigma" + at});
        if (!lasso_member(t, e.point))
            out.push_back({"witness_member", "point is not a path" + at});
        auto st = t.run(e.sigma);
        if (!st || !body_cardinality(t.rooted_at(*st)).at_most_one())
            out.push_back({"witness_unique", "more than one point above sigma" + at});
    } else {
        auto st = t.run(e.sigma);
        if (st && !is_wellfounded(t.rooted_at(*st)))
            out.push_back({"dead_prefix", "a path extends a flag-0 sigma" + at});
        if (!(e.point == constant_lasso(0)))
            out.push_back({"placeholder", "flag-0 point is not 0^w" + at});
    }
}

// words over labels < width with code below the cap, grouped by length
std::vector<seq> bounded_words(size_t depth, symbol width, const big_nat& code_cap) {
    std::vector<seq> out{{}};
    size_t begin = 0, end = out.size();
    for (size_t d = 1; d <= depth; ++d) {
        for (size_t i = begin; i < end; ++i) {
            for (symbol x = 0; x < width; ++x) {
                seq w = out[i];
                w.push_back(x);
                if (seq_code(w) < code_cap) out.push_back(std::move(w));
            }
        }
        begin = end;
        end = out.size();
    }
    return out;
}

// does w extend, inside the tree, to the given extra depth while
// avoiding every covered word?
bool avoid_extendible(const tree_automaton& t, const sigma_trie& trie, seq& w,
                      size_t state, size_t levels) {
    if (levels == 0) return true;
    for (const auto& [label, to] : t.out(state)) {
        w.push_back(label);
        bool ok = !trie.covers(w) && avoid_extendible(t, trie, w, to, levels - 1);
        w.pop_back();
        if (ok) return true;
    }
    return false;
}

} // namespace

std::vector<violation> verify_one_step(const tree_automaton& t, const one_step_cert& c,
                                       size_t depth, symbol width) {
    std::vector<violation> out;
    if (c.entries.empty()) {
        out.push_back({"has_witness", "certificate prefix is empty"});
        return out;
    }

    for (size_t i = 0; i + 1 < c.entries.size(); ++i)
        if (!(seq_code(c.entries[i].sigma) < seq_code(c.entries[i + 1].sigma)))
            out.push_back({"code_order", "entry " + std::to_string(i + 1) +
                                             " does not increase the sigma code"});
    for (size_t i = 0; i < c.entries.size(); ++i)
        for (size_t j = i + 1; j < c.entries.size(); ++j)
            if (!incomparable(c.entries[i].sigma, c.entries[j].sigma))
                out.push_back({"incomparable",
                               "sigmas " + std::to_string(i) + " and " + std::to_string(j) +
                                   " are comparable"});
    if (std::none_of(c.entries.begin(), c.entries.end(),
                     [](const cert_entry& e) { return e.flag == 1; }))
        out.push_back({"has_witness", "no flag-1 entry in the prefix"});

    for (const auto& e : c.entries) check_entry_local(t, e, out);

    sigma_trie trie = trie_of(c);
    big_nat code_cap = seq_code(c.entries.back().sigma);
    size_t live_states = 0;
    {
        path_analysis a = analyze(t);
        for (bool b : a.live)
            if (b) ++live_states;
    }
    size_t horizon = std::max(depth, live_states + 2);

    // coverage: an uncovered word must sit below two incomparable
    // extendible extensions; a level with two extendible members
    // witnesses that
    for (const seq& w : bounded_words(depth, width, code_cap)) {
        if (trie.covers(w)) continue;
        auto shifted = [&](const seq& u) { return t.member(concat(w, u)); };
        bool split = false;
        for (size_t extra = 1; extra <= horizon && !split; ++extra)
            split = oracle::count_paths_capped(
                        shifted, oracle::budgets{extra, width, live_states + 2}, 2)
                        .value >= 2;
        if (!split)
            out.push_back({"coverage", "uncovered word " + seq_to_string(w) +
                                           " does not split into two points"});
    }

    // residue law to the budget: surviving words of T below the code
    // cap must be exactly the words of the derivative
    tree_automaton deriv = derivative(t);
    for (const seq& w : bounded_words(depth, width, code_cap)) {
        bool in_residue = false;
        auto st = t.run(w);
        if (st && !trie.covers(w)) {
            seq full = w;
            in_residue = avoid_extendible(t, trie, full, *st, live_states + 2);
        }
        bool in_derivative = deriv.member(w);
        if (in_residue != in_derivative)
            out.push_back({"residue", "word " + seq_to_string(w) +
                                          (in_residue ? " survives but left the derivative"
                                                      : " was removed but is in the derivative")});
    }
    return out;
}

std::vector<violation> verify_global(const tree_automaton& t, const global_cert& c,
                                     size_t depth, symbol width) {
    std::vector<violation> out;
    if (c.levels.empty()) {
        out.push_back({"levels", "global certificate has no levels"});
        return out;
    }

    tree_automaton cur = t;
    for (size_t i = 0; i < c.levels.size(); ++i) {
        for (auto& v : verify_one_step(cur, c.levels[i].cert, depth, width))
            out.push_back({"level " + std::to_string(i) + " " + v.clause, v.detail});
        cur = derivative(cur);
    }
    if (body_cardinality(cur).tag != card_tag::empty)
        out.push_back({"chain_complete", "points remain after the last level"});

    std::vector<uint64_t> seen(c.levels.size(), 0);
    bool perm = true;
    for (const auto& lvl : c.levels) {
        if (lvl.index >= c.levels.size() || seen[lvl.index]++) perm = false;
    }
    if (!perm) out.push_back({"index_permutation", "level indices are not 0..L-1"});

    if (perm) {
        std::vector<const global_level*> by_index(c.levels.size());
        for (const auto& lvl : c.levels) by_index[lvl.index] = &lvl;
        std::optional<big_nat> prev;
        for (const auto* lvl : by_index) {
            auto it = std::find_if(lvl->cert.entries.begin(), lvl->cert.entries.end(),
                                   [](const cert_entry& e) { return e.flag == 1; });
            if (it == lvl->cert.entries.end()) {
                out.push_back({"ordering", "a level prefix has no flag-1 witness"});
                break;
            }
            big_nat code = seq_code(it->sigma);
            if (prev && !(*prev < code)) {
                out.push_back({"ordering", "witness codes do not increase with the index"});
                break;
            }
            prev = std::move(code);
        }
    }
    return out;
}

} // namespace cbtree
