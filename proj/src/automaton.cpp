#include "cbtree/automaton.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cbtree {

std::string cardinality::to_string() const {
    switch (tag) {
        case card_tag::empty: return "∅";
        case card_tag::finite: return std::to_string(count);
        case card_tag::countable: return "ℵ₀";
        case card_tag::continuum: return "2^ℵ₀";
    }
    return "?";
}

size_t tree_automaton::add_state(std::string name) {
    if (name.empty()) name = "q" + std::to_string(edges_.size());
    names_.push_back(std::move(name));
    edges_.emplace_back();
    return edges_.size() - 1;
}

void tree_automaton::add_edge(size_t from, symbol label, size_t to) {
    if (from >= edges_.size() || to >= edges_.size())
        throw std::out_of_range("tree_automaton::add_edge: bad state");
    auto [it, inserted] = edges_[from].emplace(label, to);
    if (!inserted && it->second != to)
        throw std::invalid_argument("tree_automaton::add_edge: nondeterministic edge");
}

bool tree_automaton::is_binary() const {
    for (const auto& m : edges_)
        for (const auto& [label, to] : m)
            if (label > 1) return false;
    return true;
}

symbol tree_automaton::max_label() const {
    symbol m = 0;
    for (const auto& e : edges_)
        if (!e.empty()) m = std::max(m, e.rbegin()->first);
    return m;
}

std::optional<size_t> tree_automaton::run(const seq& s) const {
    if (empty_language()) return std::nullopt;
    size_t cur = root_;
    for (symbol d : s) {
        auto it = edges_[cur].find(d);
        if (it == edges_[cur].end()) return std::nullopt;
        cur = it->second;
    }
    return cur;
}

namespace {

tree_automaton restrict_from(const tree_automaton& t, size_t start,
                             const std::vector<bool>* keep) {
    tree_automaton out;
    if (start == tree_automaton::npos || (keep && !(*keep)[start])) return out;
    std::vector<size_t> remap(t.num_states(), tree_automaton::npos);
    std::vector<size_t> queue{start};
    remap[start] = out.add_state(t.name(start));
    for (size_t i = 0; i < queue.size(); ++i) {
        size_t s = queue[i];
        for (const auto& [label, to] : t.out(s)) {
            if (keep && !(*keep)[to]) continue;
            if (remap[to] == tree_automaton::npos) {
                remap[to] = out.add_state(t.name(to));
                queue.push_back(to);
            }
        }
    }
    for (size_t s : queue)
        for (const auto& [label, to] : t.out(s))
            if (!keep || (*keep)[to]) out.add_edge(remap[s], label, remap[to]);
    out.set_root(remap[start]);
    return out;
}

// Iterative Tarjan; SCC ids come out in reverse topological order of
// the condensation (successors get smaller ids).
struct scc_result {
    std::vector<int> id;
    size_t count = 0;
};

scc_result strongly_connected_components(const tree_automaton& t) {
    size_t n = t.num_states();
    scc_result r;
    r.id.assign(n, -1);
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<size_t> stack;
    int next_index = 0;

    struct frame {
        size_t state;
        std::map<symbol, size_t>::const_iterator it;
    };

    for (size_t s0 = 0; s0 < n; ++s0) {
        if (index[s0] != -1) continue;
        std::vector<frame> frames;
        frames.push_back({s0, t.out(s0).begin()});
        index[s0] = low[s0] = next_index++;
        stack.push_back(s0);
        on_stack[s0] = true;
        while (!frames.empty()) {
            auto& f = frames.back();
            if (f.it != t.out(f.state).end()) {
                size_t to = f.it->second;
                ++f.it;
                if (index[to] == -1) {
                    index[to] = low[to] = next_index++;
                    stack.push_back(to);
                    on_stack[to] = true;
                    frames.push_back({to, t.out(to).begin()});
                } else if (on_stack[to]) {
                    low[f.state] = std::min(low[f.state], index[to]);
                }
            } else {
                size_t s = f.state;
                if (low[s] == index[s]) {
                    while (true) {
                        size_t w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        r.id[w] = static_cast<int>(r.count);
                        if (w == s) break;
                    }
                    ++r.count;
                }
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().state] = std::min(low[frames.back().state], low[s]);
            }
        }
    }
    return r;
}

uint64_t saturating_add(uint64_t a, uint64_t b) {
    return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

} // namespace

path_analysis analyze(const tree_automaton& t) {
    size_t n = t.num_states();
    path_analysis a;
    a.live.assign(n, false);
    a.scc_id.assign(n, -1);
    a.cls.assign(n, card_empty());
    if (n == 0) return a;

    scc_result scc = strongly_connected_components(t);
    std::vector<bool> nontrivial(scc.count, false);
    std::vector<size_t> scc_size(scc.count, 0);
    for (size_t s = 0; s < n; ++s) ++scc_size[scc.id[s]];
    for (size_t s = 0; s < n; ++s)
        for (const auto& [label, to] : t.out(s))
            if (scc.id[to] == scc.id[s] && (scc_size[scc.id[s]] > 1 || to == s))
                nontrivial[scc.id[s]] = true;

    // live = can reach a cycle
    std::vector<std::vector<size_t>> rev(n);
    for (size_t s = 0; s < n; ++s)
        for (const auto& [label, to] : t.out(s)) rev[to].push_back(s);
    std::vector<size_t> queue;
    for (size_t s = 0; s < n; ++s)
        if (nontrivial[scc.id[s]]) {
            a.live[s] = true;
            queue.push_back(s);
        }
    for (size_t i = 0; i < queue.size(); ++i)
        for (size_t p : rev[queue[i]])
            if (!a.live[p]) {
                a.live[p] = true;
                queue.push_back(p);
            }

    for (size_t s = 0; s < n; ++s)
        if (a.live[s]) a.scc_id[s] = scc.id[s];

    // per-SCC structure over the live subgraph
    std::vector<size_t> internal_edges(scc.count, 0);
    std::vector<bool> has_exit(scc.count, false);
    std::vector<bool> double_cycle(scc.count, false);
    for (size_t s = 0; s < n; ++s) {
        if (!a.live[s]) continue;
        for (const auto& [label, to] : t.out(s)) {
            if (!a.live[to]) continue;
            if (scc.id[to] == scc.id[s]) ++internal_edges[scc.id[s]];
            else if (nontrivial[scc.id[s]]) has_exit[scc.id[s]] = true;
        }
    }
    for (size_t c = 0; c < scc.count; ++c)
        if (nontrivial[c] && internal_edges[c] > scc_size[c]) double_cycle[c] = true;

    // propagate along the condensation; successors of an SCC have
    // smaller ids, so a single ascending pass suffices
    std::vector<bool> reaches_double = double_cycle;
    std::vector<bool> reaches_exit = has_exit;
    std::vector<std::vector<size_t>> members(scc.count);
    for (size_t s = 0; s < n; ++s)
        if (a.live[s]) members[scc.id[s]].push_back(s);
    std::vector<uint64_t> count(n, 0);
    for (size_t c = 0; c < scc.count; ++c) {
        for (size_t s : members[c]) {
            for (const auto& [label, to] : t.out(s)) {
                if (!a.live[to]) continue;
                size_t d = scc.id[to];
                if (d == c) continue;
                if (reaches_double[d]) reaches_double[c] = true;
                if (reaches_exit[d]) reaches_exit[c] = true;
            }
        }
        for (size_t s : members[c]) {
            if (nontrivial[c]) {
                count[s] = 1;
            } else {
                uint64_t total = 0;
                for (const auto& [label, to] : t.out(s))
                    if (a.live[to]) total = saturating_add(total, count[to]);
                count[s] = total;
            }
        }
    }

    for (size_t s = 0; s < n; ++s) {
        if (!a.live[s]) continue;
        size_t c = scc.id[s];
        if (reaches_double[c]) a.cls[s] = card_continuum();
        else if (reaches_exit[c]) a.cls[s] = card_countable();
        else a.cls[s] = card_finite(count[s]);
    }

    a.scc_nontrivial = std::move(nontrivial);
    return a;
}

cardinality path_analysis::root_class(const tree_automaton& t) const {
    if (t.empty_language() || !live[t.root()]) return card_empty();
    return cls[t.root()];
}

cardinality body_cardinality(const tree_automaton& t) {
    return analyze(t).root_class(t);
}

bool is_wellfounded(const tree_automaton& t) {
    return body_cardinality(t).tag == card_tag::empty;
}

tree_automaton tree_automaton::subtree(const seq& s) const {
    auto end = run(s);
    if (!end) throw std::invalid_argument("subtree: sequence not in tree");
    return restrict_from(*this, *end, nullptr);
}

tree_automaton tree_automaton::rooted_at(size_t s) const {
    if (s >= num_states()) throw std::out_of_range("rooted_at: bad state");
    return restrict_from(*this, s, nullptr);
}

tree_automaton tree_automaton::restrict_states(const std::vector<bool>& keep) const {
    if (empty_language()) return {};
    return restrict_from(*this, root_, &keep);
}

tree_automaton tree_automaton::prune() const {
    if (empty_language()) return {};
    path_analysis a = analyze(*this);
    if (!a.live[root_]) return {};
    return restrict_from(*this, root_, &a.live);
}

bool lasso_member(const tree_automaton& t, const lasso& p) {
    auto cur = t.run(p.prefix);
    if (!cur) return false;
    std::set<size_t> boundary;
    size_t s = *cur;
    while (boundary.insert(s).second) {
        for (symbol d : p.cycle) {
            auto it = t.out(s).find(d);
            if (it == t.out(s).end()) return false;
            s = it->second;
        }
    }
    return true;
}

namespace {

// label word around the (simple) cycle of s's SCC, starting at s
seq cycle_word(const tree_automaton& t, const path_analysis& a, size_t s) {
    seq w;
    size_t cur = s;
    do {
        bool advanced = false;
        for (const auto& [label, to] : t.out(cur)) {
            if (a.live[to] && a.scc_id[to] == a.scc_id[s]) {
                w.push_back(label);
                cur = to;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw std::logic_error("cycle_word: broken cycle");
    } while (cur != s);
    return w;
}

struct keyed_lasso {
    big_nat prefix_code, cycle_code;
    lasso value;
    bool operator<(const keyed_lasso& o) const {
        if (prefix_code != o.prefix_code) return prefix_code < o.prefix_code;
        return cycle_code < o.cycle_code;
    }
};

keyed_lasso make_keyed(lasso l) {
    big_nat pc = seq_code(l.prefix), cc = seq_code(l.cycle);
    return {std::move(pc), std::move(cc), std::move(l)};
}

// All paths that settle in a cycle within depth_limit steps. Candidates
// are emitted on first entry into each cycle SCC, which yields exactly
// one emission per path.
void collect_settled(const tree_automaton& t, const path_analysis& a,
                     size_t depth_limit, uint64_t visit_budget,
                     std::set<keyed_lasso>& out) {
    struct frame {
        size_t state;
        std::map<symbol, size_t>::const_iterator it;
    };
    std::vector<frame> stack;
    seq word;
    uint64_t visits = 0;

    auto enter = [&](size_t s, int parent_scc) {
        if (++visits > visit_budget)
            throw std::runtime_error("enumerate_paths: visit budget exceeded");
        if (a.scc_nontrivial[a.scc_id[s]] && a.scc_id[s] != parent_scc)
            out.insert(make_keyed(lasso(word, cycle_word(t, a, s))));
    };

    enter(t.root(), -1);
    stack.push_back({t.root(), t.out(t.root()).begin()});
    while (!stack.empty()) {
        auto& f = stack.back();
        bool pushed = false;
        while (f.it != t.out(f.state).end()) {
            auto [label, to] = *f.it;
            ++f.it;
            if (!a.live[to] || word.size() >= depth_limit) continue;
            word.push_back(label);
            enter(to, a.scc_id[f.state]);
            stack.push_back({to, t.out(to).begin()});
            pushed = true;
            break;
        }
        if (!pushed) {
            stack.pop_back();
            if (!word.empty()) word.pop_back();
        }
    }
}

} // namespace

std::vector<lasso> enumerate_paths(const tree_automaton& t, size_t k) {
    path_analysis a = analyze(t);
    cardinality cls = a.root_class(t);
    if (cls.tag == card_tag::continuum)
        throw std::invalid_argument("enumerate_paths: body has continuum many paths");
    if (cls.tag == card_tag::empty) return {};

    size_t live_states = 0;
    for (bool b : a.live)
        if (b) ++live_states;
    const uint64_t visit_budget = 20'000'000;
    const size_t depth_cap = 200'000;

    size_t depth = live_states + 2;
    std::set<keyed_lasso> found;
    while (true) {
        found.clear();
        collect_settled(t, a, depth, visit_budget, found);
        if (cls.tag == card_tag::finite) {
            if (found.size() != cls.count)
                throw std::logic_error("enumerate_paths: count mismatch with classifier");
            break;
        }
        if (found.size() >= k && k > 0) {
            auto it = found.begin();
            std::advance(it, k - 1);
            // any undiscovered path has |prefix| <= code of the k-th
            // prefix and cycle length <= live state count
            if (!it->prefix_code.fits_u64())
                throw std::runtime_error("enumerate_paths: prefix code exceeds budget");
            size_t need = it->prefix_code.to_u64() + live_states * live_states +
                          live_states + 2;
            if (depth >= need) break;
            depth = std::min(need, depth_cap);
            if (need > depth_cap)
                throw std::runtime_error("enumerate_paths: depth budget exceeded");
        } else {
            if (k == 0) break;
            if (depth >= depth_cap)
                throw std::runtime_error("enumerate_paths: depth budget exceeded");
            depth = std::min(depth * 2, depth_cap);
        }
    }

    std::vector<lasso> out;
    for (const auto& kl : found) {
        if (out.size() == k) break;
        out.push_back(kl.value);
    }
    return out;
}

bool tree_equal(const tree_automaton& a, const tree_automaton& b) {
    if (a.empty_language() || b.empty_language())
        return a.empty_language() == b.empty_language();
    std::set<std::pair<size_t, size_t>> seen;
    std::vector<std::pair<size_t, size_t>> queue{{a.root(), b.root()}};
    seen.insert(queue[0]);
    for (size_t i = 0; i < queue.size(); ++i) {
        auto [sa, sb] = queue[i];
        const auto& ea = a.out(sa);
        const auto& eb = b.out(sb);
        if (ea.size() != eb.size()) return false;
        auto ita = ea.begin();
        auto itb = eb.begin();
        for (; ita != ea.end(); ++ita, ++itb) {
            if (ita->first != itb->first) return false;
            if (seen.insert({ita->second, itb->second}).second)
                queue.push_back({ita->second, itb->second});
        }
    }
    return true;
}

bool tree_subset(const tree_automaton& a, const tree_automaton& b) {
    if (a.empty_language()) return true;
    if (b.empty_language()) return false;
    std::set<std::pair<size_t, size_t>> seen;
    std::vector<std::pair<size_t, size_t>> queue{{a.root(), b.root()}};
    seen.insert(queue[0]);
    for (size_t i = 0; i < queue.size(); ++i) {
        auto [sa, sb] = queue[i];
        for (const auto& [label, ta] : a.out(sa)) {
            auto it = b.out(sb).find(label);
            if (it == b.out(sb).end()) return false;
            if (seen.insert({ta, it->second}).second) queue.push_back({ta, it->second});
        }
    }
    return true;
}

bool is_perfect_tree(const tree_automaton& t) {
    if (t.empty_language()) return true;
    path_analysis a = analyze(t);
    std::vector<bool> visited(t.num_states(), false);
    std::vector<size_t> queue{t.root()};
    visited[t.root()] = true;
    for (size_t i = 0; i < queue.size(); ++i) {
        size_t s = queue[i];
        if (!a.live[s] || a.cls[s].tag != card_tag::continuum) return false;
        for (const auto& [label, to] : t.out(s))
            if (!visited[to]) {
                visited[to] = true;
                queue.push_back(to);
            }
    }
    return true;
}

} // namespace cbtree
