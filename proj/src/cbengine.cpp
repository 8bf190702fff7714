#include "cbtree/cbengine.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace cbtree {

namespace {

tree_automaton keep_classes(const tree_automaton& t, bool continuum_only) {
    if (t.empty_language()) return {};
    path_analysis a = analyze(t);
    std::vector<bool> keep(t.num_states(), false);
    for (size_t s = 0; s < t.num_states(); ++s) {
        if (!a.live[s]) continue;
        if (continuum_only)
            keep[s] = a.cls[s].tag == card_tag::continuum;
        else
            keep[s] = !a.cls[s].at_most_one();
    }
    if (!keep[t.root()]) return {};
    return t.restrict_states(keep).prune();
}

} // namespace

tree_automaton derivative(const tree_automaton& t) { return keep_classes(t, false); }

tree_automaton perfect_kernel(const tree_automaton& t) { return keep_classes(t, true); }

uint64_t cb_rank(const tree_automaton& t) {
    tree_automaton cur = t;
    for (uint64_t r = 0;; ++r) {
        tree_automaton next = derivative(cur);
        if (tree_equal(cur, next)) return r;
        if (r > t.num_states())
            throw std::logic_error("cb_rank: derivative chain did not stabilize");
        cur = std::move(next);
    }
}

namespace {

// scattered-part structure of a tree with uncountable body: the
// continuum region reachable from the root, its exits into live
// countable subtrees, and whether infinitely many such exits can be
// reached (a cycle on the way to one)
struct scattered_structure {
    path_analysis a;
    std::vector<bool> region;        // continuum states reachable via continuum states
    std::vector<bool> reaches_exit;  // region states that reach an exit edge
    bool infinite_prefixes = false;
    struct exit_edge {
        size_t from;
        symbol label;
        size_t to;
    };
    std::vector<exit_edge> exits;
};

scattered_structure analyze_scattered(const tree_automaton& t) {
    scattered_structure s;
    s.a = analyze(t);
    size_t n = t.num_states();
    s.region.assign(n, false);
    s.reaches_exit.assign(n, false);
    if (t.empty_language() || s.a.root_class(t).tag != card_tag::continuum) return s;

    std::vector<size_t> queue{t.root()};
    s.region[t.root()] = true;
    for (size_t i = 0; i < queue.size(); ++i) {
        size_t x = queue[i];
        for (const auto& [label, to] : t.out(x)) {
            if (!s.a.live[to]) continue;
            if (s.a.cls[to].tag == card_tag::continuum) {
                if (!s.region[to]) {
                    s.region[to] = true;
                    queue.push_back(to);
                }
            } else {
                s.exits.push_back({x, label, to});
            }
        }
    }

    std::vector<bool> is_source(n, false);
    for (const auto& e : s.exits) is_source[e.from] = true;
    std::vector<std::vector<size_t>> rev(n);
    for (size_t x = 0; x < n; ++x)
        if (s.region[x])
            for (const auto& [label, to] : t.out(x))
                if (s.region[to]) rev[to].push_back(x);
    std::vector<size_t> rq;
    for (size_t x = 0; x < n; ++x)
        if (s.region[x] && is_source[x]) {
            s.reaches_exit[x] = true;
            rq.push_back(x);
        }
    for (size_t i = 0; i < rq.size(); ++i)
        for (size_t p : rev[rq[i]])
            if (!s.reaches_exit[p]) {
                s.reaches_exit[p] = true;
                rq.push_back(p);
            }

    for (size_t x = 0; x < n; ++x)
        if (s.reaches_exit[x] && s.a.scc_nontrivial[s.a.scc_id[x]])
            s.infinite_prefixes = true;
    return s;
}

} // namespace

cardinality scattered_cardinality(const tree_automaton& t) {
    path_analysis a = analyze(t);
    cardinality whole = a.root_class(t);
    if (whole.tag == card_tag::empty) return card_empty();
    if (whole.at_most_countable()) return whole; // empty kernel

    scattered_structure s = analyze_scattered(t);
    if (s.exits.empty()) return card_empty();
    for (const auto& e : s.exits)
        if (s.a.cls[e.to].tag == card_tag::countable) return card_countable();
    if (s.infinite_prefixes) return card_countable();

    // finitely many region walks: count them over the DAG; SCC ids of
    // successors are smaller, so descending id order is topological
    size_t n = t.num_states();
    std::vector<size_t> order;
    for (size_t x = 0; x < n; ++x)
        if (s.reaches_exit[x]) order.push_back(x);
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return s.a.scc_id[x] > s.a.scc_id[y];
    });
    std::vector<uint64_t> walks(n, 0);
    walks[t.root()] = 1;
    for (size_t x : order)
        for (const auto& [label, to] : t.out(x))
            if (s.reaches_exit[to]) walks[to] += walks[x];
    uint64_t total = 0;
    for (const auto& e : s.exits) total += walks[e.from] * s.a.cls[e.to].count;
    return total ? card_finite(total) : card_empty();
}

uint64_t scattered_count(const tree_automaton& t) {
    cardinality sc = scattered_cardinality(t);
    switch (sc.tag) {
        case card_tag::empty: return 1;
        case card_tag::finite: return sc.count + 1;
        default: return 0;
    }
}

namespace {

struct code_item {
    big_nat code;
    seq word;
    size_t state;
    bool operator>(const code_item& o) const { return o.code < code; }
};

using code_queue =
    std::priority_queue<code_item, std::vector<code_item>, std::greater<code_item>>;

} // namespace

std::vector<countable_region> minimal_countable_prefixes(const tree_automaton& t,
                                                         size_t max_count) {
    std::vector<countable_region> out;
    if (t.empty_language() || max_count == 0) return out;
    path_analysis a = analyze(t);
    if (!a.live[t.root()]) return out;
    scattered_structure s = analyze_scattered(t);

    code_queue pq;
    pq.push({big_nat(), {}, t.root()});
    while (!pq.empty() && out.size() < max_count) {
        code_item item = pq.top();
        pq.pop();
        if (a.cls[item.state].at_most_countable()) {
            out.push_back({item.word, item.state});
            continue;
        }
        for (const auto& [label, to] : t.out(item.state)) {
            if (!a.live[to]) continue;
            bool candidate = a.cls[to].at_most_countable();
            if (!candidate && !s.reaches_exit[to]) continue; // never yields
            seq w = item.word;
            w.push_back(label);
            pq.push({cantor_pair(item.code, big_nat(label)) + big_nat(1), std::move(w), to});
        }
    }
    return out;
}

std::vector<scattered_entry> scattered_list(const tree_automaton& t, size_t k) {
    std::vector<scattered_entry> out;
    cardinality sc = scattered_cardinality(t);
    uint64_t remaining_points =
        sc.tag == card_tag::finite ? sc.count : (sc.tag == card_tag::empty ? 0 : UINT64_MAX);

    struct generator {
        seq prefix;
        tree_automaton sub;
        std::vector<lasso> paths;
        bool exhausted = false;
    };
    std::vector<generator> gens;
    bool no_more_gens = remaining_points == 0;

    auto ensure_generator = [&](size_t i) {
        if (no_more_gens || i < gens.size()) return i < gens.size();
        auto regions = minimal_countable_prefixes(t, i + 1);
        for (size_t g = gens.size(); g < regions.size(); ++g)
            gens.push_back({regions[g].prefix, t.rooted_at(regions[g].state), {}, false});
        if (regions.size() <= i) no_more_gens = true;
        return i < gens.size();
    };

    for (size_t d = 0; out.size() < k && remaining_points > 0; ++d) {
        if (d > 100000) throw std::logic_error("scattered_list: diagonal budget exceeded");
        for (size_t i = 0; i <= d && out.size() < k && remaining_points > 0; ++i) {
            size_t j = d - i;
            if (!ensure_generator(i)) break;
            auto& g = gens[i];
            if (g.exhausted && g.paths.size() <= j) continue;
            if (g.paths.size() <= j) {
                g.paths = enumerate_paths(g.sub, j + 1);
                if (g.paths.size() <= j) g.exhausted = true;
            }
            if (g.paths.size() > j) {
                const lasso& p = g.paths[j];
                out.push_back({1, lasso(concat(g.prefix, p.prefix), p.cycle)});
                if (remaining_points != UINT64_MAX) --remaining_points;
            }
        }
    }
    while (out.size() < k) out.push_back({0, constant_lasso(0)});
    return out;
}

cb_full_result cb_full(const tree_automaton& t, size_t k) {
    cb_full_result r;
    r.report.kernel = perfect_kernel(t);
    r.report.rank = cb_rank(t);
    r.report.scattered = scattered_cardinality(t);
    r.report.sccount_code = scattered_count(t);
    r.entries = scattered_list(t, k);
    return r;
}

list_result list_countable(const tree_automaton& t, size_t k) {
    cardinality cls = body_cardinality(t);
    if (cls.tag == card_tag::continuum)
        throw std::invalid_argument("list_countable: body is uncountable");
    list_result r;
    r.tag = cls.tag == card_tag::countable ? 0 : cls.count + 1;
    for (const lasso& p : enumerate_paths(t, k)) r.entries.push_back({1, p});
    while (r.entries.size() < k) r.entries.push_back({0, constant_lasso(0)});
    return r;
}

std::vector<lasso> dedup_list(uint64_t tag, const std::vector<scattered_entry>& entries) {
    std::vector<lasso> out;
    for (const auto& e : entries) {
        if (e.flag != 1) continue;
        if (std::find(out.begin(), out.end(), e.point) != out.end()) continue;
        out.push_back(e.point);
        if (tag > 0 && out.size() == tag - 1) break;
    }
    return out;
}

} // namespace cbtree
