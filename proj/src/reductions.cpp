#include "cbtree/reductions.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "cbtree/cbengine.hpp"
#include "cbtree/combinators.hpp"

namespace cbtree {

namespace {

std::string summarize(const tree_automaton& t) {
    return std::to_string(t.num_states()) + " states, |body|=" +
           body_cardinality(t).to_string();
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

tree_automaton zero_path_tree() {
    tree_automaton t;
    size_t s = t.add_state();
    t.add_edge(s, 0, s);
    t.set_root(s);
    return t;
}

} // namespace

reduction_report r1_ptt_binary(const tree_automaton& t) {
    if (body_cardinality(t).tag != card_tag::continuum)
        throw std::invalid_argument("r1: body must be uncountable");
    reduction_report r;
    r.name = "r1";
    r.instance_summary = summarize(t);

    tree_automaton forward = translate_tree_to_binary(t);
    tree_automaton solution = perfect_kernel(forward);
    tree_automaton back = translate_tree_to_baire(solution);

    bool nonempty = !back.empty_language();
    bool perfect = is_perfect_tree(back);
    bool subset = tree_subset(back, t);
    r.decoded_answer = "perfect=" + bool_str(perfect) + " subset=" + bool_str(subset) +
                       " nonempty=" + bool_str(nonempty);
    r.ground_truth = "perfect=true subset=true nonempty=true";
    r.agrees = nonempty && perfect && subset;
    r.details.push_back("backward tree: " + std::to_string(back.num_states()) + " states");
    return r;
}

namespace {

// all live words of length n+1 from s are exactly 0^n 1
bool only_zero_block_survives(const tree_automaton& p, const path_analysis& a, size_t s,
                              uint64_t n) {
    if (s == tree_automaton::npos || !a.live[s]) return true;
    size_t x = s;
    for (uint64_t j = 0; j < n; ++j) {
        auto one = p.out(x).find(1);
        if (one != p.out(x).end() && a.live[one->second]) return false;
        auto zero = p.out(x).find(0);
        if (zero == p.out(x).end() || !a.live[zero->second]) return true;
        x = zero->second;
    }
    auto zero = p.out(x).find(0);
    return zero == p.out(x).end() || !a.live[zero->second];
}

} // namespace

seq r2_decode(const tree_automaton& solution, size_t digits) {
    if (solution.empty_language())
        throw std::invalid_argument("r2_decode: empty solution tree");
    path_analysis a = analyze(solution);
    uint64_t bound = solution.num_states() * (solution.max_label() + 2) + 2;

    // states reachable by the block words 0^d(0) 1 x_0 ... 0^d(i-1) 1 x_{i-1}
    std::set<size_t> block_states{solution.root()};
    seq out;
    for (size_t i = 0; i < digits; ++i) {
        std::optional<uint64_t> digit;
        for (uint64_t n = 0; n <= bound && !digit; ++n) {
            bool ok = true;
            for (size_t s : block_states)
                if (!only_zero_block_survives(solution, a, s, n)) {
                    ok = false;
                    break;
                }
            if (ok) digit = n;
        }
        if (!digit)
            throw std::runtime_error("r2_decode: digit search exceeded its bound");
        out.push_back(*digit);

        std::set<size_t> next;
        for (size_t s : block_states) {
            seq block(*digit, 0);
            block.push_back(1);
            for (const seq& xi : {seq{1}, seq{0, 1}}) {
                size_t cur = s;
                bool alive = true;
                for (symbol d : concat(block, xi)) {
                    auto it = solution.out(cur).find(d);
                    if (it == solution.out(cur).end()) {
                        alive = false;
                        break;
                    }
                    cur = it->second;
                }
                if (alive) next.insert(cur);
            }
        }
        if (next.empty())
            throw std::runtime_error("r2_decode: no block continuation in the solution");
        block_states = std::move(next);
    }
    return out;
}

tree_automaton random_perfect_subsolution(const tree_automaton& s, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution drop(0.25);
    tree_automaton sub;
    for (size_t i = 0; i < s.num_states(); ++i) sub.add_state(s.name(i));
    for (size_t i = 0; i < s.num_states(); ++i)
        for (const auto& [label, to] : s.out(i))
            if (!drop(rng)) sub.add_edge(i, label, to);
    sub.set_root(s.root());
    return perfect_kernel(sub);
}

reduction_report r2_ucbaire_pst(const tree_automaton& t, size_t digits) {
    if (!body_cardinality(t).at_most_one() || is_wellfounded(t))
        throw std::invalid_argument("r2: body must be a single path");
    reduction_report r;
    r.name = "r2";
    r.instance_summary = summarize(t);

    tree_automaton forward = translate_tree_to_binary(explode(t));
    tree_automaton solution = perfect_kernel(forward);
    seq decoded = r2_decode(solution, digits);
    seq truth = enumerate_paths(t, 1).at(0).first(digits);

    r.decoded_answer = seq_to_string(decoded);
    r.ground_truth = seq_to_string(truth);
    r.agrees = decoded == truth;
    return r;
}

reduction_report r3_wf_encodings(const tree_automaton& t) {
    reduction_report r;
    r.name = "r3";
    r.instance_summary = summarize(t);

    bool wf = is_wellfounded(t);
    bool exploded_countable = body_cardinality(explode(t)).at_most_countable();
    tree_automaton ub_encoding = disjoint_union({zero_path_tree(), t});
    bool unique_branch = body_cardinality(ub_encoding) == card_finite(1);

    r.decoded_answer = "explode_countable=" + bool_str(exploded_countable) +
                       " ub=" + bool_str(unique_branch);
    r.ground_truth = "wf=" + bool_str(wf);
    r.agrees = exploded_countable == wf && unique_branch == wf;
    return r;
}

namespace {

// determinized {j^n s : j < fan, s ∈ E}: from a spine state the next
// symbol may either extend the spine or start an E-run
tree_automaton spined_language(const tree_automaton& e, uint64_t fan) {
    if (e.empty_language()) throw std::logic_error("spined_language: empty member");

    size_t n = e.num_states();
    size_t root_nfa = n + fan;
    auto nfa_step = [&](size_t q, symbol x) {
        std::set<size_t> to;
        if (q < n) {
            auto it = e.out(q).find(x);
            if (it != e.out(q).end()) to.insert(it->second);
        } else {
            if (q == root_nfa && x < fan) to.insert(n + x);
            if (q != root_nfa && x == q - n) to.insert(q);
            auto it = e.out(e.root()).find(x);
            if (it != e.out(e.root()).end()) to.insert(it->second);
        }
        return to;
    };
    auto labels_of = [&](size_t q) {
        std::set<symbol> ls;
        if (q < n) {
            for (const auto& [label, to] : e.out(q)) ls.insert(label);
        } else {
            if (q == root_nfa)
                for (uint64_t j = 0; j < fan; ++j) ls.insert(j);
            else
                ls.insert(q - n);
            for (const auto& [label, to] : e.out(e.root())) ls.insert(label);
        }
        return ls;
    };

    tree_automaton out;
    std::map<std::set<size_t>, size_t> remap;
    std::vector<std::set<size_t>> queue;
    auto intern = [&](std::set<size_t> subset) {
        auto it = remap.find(subset);
        if (it != remap.end()) return it->second;
        size_t idx = out.add_state();
        remap.emplace(subset, idx);
        queue.push_back(std::move(subset));
        return idx;
    };
    out.set_root(intern({root_nfa}));
    for (size_t i = 0; i < queue.size(); ++i) {
        std::set<size_t> subset = queue[i];
        size_t from = remap.at(subset);
        std::set<symbol> labels;
        for (size_t q : subset) {
            auto ls = labels_of(q);
            labels.insert(ls.begin(), ls.end());
        }
        for (symbol x : labels) {
            std::set<size_t> target;
            for (size_t q : subset) {
                auto to = nfa_step(q, x);
                target.insert(to.begin(), to.end());
            }
            if (!target.empty()) out.add_edge(from, x, intern(std::move(target)));
        }
    }
    return out;
}

} // namespace

reduction_report r4_wfstar_sccount(const std::vector<tree_automaton>& ts) {
    if (ts.empty()) throw std::invalid_argument("r4: empty family");
    reduction_report r;
    r.name = "r4";
    r.instance_summary = std::to_string(ts.size()) + " trees";

    std::vector<tree_automaton> spined;
    for (size_t m = 0; m < ts.size(); ++m)
        spined.push_back(spined_language(explode(ts[m]), uint64_t{1} << m));
    uint64_t k = scattered_count(disjoint_union(spined));

    std::string bits, truth_bits;
    bool agrees = k > 0;
    uint64_t payload = k > 0 ? k - 1 : 0;
    for (size_t m = 0; m < ts.size(); ++m) {
        bool decoded_wf = (payload >> m) & 1;
        bool wf = is_wellfounded(ts[m]);
        bits += decoded_wf ? '1' : '0';
        truth_bits += wf ? '1' : '0';
        agrees = agrees && decoded_wf == wf;
    }
    agrees = agrees && payload < (uint64_t{1} << ts.size());

    r.decoded_answer = "k=" + std::to_string(k) + " bits=" + bits;
    r.ground_truth = "bits=" + truth_bits;
    r.agrees = agrees;
    return r;
}

reduction_report r5_wfs_pk(const tree_automaton& t) {
    reduction_report r;
    r.name = "r5";
    r.instance_summary = summarize(t);

    tree_automaton forward = translate_tree_to_binary(explode(t));
    bool kernel_empty = perfect_kernel(forward).empty_language();
    bool wf = is_wellfounded(t);

    r.decoded_answer = "kernel_empty=" + bool_str(kernel_empty);
    r.ground_truth = "wf=" + bool_str(wf);
    r.agrees = kernel_empty == wf;
    return r;
}

reduction_report r6_lpo_list(const std::vector<lasso>& ps) {
    reduction_report r;
    r.name = "r6";
    r.instance_summary = std::to_string(ps.size()) + " words";
    size_t n = ps.size();
    lasso zero = constant_lasso(0);

    std::vector<bool> lpo;
    for (const lasso& p : ps) {
        for (symbol d : p.prefix)
            if (d > 1) throw std::invalid_argument("r6: words must be binary");
        for (symbol d : p.cycle)
            if (d > 1) throw std::invalid_argument("r6: words must be binary");
        lpo.push_back(lasso_eq(p, zero));
    }

    // listing built from the LPO answers
    struct item {
        int flag;
        uint64_t value;
    };
    std::vector<item> listing;
    for (size_t i = 0; i < n; ++i) listing.push_back({lpo[i] ? 1 : 0, i});

    // LPO answers decoded back from the listing
    std::vector<bool> decoded(n, false);
    for (const item& it : listing)
        if (it.flag == 1) decoded[it.value] = true;

    std::string set_str = "{", truth_str = "{";
    bool agrees = true;
    for (size_t i = 0; i < n; ++i) {
        agrees = agrees && decoded[i] == lpo[i];
        if (decoded[i]) set_str += (set_str.size() > 1 ? "," : "") + std::to_string(i);
        if (lpo[i]) truth_str += (truth_str.size() > 1 ? "," : "") + std::to_string(i);
    }
    r.decoded_answer = "A=" + set_str + "}";
    r.ground_truth = "A=" + truth_str + "}";
    r.agrees = agrees;
    return r;
}

reduction_report r7_wf_wsclist(const tree_automaton& t) {
    reduction_report r;
    r.name = "r7";
    r.instance_summary = summarize(t);

    tree_automaton forward =
        binary_disjoint_union_const(translate_tree_to_binary(explode(t)));
    lasso zero = constant_lasso(0);
    bool zero_in_kernel = lasso_member(perfect_kernel(forward), zero);
    bool decoded_wf = !zero_in_kernel; // 0^w is always a path of the union
    bool wf = is_wellfounded(t);

    r.decoded_answer = "wf=" + bool_str(decoded_wf);
    r.ground_truth = "wf=" + bool_str(wf);
    r.agrees = decoded_wf == wf;
    return r;
}

reduction_report r8_pk_slices(const std::vector<tree_automaton>& ts) {
    if (ts.empty()) throw std::invalid_argument("r8: empty family");
    reduction_report r;
    r.name = "r8";
    r.instance_summary = std::to_string(ts.size()) + " trees";

    tree_automaton kernel = perfect_kernel(disjoint_union(ts));
    bool agrees = true;
    std::string decoded, truth;
    for (size_t i = 0; i < ts.size(); ++i) {
        seq branch{i};
        tree_automaton slice =
            kernel.member(branch) ? kernel.subtree(branch) : tree_automaton{};
        tree_automaton expected = perfect_kernel(ts[i]);
        bool ok = tree_equal(slice, expected);
        agrees = agrees && ok;
        decoded += (slice.empty_language() ? '0' : '1');
        truth += (expected.empty_language() ? '0' : '1');
    }
    r.decoded_answer = "slices=" + decoded;
    r.ground_truth = "kernels=" + truth;
    r.agrees = agrees;
    return r;
}

} // namespace cbtree
