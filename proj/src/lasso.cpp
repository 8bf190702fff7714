#include "cbtree/lasso.hpp"

#include <algorithm>
#include <stdexcept>

namespace cbtree {

namespace {

seq minimal_period(const seq& v) {
    for (size_t p = 1; p <= v.size(); ++p) {
        if (v.size() % p) continue;
        bool ok = true;
        for (size_t i = p; i < v.size() && ok; ++i) ok = v[i] == v[i - p];
        if (ok) return seq(v.begin(), v.begin() + p);
    }
    return v;
}

} // namespace

lasso::lasso(seq pre, seq cyc) : prefix(std::move(pre)), cycle(std::move(cyc)) {
    if (cycle.empty()) throw std::invalid_argument("lasso: empty cycle");
    cycle = minimal_period(cycle);
    while (!prefix.empty() && prefix.back() == cycle.back()) {
        prefix.pop_back();
        std::rotate(cycle.begin(), cycle.end() - 1, cycle.end());
    }
}

symbol lasso::at(uint64_t n) const {
    if (n < prefix.size()) return prefix[n];
    return cycle[(n - prefix.size()) % cycle.size()];
}

seq lasso::first(uint64_t n) const {
    seq r;
    r.reserve(n);
    for (uint64_t i = 0; i < n; ++i) r.push_back(at(i));
    return r;
}

bool lasso::canonical_less(const lasso& a, const lasso& b) {
    big_nat pa = seq_code(a.prefix), pb = seq_code(b.prefix);
    if (pa != pb) return pa < pb;
    return seq_code(a.cycle) < seq_code(b.cycle);
}

std::string lasso::to_string() const {
    return seq_to_string(prefix) + "(" + seq_to_string(cycle) + ")^w";
}

bool lasso_eq(const lasso& a, const lasso& b) { return a == b; }

lasso tau_c_lasso(const lasso& p) {
    return lasso(tau_c_fin(p.prefix), tau_c_fin(p.cycle));
}

lasso tau_b_lasso(const lasso& q) {
    if (std::all_of(q.cycle.begin(), q.cycle.end(), [](symbol d) { return d == 0; }))
        throw std::invalid_argument("tau_b_lasso: word has finitely many ones");

    // Parse zero-blocks across prefix then cycle. After one full pass
    // over the cycle the pending zero-run equals the cycle's trailing
    // zeros, so a second pass yields the repeating digit block.
    uint64_t pending = 0;
    auto scan = [&pending](const seq& w) {
        seq digits;
        for (symbol d : w) {
            if (d == 0) {
                ++pending;
            } else if (d == 1) {
                digits.push_back(pending);
                pending = 0;
            } else {
                throw std::invalid_argument("tau_b_lasso: input is not binary");
            }
        }
        return digits;
    };
    seq head = scan(q.prefix);
    seq pass1 = scan(q.cycle);
    seq pass2 = scan(q.cycle);
    return lasso(concat(head, pass1), pass2);
}

} // namespace cbtree
