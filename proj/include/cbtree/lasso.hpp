#pragma once

#include <string>

#include "cbtree/seq.hpp"

namespace cbtree {

// An eventually periodic infinite word prefix . cycle^w, kept in normal
// form: the cycle has minimal period and the prefix is rolled back as
// far as possible, so denotation equality is structural equality.
struct lasso {
    seq prefix;
    seq cycle;

    lasso() : cycle{0} {}
    lasso(seq pre, seq cyc);

    symbol at(uint64_t n) const;
    seq first(uint64_t n) const;

    bool operator==(const lasso& o) const = default;

    // lexicographic on (code(prefix), code(cycle)); the canonical order
    // used by every path enumeration
    static bool canonical_less(const lasso& a, const lasso& b);

    std::string to_string() const;
};

inline lasso constant_lasso(symbol n) { return lasso({}, {n}); }

bool lasso_eq(const lasso& a, const lasso& b);

// Translations lifted to eventually periodic words. tau_b_lasso rejects
// words with finitely many ones (all-zero cycle).
lasso tau_c_lasso(const lasso& p);
lasso tau_b_lasso(const lasso& q);

} // namespace cbtree
