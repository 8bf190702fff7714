#include "cbtree/seq.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cbtree {

bool is_prefix(const seq& s, const seq& t) {
    return s.size() <= t.size() && std::equal(s.begin(), s.end(), t.begin());
}

bool is_proper_prefix(const seq& s, const seq& t) {
    return s.size() < t.size() && std::equal(s.begin(), s.end(), t.begin());
}

bool incomparable(const seq& s, const seq& t) {
    return !is_prefix(s, t) && !is_prefix(t, s);
}

seq concat(const seq& s, const seq& t) {
    seq r = s;
    r.insert(r.end(), t.begin(), t.end());
    return r;
}

uint64_t cantor_pair(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    if (s < a || s > 0xffffffffull)
        throw std::overflow_error("cantor_pair operands too large for 64 bits");
    return s * (s + 1) / 2 + b;
}

big_nat cantor_pair(const big_nat& a, const big_nat& b) {
    big_nat s = a + b;
    return (s * (s + big_nat(1))).half() + b;
}

std::pair<big_nat, big_nat> cantor_unpair(const big_nat& z) {
    // w = floor((sqrt(8z+1)-1)/2) is the diagonal index
    big_nat w = ((z * big_nat(8) + big_nat(1)).isqrt() - big_nat(1)).half();
    big_nat t = (w * (w + big_nat(1))).half();
    big_nat b = z - t;
    return {w - b, b};
}

big_nat seq_code(const seq& s) {
    big_nat c;
    for (symbol d : s) c = cantor_pair(c, big_nat(d)) + big_nat(1);
    return c;
}

seq seq_decode(big_nat code) {
    seq out;
    while (!code.is_zero()) {
        auto [rest, digit] = cantor_unpair(code - big_nat(1));
        if (!digit.fits_u64())
            throw std::overflow_error("decoded digit does not fit in 64 bits");
        out.push_back(digit.to_u64());
        code = rest;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

seq interleave_fin(const seq& s, const seq& t) {
    if (s.size() != t.size())
        throw std::invalid_argument("interleave_fin: length mismatch");
    seq r;
    r.reserve(2 * s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        r.push_back(s[i]);
        r.push_back(t[i]);
    }
    return r;
}

uint64_t ell(const seq& s) {
    uint64_t i = 0;
    while (cantor_pair(i, 0) < s.size()) ++i;
    return i;
}

seq project(uint64_t i, const seq& s) {
    if (i >= ell(s)) throw std::out_of_range("project: stream index out of range");
    seq r;
    for (uint64_t j = 0;; ++j) {
        uint64_t pos = cantor_pair(i, j);
        if (pos >= s.size()) break;
        r.push_back(s[pos]);
    }
    return r;
}

seq tau_c_fin(const seq& s) {
    seq r;
    for (symbol d : s) {
        r.insert(r.end(), d, 0);
        r.push_back(1);
    }
    return r;
}

seq tau_b_fin(const seq& t) {
    seq r;
    uint64_t run = 0;
    for (symbol d : t) {
        if (d == 0) {
            ++run;
        } else if (d == 1) {
            r.push_back(run);
            run = 0;
        } else {
            throw std::invalid_argument("tau_b_fin: input is not a binary sequence");
        }
    }
    return r; // digits after the last 1 are discarded
}

std::string seq_to_string(const seq& s) {
    std::string out = "[";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

} // namespace cbtree
