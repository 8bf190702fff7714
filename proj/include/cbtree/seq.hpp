#pragma once

#include <cstdint>
#include <vector>

#include "cbtree/bignat.hpp"

namespace cbtree {

using symbol = uint64_t;

// A finite sequence of naturals. Binary sequences are the special case
// where every digit is 0 or 1.
using seq = std::vector<symbol>;

bool is_prefix(const seq& s, const seq& t);          // s ⊑ t
bool is_proper_prefix(const seq& s, const seq& t);   // s ⊏ t
bool incomparable(const seq& s, const seq& t);

seq concat(const seq& s, const seq& t);

// Cantor pairing (a+b)(a+b+1)/2 + b, fixed globally: it orders the
// sequence coding and the interleaved-stream layout of ell/project.
uint64_t cantor_pair(uint64_t a, uint64_t b);
big_nat cantor_pair(const big_nat& a, const big_nat& b);
std::pair<big_nat, big_nat> cantor_unpair(const big_nat& z);

// Prefix-monotone bijection between sequences and naturals:
// code(<>) = 0, code(s + <n>) = pair(code(s), n) + 1.
big_nat seq_code(const seq& s);
seq seq_decode(big_nat code);

// s*t, the positionwise interleaving of two equal-length sequences.
seq interleave_fin(const seq& s, const seq& t);

// Layout of countably many streams joined along the pairing:
// ell(s) counts the streams touched by a prefix of length |s|, and
// project(i, s) recovers the prefix of stream i.
uint64_t ell(const seq& s);
seq project(uint64_t i, const seq& s);

// Zero-block translations between Baire and Cantor sequences:
// tau_c_fin(s) = 0^s(0) 1 0^s(1) 1 ... 0^s(|s|-1) 1, and tau_b_fin
// decodes the blocks up to the last 1.
seq tau_c_fin(const seq& s);
seq tau_b_fin(const seq& t);

std::string seq_to_string(const seq& s);

} // namespace cbtree
